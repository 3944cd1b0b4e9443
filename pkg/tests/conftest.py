from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from skeinslide.coeff import LaurentPoly, RationalFn
from skeinslide.tl import TLElement, enumerate_basis

settings.register_profile("default", deadline=None)
settings.load_profile("default")

EVAL_POINTS = (Fraction(2), Fraction(-3), Fraction(1, 2))


@st.composite
def laurent(draw, lo: int = -6, hi: int = 6, max_terms: int = 5, coeff: int = 6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = draw(st.integers(lo, hi))
        terms[e] = draw(st.integers(-coeff, coeff))
    return LaurentPoly(terms)


@st.composite
def nonzero_laurent(draw, **kw):
    p = draw(laurent(**kw))
    if p.is_zero():
        p = LaurentPoly.monomial(draw(st.integers(-3, 3)), draw(st.sampled_from([1, -1, 2])))
    return p


@st.composite
def rational(draw):
    return RationalFn(draw(laurent(max_terms=3)), draw(nonzero_laurent(max_terms=3)))


@st.composite
def tl_element(draw, k: int, max_terms: int = 3):
    basis = enumerate_basis(k, k)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.sampled_from(basis))
        terms[d] = draw(laurent(lo=-3, hi=3, max_terms=2, coeff=3))
    return TLElement(k, k, terms)
