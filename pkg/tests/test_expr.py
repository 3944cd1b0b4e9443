from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from skeinslide.coeff import A
from skeinslide.expr import ParseError, parse_expr, parse_laurent, print_element
from skeinslide.sliding import w_id
from skeinslide.tl import TLElement, generator_e, identity, mirror_bar, word_element

from conftest import laurent, tl_element


def test_tl_relation_reduces():
    assert print_element(parse_expr("e1*e2*e1", 4)) == "e1"
    assert parse_expr("e1e2e1", 4) == parse_expr("e1", 4)


def test_bar_of_w2():
    assert print_element(parse_expr("bar(w(Id2))", 2)) == "A^-2*Id2 + (1 - A^4)*e1"


def test_scalar_means_multiple_of_identity():
    assert parse_expr("A^2 + e1", 2) == TLElement.of(identity(2), A**2) + TLElement.of(generator_e(2, 1))
    assert parse_expr("3", 4) == TLElement.of(identity(4), 3)


def test_strand_count_inference():
    assert parse_expr("Id3 + e1").m == 3
    assert parse_expr("e1*e3").m == 4
    with pytest.raises(ParseError):
        parse_expr("Id3 + Id4")
    with pytest.raises(ParseError):
        parse_expr("A^2")


def test_raw_pairing():
    x = parse_expr("[(L1,L2),(L3,R1),(L4,R4),(R2,R3)]")
    assert x == word_element(4, (1, 2))
    assert print_element(x, raw=True) == "[(L1,L2),(L3,R1),(L4,R4),(R2,R3)]"


def test_functions():
    assert parse_expr("w(Id3)") == w_id(3)
    assert parse_expr("bar(w(Id3))") == mirror_bar(w_id(3))
    assert parse_expr("phi_l(Id4)") == w_id(4).scale(A**6)
    assert parse_expr("sigma(e1)", 4) == parse_expr("e3", 4)


@pytest.mark.parametrize(
    "text, k",
    [
        ("e5", 4),
        ("e1 +", 4),
        ("(e1", 4),
        ("e1 ^ -1", 4),
        ("(1 + A)^-1", 4),
        ("w(e1)", 4),
        ("[(L1,R2),(L2,R1)]", None),
        ("e1 $ e2", 4),
        ("Id2 * Id3", None),
    ],
)
def test_parse_errors(text, k):
    with pytest.raises(ParseError):
        parse_expr(text, k)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_expr("e1 + e9", 4)
    assert info.value.position == 5


def test_parse_laurent():
    assert parse_laurent("A^10 - A^6") == A**10 - A**6
    assert parse_laurent("A^-2*(A^8 - 1)") == A**6 - A**-2
    with pytest.raises(ParseError):
        parse_laurent("e1 + 1")


@given(laurent())
def test_laurent_roundtrip(p):
    assert parse_laurent(str(p)) == p


@given(st.integers(2, 5).flatmap(lambda k: st.tuples(st.just(k), tl_element(k, max_terms=4))))
def test_print_parse_roundtrip(kx):
    k, x = kx
    assert parse_expr(print_element(x), k) == x
    assert parse_expr(print_element(x, raw=True), k) == x
