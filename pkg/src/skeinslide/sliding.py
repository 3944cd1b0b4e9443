"""Handle-slide elements and the relations they generate.

Sliding a bundle of ``k`` parallel strands over the attached 2-handle along
the lower arc gives ``A^6 * w(Id_k)`` where ``w`` satisfies::

    w(Id_2) = A^2 Id_2 + (1 - A^-4) e_1
    w(Id_k) = A^2 (w_{k-1} (x) Id_1)
              + (w_{k-1} (x) Id_1) e_{k-1}
              - A^-4 e_{k-1} (bar(w_{k-1}) (x) Id_1)

The upper-arc element is taken to be the top/bottom flip ``u = sigma(w)``,
and negative slides use the mirror image with ``A^-6``.  A diagram ``d``
with ``t >= 2`` through strands yields the relation
``d - front * phi_core(t) * back ~ 0`` where ``(t, front, back)`` is its
through-strand factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff import A, LaurentPoly
from .tl import (
    TLDiagram,
    TLElement,
    compose,
    enumerate_basis,
    flip_sigma,
    generator_e,
    identity,
    mirror_bar,
    tensor,
    through_structure,
)

__all__ = [
    "SlideVariant",
    "SlidingRelation",
    "LOWER_POS",
    "UPPER_POS",
    "LOWER_NEG",
    "UPPER_NEG",
    "ALL_VARIANTS",
    "parse_variants",
    "w_id",
    "u_id",
    "phi",
    "slide_relation",
    "relation_set",
    "U_ASSUMPTION",
]

#: stated in every report that depends on the upper-arc element
U_ASSUMPTION = "u(Id_k) is taken to be sigma(w(Id_k)) (top/bottom flip of the lower-arc element)"


@dataclass(frozen=True, order=True)
class SlideVariant:
    """One of the four 2-handle slides: lower/upper arc, positive/negative."""

    arc: str
    sign: str

    def __post_init__(self):
        if self.arc not in ("lower", "upper") or self.sign not in ("positive", "negative"):
            raise ValueError(f"bad slide variant {self.arc}/{self.sign}")

    @property
    def code(self) -> str:
        return self.arc + ("+" if self.sign == "positive" else "-")

    def __str__(self) -> str:
        return self.code


LOWER_POS = SlideVariant("lower", "positive")
UPPER_POS = SlideVariant("upper", "positive")
LOWER_NEG = SlideVariant("lower", "negative")
UPPER_NEG = SlideVariant("upper", "negative")
ALL_VARIANTS = (LOWER_POS, UPPER_POS, LOWER_NEG, UPPER_NEG)
_BY_CODE = {v.code: v for v in ALL_VARIANTS}


def parse_variants(text: str | Iterable[str]) -> tuple[SlideVariant, ...]:
    """``"lower+,upper-"`` or ``"all"`` -> variants in canonical order."""
    if isinstance(text, str):
        if text.strip() == "all":
            return ALL_VARIANTS
        parts = [p for p in text.replace(",", " ").split() if p]
    else:
        parts = list(text)
    chosen = set()
    for p in parts:
        if p not in _BY_CODE:
            raise ValueError(f"unknown slide variant {p!r}; choose from {sorted(_BY_CODE)}")
        chosen.add(_BY_CODE[p])
    return tuple(v for v in ALL_VARIANTS if v in chosen)


@dataclass(frozen=True)
class SlidingRelation:
    source: TLDiagram
    variant: SlideVariant
    vector: TLElement = field(compare=False)

    @property
    def through_degree(self) -> int:
        return self.source.through_degree


@lru_cache(maxsize=None)
def w_id(k: int) -> TLElement:
    """Lower-arc slide element ``w(Id_k)`` from the recursion."""
    if k < 2:
        raise ValueError(f"w(Id_k) needs k >= 2, got {k}")
    if k == 2:
        return TLElement.of(identity(2), A**2) + TLElement.of(generator_e(2, 1), 1 - A**-4)
    prev = w_id(k - 1)
    id1 = TLElement.of(identity(1))
    lifted = tensor(prev, id1)
    e = TLElement.of(generator_e(k, k - 1))
    return (
        lifted.scale(A**2)
        + compose(lifted, e)
        - compose(e, tensor(mirror_bar(prev), id1)).scale(A**-4)
    )


def u_id(k: int) -> TLElement:
    """Upper-arc slide element, defined as ``sigma(w(Id_k))``."""
    return flip_sigma(w_id(k))


@lru_cache(maxsize=None)
def phi(variant: SlideVariant, k: int) -> TLElement:
    """Result of sliding ``Id_k`` with the given variant."""
    if k < 2:
        raise ValueError(f"sliding needs at least two strands, got {k}")
    if variant == LOWER_POS:
        return w_id(k).scale(A**6)
    if variant == UPPER_POS:
        return u_id(k).scale(A**6)
    if variant == LOWER_NEG:
        return mirror_bar(w_id(k)).scale(A**-6)
    if variant == UPPER_NEG:
        return flip_sigma(mirror_bar(w_id(k))).scale(A**-6)
    raise ValueError(f"unknown variant {variant!r}")


@lru_cache(maxsize=None)
def slide_relation(d: TLDiagram, variant: SlideVariant) -> SlidingRelation:
    """The relation ``d - slide(d)`` for a basis diagram ``d``.

    The slide acts on the through-strand bundle of ``d``; diagrams with no
    through strands give the zero vector.
    """
    t, front, back = through_structure(d)
    if t == 0:
        return SlidingRelation(d, variant, TLElement.zero(d.m, d.n))
    if t == 1:
        raise ValueError("a single through strand has no sliding element")
    slid = compose(compose(front, phi(variant, t)), back)
    return SlidingRelation(d, variant, TLElement.of(d) - slid)


def relation_set(
    k: int,
    variants: Sequence[SlideVariant] = ALL_VARIANTS,
    min_through: int = 2,
) -> list[SlidingRelation]:
    """Sliding relations of every basis diagram of ``TL_k`` with enough through strands.

    Ordered by basis diagram, then by variant; zero vectors are dropped.
    """
    lo = max(min_through, 2)
    variants = [v for v in ALL_VARIANTS if v in set(variants)]
    out = []
    for d in enumerate_basis(k, k):
        if d.through_degree < lo:
            continue
        for v in variants:
            rel = slide_relation(d, v)
            if not rel.vector.is_zero():
                out.append(rel)
    return out


def relation_vector(k: int, word: Sequence[int], variant: SlideVariant = LOWER_POS) -> TLElement:
    """Relation vector of the diagram spelled by ``word`` in ``TL_k``."""
    from .tl import word_element

    return slide_relation(word_element(k, word).single_diagram(), variant).vector
