"""Spans of relation vectors over ``Q(A)`` and ``Z[A^{+-1}]``.

Rows are sparse vectors over a fixed, ordered basis (TL diagrams or
multicurves).  Elimination happens over the fraction field ``Q(A)``; every
pivot row remembers which combination of the original rows produced it, so
membership answers come with explicit certificates.  Integrality (membership
over the Laurent ring) is decided from the certificate when it is forced to
be unique, and reported as undecided otherwise.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .coeff import ONE, RATIONAL_ONE, RATIONAL_ZERO, LaurentPoly, RationalFn
from .sliding import ALL_VARIANTS, U_ASSUMPTION, UPPER_POS, relation_set, slide_relation
from .surface import Multicurve, Scenario, SkeinVector, glue, rho_star
from .tl import TLDiagram, TLElement, display_key, enumerate_basis, identity

__all__ = [
    "RelationMatrix",
    "Certificate",
    "Decision",
    "CompareReport",
    "span_membership",
    "z_span_decision",
    "submodule_compare",
    "ideal_generators",
    "generator_matrix",
    "multicurve_order",
    "Generator",
    "EvidenceReport",
    "conjecture_evidence",
    "to_vector",
]

Vector = dict  # basis label -> RationalFn


def to_vector(x) -> dict[Hashable, RationalFn]:
    """Coerce a `TLElement`, `SkeinVector` or mapping into a sparse Q(A) vector."""
    if isinstance(x, TLElement):
        items = x.terms.items()
    elif isinstance(x, SkeinVector):
        items = x.terms.items()
    elif isinstance(x, Mapping):
        items = x.items()
    else:
        raise TypeError(f"cannot read a vector from {type(x).__name__}")
    out = {}
    for key, c in items:
        c = RationalFn.coerce(c)
        if c:
            out[key] = c
    return out


def _label(key) -> str:
    return str(key)


# ---------------------------------------------------------------------------
# matrices and elimination
# ---------------------------------------------------------------------------


@dataclass
class _Pivot:
    col: int
    row: dict[int, RationalFn]  # leading entry 1 at col
    combo: dict[int, RationalFn]  # original row index -> coefficient


class RelationMatrix:
    """Relations as rows over an ordered ambient basis.

    Parameters
    ----------
    basis : sequence
        Ordered, duplicate-free basis labels.  The order fixes pivoting.
    rows : sequence
        Each row is a `TLElement`, `SkeinVector` or mapping to coefficients.
    names : sequence of str, optional
        Display name for each row.
    """

    def __init__(self, basis: Sequence[Hashable], rows: Sequence[Any] = (), names: Sequence[str] | None = None):
        self.basis = tuple(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError("basis labels must be distinct")
        self.rows: tuple[dict[Hashable, RationalFn], ...] = tuple(to_vector(r) for r in rows)
        for i, r in enumerate(self.rows):
            extra = [k for k in r if k not in self.index]
            if extra:
                raise ValueError(f"row {i} uses labels outside the basis: {', '.join(map(_label, extra[:3]))}")
        if names is None:
            names = [f"r{i}" for i in range(len(self.rows))]
        if len(names) != len(self.rows):
            raise ValueError("one name per row")
        self.names = tuple(names)
        self._pivots: dict[int, _Pivot] | None = None
        self._dependent: list[dict[int, RationalFn]] = []

    def __len__(self) -> int:
        return len(self.rows)

    @classmethod
    def from_vectors(cls, rows: Sequence[Any], names=None, extra: Iterable[Any] = (), key=None) -> RelationMatrix:
        """Build with the basis spanned by the rows' supports (plus ``extra`` vectors)."""
        labels = set()
        for r in list(rows) + list(extra):
            labels.update(to_vector(r))
        return cls(sorted(labels, key=key), rows, names)

    def reversed(self) -> RelationMatrix:
        return RelationMatrix(self.basis, self.rows[::-1], self.names[::-1])

    # elimination -------------------------------------------------------
    def _dense_index(self, v: Mapping[Hashable, RationalFn]) -> dict[int, RationalFn]:
        out = {}
        for key, c in v.items():
            if key not in self.index:
                raise ValueError(f"basis mismatch: {_label(key)} is not in the ambient basis")
            out[self.index[key]] = c
        return out

    def _reduce(self, vec: dict[int, RationalFn], pivots: Mapping[int, _Pivot]):
        """Fully reduce ``vec`` by ``pivots``; return (residual, pivot multipliers)."""
        vec = dict(vec)
        used: dict[int, RationalFn] = {}
        heap = list(vec)
        heapq.heapify(heap)
        seen = set(vec)
        while heap:
            c = heapq.heappop(heap)
            seen.discard(c)
            a = vec.get(c)
            if not a or c not in pivots:
                continue
            p = pivots[c]
            used[c] = a
            for j, b in p.row.items():
                nv = vec.get(j, RATIONAL_ZERO) - a * b
                if nv:
                    vec[j] = nv
                    if j not in seen:
                        seen.add(j)
                        heapq.heappush(heap, j)
                else:
                    vec.pop(j, None)
        return {j: c for j, c in vec.items() if c}, used

    def _echelon(self) -> dict[int, _Pivot]:
        if self._pivots is None:
            pivots: dict[int, _Pivot] = {}
            self._dependent = []
            for i, r in enumerate(self.rows):
                vec, used = self._reduce(self._dense_index(r), pivots)
                combo = {i: RATIONAL_ONE}
                for col, a in used.items():
                    for j, b in pivots[col].combo.items():
                        combo[j] = combo.get(j, RATIONAL_ZERO) - a * b
                combo = {j: c for j, c in combo.items() if c}
                if not vec:
                    self._dependent.append(combo)
                    continue
                col = min(vec)
                lead = vec[col]
                if lead != RATIONAL_ONE:
                    inv = RATIONAL_ONE / lead
                    vec = {j: c * inv for j, c in vec.items()}
                    combo = {j: c * inv for j, c in combo.items()}
                pivots[col] = _Pivot(col, vec, combo)
            self._pivots = pivots
        return self._pivots

    @property
    def rank(self) -> int:
        return len(self._echelon())

    @property
    def independent(self) -> bool:
        return self.rank == len(self.rows)

    @property
    def dependencies(self) -> list[dict[int, RationalFn]]:
        """Q(A)-linear dependencies among the rows (row index -> coefficient)."""
        self._echelon()
        return list(self._dependent)

    def certificate(self, target) -> Certificate:
        t = to_vector(target)
        # a row equal to the target is its own certificate
        for i, r in enumerate(self.rows):
            if r == t and t:
                return Certificate(self, t, {i: RATIONAL_ONE}, {})
        pivots = self._echelon()
        residual, used = self._reduce(self._dense_index(t), pivots)
        coeffs: dict[int, RationalFn] = {}
        for col, a in used.items():
            for j, b in pivots[col].combo.items():
                coeffs[j] = coeffs.get(j, RATIONAL_ZERO) + a * b
        coeffs = {j: c for j, c in coeffs.items() if c}
        return Certificate(self, t, coeffs, {self.basis[j]: c for j, c in residual.items()})


# ---------------------------------------------------------------------------
# certificates and decisions
# ---------------------------------------------------------------------------


@dataclass
class Certificate:
    """``sum(coefficients[i] * rows[i]) + residual == target``."""

    matrix: RelationMatrix = field(repr=False)
    target: dict[Hashable, RationalFn] = field(repr=False)
    coefficients: dict[int, RationalFn]
    residual: dict[Hashable, RationalFn]

    @property
    def is_member(self) -> bool:
        return not self.residual

    @property
    def all_laurent(self) -> bool:
        return all(c.is_laurent for c in self.coefficients.values())

    def coefficient(self, i: int) -> RationalFn:
        return self.coefficients.get(i, RATIONAL_ZERO)

    def verify(self) -> bool:
        acc: dict[Hashable, RationalFn] = dict(self.residual)
        for i, c in self.coefficients.items():
            for key, v in self.matrix.rows[i].items():
                acc[key] = acc.get(key, RATIONAL_ZERO) + c * v
        return {k: v for k, v in acc.items() if v} == self.target

    def denominators(self) -> list[LaurentPoly]:
        return sorted({c.den for c in self.coefficients.values() if not c.is_laurent}, key=str)

    def to_dict(self) -> dict:
        return {
            "member": self.is_member,
            "all_laurent": self.all_laurent,
            "coefficients": {self.matrix.names[i]: str(c) for i, c in sorted(self.coefficients.items())},
            "residual": {_label(k): str(v) for k, v in sorted(self.residual.items(), key=lambda kv: self.matrix.index[kv[0]])},
        }

    def format(self) -> str:
        if not self.coefficients:
            body = "0"
        else:
            body = " + ".join(f"({c})*{self.matrix.names[i]}" for i, c in sorted(self.coefficients.items()))
        if self.residual:
            body += f"  [residual on {len(self.residual)} basis elements]"
        return body


def span_membership(target, rels: RelationMatrix) -> Certificate:
    """Q(A)-span membership with an exact certificate.

    The residual is zero iff ``target`` lies in the span.  When the rows are
    Q(A)-independent the coefficients are the unique solution.
    """
    return rels.certificate(target)


@dataclass
class Decision:
    verdict: str  # member | non_member | undecided
    reason: str
    certificate: Certificate

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason, "certificate": self.certificate.to_dict()}


def z_span_decision(target, rels: RelationMatrix) -> Decision:
    """Decide Laurent-ring membership of ``target`` in the row span.

    Sound in both directions when it answers: ``member`` comes with a Laurent
    certificate; ``non_member`` means there is no Q(A) solution at all, or
    the unique Q(A) solution is not Laurent.  With dependent rows and no
    Laurent certificate from either row order the answer is ``undecided``.
    """
    cert = rels.certificate(target)
    if not cert.is_member:
        return Decision("non_member", "not in the Q(A)-span", cert)
    if cert.all_laurent:
        return Decision("member", "Laurent certificate", cert)
    if rels.independent:
        dens = ", ".join(str(d) for d in cert.denominators())
        return Decision("non_member", f"unique Q(A) certificate has denominators {dens}", cert)
    rev = rels.reversed()
    alt = rev.certificate(target)
    if alt.is_member and alt.all_laurent:
        n = len(rels.rows)
        coeffs = {n - 1 - i: c for i, c in alt.coefficients.items()}
        return Decision("member", "Laurent certificate (reversed row order)", Certificate(rels, cert.target, coeffs, {}))
    return Decision("undecided", "rows are dependent and no Laurent certificate was found", cert)


@dataclass
class CompareReport:
    ring: str
    verdict: str
    left_in_right: list[Decision]
    right_in_left: list[Decision]
    left_names: tuple[str, ...]
    right_names: tuple[str, ...]

    @staticmethod
    def _side(ds: list[Decision]) -> str:
        if all(d.verdict == "member" for d in ds):
            return "yes"
        if any(d.verdict == "non_member" for d in ds):
            return "no"
        return "unknown"

    def summary(self) -> dict:
        def count(ds, v):
            return sum(1 for d in ds if d.verdict == v)

        return {
            side: {v: count(ds, v) for v in ("member", "non_member", "undecided")}
            for side, ds in (("left_in_right", self.left_in_right), ("right_in_left", self.right_in_left))
        }

    def to_dict(self, certificates: bool = True) -> dict:
        out = {"ring": self.ring, "verdict": self.verdict, "counts": self.summary()}
        if certificates:
            out["left_in_right"] = {n: d.to_dict() for n, d in zip(self.left_names, self.left_in_right)}
            out["right_in_left"] = {n: d.to_dict() for n, d in zip(self.right_names, self.right_in_left)}
        return out


def _qa_decision(target, rels: RelationMatrix) -> Decision:
    cert = rels.certificate(target)
    if cert.is_member:
        return Decision("member", "in the Q(A)-span", cert)
    return Decision("non_member", "not in the Q(A)-span", cert)


def submodule_compare(rels1: RelationMatrix, rels2: RelationMatrix, ring: str = "QA") -> CompareReport:
    """Compare the spans of two relation sets over ``QA`` or ``ZA``.

    Verdicts: ``equal``, ``left_in_right_only``, ``right_in_left_only``,
    ``incomparable``, or ``partial`` when an undecided row leaves the answer
    open.
    """
    ring = ring.upper()
    if ring not in ("QA", "ZA"):
        raise ValueError(f"ring must be QA or ZA, got {ring!r}")
    if rels1.basis != rels2.basis:
        raise ValueError("basis mismatch between the two relation sets")
    decide = _qa_decision if ring == "QA" else z_span_decision
    lr = [decide(r, rels2) for r in rels1.rows]
    rl = [decide(r, rels1) for r in rels2.rows]
    a, b = CompareReport._side(lr), CompareReport._side(rl)
    if a == "yes" and b == "yes":
        verdict = "equal"
    elif a == "yes" and b == "no":
        verdict = "left_in_right_only"
    elif a == "no" and b == "yes":
        verdict = "right_in_left_only"
    elif a == "no" and b == "no":
        verdict = "incomparable"
    else:
        verdict = "partial"
    return CompareReport(ring, verdict, lr, rl, rels1.names, rels2.names)


# ---------------------------------------------------------------------------
# ideal generators for a glued scenario
# ---------------------------------------------------------------------------


def multicurve_order(s: Scenario):
    """Basis order for glued vectors: larger intersection with the disc first."""

    def key(mc: Multicurve):
        return (-s.intersection_number(mc), mc.sort_key())

    return key


@dataclass
class Generator:
    source: TLDiagram
    top: Multicurve
    top_coefficient: LaurentPoly
    row: SkeinVector
    through_degree: int


def ideal_generators(s: Scenario, kmax: int, minimal_position: bool = True) -> list[Generator]:
    """Bounded list of upper-slide generators glued into ``s``.

    For each even ``t <= kmax`` and basis diagram ``d`` of through-degree
    ``t`` whose glued image has no contractible component (and, with
    ``minimal_position``, meets the disc exactly ``t`` times), the row is the
    glued upper/positive slide relation of ``d``.  Rows are deduplicated by
    their top term ``glue(d)``, keeping the first diagram in basis order.
    """
    if kmax % 2:
        raise ValueError(f"kmax must be even, got {kmax}")
    out: list[Generator] = []
    seen: set[Multicurve] = set()
    for t in range(2, min(kmax, s.k) + 1, 2):
        for d in enumerate_basis(s.k, s.k):
            if d.through_degree != t:
                continue
            coeff, mc = glue(s, d)
            if coeff != ONE or mc in seen:
                continue
            if minimal_position and s.intersection_number(mc) != t:
                continue
            row = rho_star(s, slide_relation(d, UPPER_POS).vector)
            if row.is_zero():
                continue
            seen.add(mc)
            out.append(Generator(d, mc, row.coeff(mc), row, t))
    return out


def generator_matrix(s: Scenario, gens: Sequence[Generator], extra: Iterable[Any] = ()) -> RelationMatrix:
    return RelationMatrix.from_vectors(
        [g.row for g in gens],
        names=[f"g[{g.source}]" for g in gens],
        extra=extra,
        key=multicurve_order(s),
    )


# ---------------------------------------------------------------------------
# conjecture evidence
# ---------------------------------------------------------------------------


def _tl_basis_order(k: int) -> list[TLDiagram]:
    return sorted(enumerate_basis(k, k), key=lambda d: (-d.through_degree, display_key(d)))


def _rel_name(d: TLDiagram, code: str) -> str:
    return f"{code}[{d}]"


@dataclass
class EvidenceLevel:
    level: str
    scenario: str | None
    rows_all: int
    rows_reduced: int
    reports: dict[str, CompareReport]

    def to_dict(self, certificates: bool = True) -> dict:
        return {
            "level": self.level,
            "scenario": self.scenario,
            "rows": {"all_relations": self.rows_all, "reduced_set": self.rows_reduced},
            "comparisons": {ring: r.to_dict(certificates) for ring, r in self.reports.items()},
        }


@dataclass
class EvidenceReport:
    k: int
    levels: list[EvidenceLevel]
    notes: list[str]

    def to_dict(self, certificates: bool = True) -> dict:
        return {"k": self.k, "levels": [lv.to_dict(certificates) for lv in self.levels], "notes": self.notes}

    def verdict(self, level: str, ring: str, scenario: str | None = None) -> str:
        for lv in self.levels:
            if lv.level == level and (scenario is None or lv.scenario == scenario):
                return lv.reports[ring].verdict
        raise KeyError((level, ring, scenario))


def conjecture_evidence(k: int, scenarios: Sequence[Scenario] = (), rings: Sequence[str] = ("QA", "ZA")) -> EvidenceReport:
    """Do the level-``k`` slides follow from the top slide and lower levels?

    Left: every sliding relation (all four variants) of every basis diagram
    of ``TL_k``.  Right: the upper/positive relation of ``Id_k`` together
    with all relations of through-degree below ``k``.  Both spans are
    compared in the TL box and, for each scenario with matching ``k``, after
    gluing.
    """
    if k < 2 or k % 2:
        raise ValueError(f"k must be even and at least 2, got {k}")
    rels = relation_set(k, ALL_VARIANTS)
    left = [(r.vector, _rel_name(r.source, r.variant.code)) for r in rels]
    top = slide_relation(identity(k), UPPER_POS)
    right = [(top.vector, _rel_name(top.source, top.variant.code))]
    right += [(r.vector, _rel_name(r.source, r.variant.code)) for r in rels if r.through_degree < k]
    notes = [U_ASSUMPTION]
    levels = []

    basis = _tl_basis_order(k)
    m1 = RelationMatrix(basis, [v for v, _ in left], [n for _, n in left])
    m2 = RelationMatrix(basis, [v for v, _ in right], [n for _, n in right])
    levels.append(EvidenceLevel("tl", None, len(m1), len(m2), {ring: submodule_compare(m1, m2, ring) for ring in rings}))

    for s in scenarios:
        if s.k != k:
            notes.append(f"scenario {s.name} has k={s.k}, skipped at level {k}")
            continue
        gl = [(rho_star(s, v), n) for v, n in left]
        gr = [(rho_star(s, v), n) for v, n in right]
        gl = [(v, n) for v, n in gl if v]
        gr = [(v, n) for v, n in gr if v]
        labels = set()
        for v, _ in gl + gr:
            labels.update(v.terms)
        gb = sorted(labels, key=multicurve_order(s))
        g1 = RelationMatrix(gb, [v for v, _ in gl], [n for _, n in gl])
        g2 = RelationMatrix(gb, [v for v, _ in gr], [n for _, n in gr])
        levels.append(
            EvidenceLevel("glued", s.name, len(g1), len(g2), {ring: submodule_compare(g1, g2, ring) for ring in rings})
        )
    return EvidenceReport(k, levels, notes)

