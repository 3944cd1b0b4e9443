"""End-to-end acceptance criteria, one test per criterion.

Each test prints a ``PASS``/``FAIL criterion N`` line (bypassing pytest's
capture) and then asserts.  Expected values come from the published tables in
``skeinslide.checks`` or from independent recomputation here.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from skeinslide.checks import PUBLISHED
from skeinslide.coeff import DELTA, ONE, A, LaurentPoly, RationalFn, principal_membership
from skeinslide.expr import parse_expr
from skeinslide.relmod import (
    RelationMatrix,
    conjecture_evidence,
    generator_matrix,
    ideal_generators,
    span_membership,
    z_span_decision,
)
from skeinslide.sliding import LOWER_POS, UPPER_NEG, UPPER_POS, phi, relation_vector, slide_relation, w_id
from skeinslide.surface import SkeinVector, load_scenario, parse_multicurve, rho_star
from skeinslide.tl import (
    TLElement,
    brute_force_matchings,
    compose,
    enumerate_basis,
    flip_sigma,
    generator_e,
    identity,
    word_element,
)


@pytest.fixture
def report(capsys):
    lines = []

    def emit(n: int, ok: bool, seconds: float, limit: float, detail: str = "") -> None:
        timed = seconds < limit
        status = "PASS" if ok and timed else "FAIL"
        msg = f"{status} criterion {n}: {seconds:.2f}s (limit {limit:g}s)"
        if detail:
            msg += f"; {detail}"
        lines.append(msg)
        with capsys.disabled():
            print("\n" + msg)

    yield emit
    assert lines, "criterion did not report"


def _clean(text: str) -> str:
    return " ".join(text.replace("+ +", "+").split())


def _pub(key: str, k: int = 4) -> TLElement:
    return parse_expr(_clean(PUBLISHED[key]), k)


TWO_POINT_WORDS = [(1,), (3,), (1, 2), (2, 1), (1, 2, 3), (3, 2, 1)]


def test_criterion_1_w_recursion(report):
    t0 = time.perf_counter()
    got = {k: w_id(k) for k in (2, 3, 4)}
    ok = all(got[k] == _pub(f"w{k}", k) for k in (2, 3, 4))
    # coefficient-for-coefficient, not only as elements
    ok = ok and all(dict(got[k].terms) == dict(_pub(f"w{k}", k).terms) for k in (2, 3, 4))
    report(1, ok, time.perf_counter() - t0, 1)
    assert ok


def test_criterion_2_lower_upper_difference(report):
    t0 = time.perf_counter()
    ident = TLElement.of(identity(4))
    lower = _pub("lower_rhs") - _pub("lower_lhs")  # (1 - A^12) Id4 == rhs, as a zero vector
    upper = _pub("upper_rhs") - _pub("upper_lhs")
    phi_l = phi(LOWER_POS, 4)
    ok1 = phi_l == _pub("phi_l4")
    # the rearranged lower relation: Id4 - phi_l(Id4) == 0, i.e. (1 - A^12) Id4 == rest
    ok2 = ident - phi_l == -(lower)
    ok3 = flip_sigma(ident - phi_l) == -(upper)
    ok4 = slide_relation(identity(4), UPPER_POS).vector == -(upper)
    ok5 = upper - lower == _pub("difference") and _pub("difference") == _pub("difference_unreduced")
    ok = ok1 and ok2 and ok3 and ok4 and ok5
    report(2, ok, time.perf_counter() - t0, 1, f"phi={ok1} lower={ok2} sigma={ok3} upper={ok4} diff={ok5}")
    assert ok


def test_criterion_3_two_point_relations(report):
    t0 = time.perf_counter()
    ok = word_element(4, (1, 2, 3, 1)) == word_element(4, (1, 3))
    ok = ok and word_element(4, (3, 2, 1, 3)) == word_element(4, (3, 1))
    bad = []
    for i, w in enumerate(TWO_POINT_WORDS, start=1):
        parts = [parse_expr(p, 4) for p in PUBLISHED[f"two_point_{i}"].split(";")]
        # published form: lhs equivalent to rhs, written before and after a TL reduction
        if len(parts) == 3 and parts[1] != parts[2]:
            bad.append(i)
            continue
        published = parts[0] - parts[-1]
        got = slide_relation(word_element(4, w).single_diagram(), LOWER_POS).vector
        if got != published and got != -published:
            bad.append(i)
    ok = ok and not bad
    report(3, ok, time.perf_counter() - t0, 1, f"mismatched rows {bad}" if bad else "six rows exact up to overall sign")
    assert ok


def test_criterion_4_remark_pipeline(report):
    t0 = time.perf_counter()
    ident = identity(4)
    upper_pos = slide_relation(ident, UPPER_POS).vector
    upper_neg = slide_relation(ident, UPPER_NEG).vector
    combo = upper_neg.scale(A**12) + upper_pos
    printed = _pub("remark_combination")
    if combo == printed:
        sign = "exact"
    elif combo == -printed:
        sign = "printed form is the negative (slide minus diagram)"
    else:
        sign = None
    rows = [relation_vector(4, w) for w in TWO_POINT_WORDS]
    rel = _pub("remark_relation")
    m = RelationMatrix.from_vectors(rows, extra=[printed, rel])
    literal = span_membership(printed - rel, m)
    unit = span_membership(printed - rel.scale(A**2), m)
    ok = (
        sign is not None
        and unit.is_member
        and unit.all_laurent
        and unit.verify()
        and literal.verify()
    )
    detail = (
        f"combination vs printed: {sign}; reduced relation verifies with Laurent certificate up to the unit A^2; "
        f"literal difference needs denominators {[str(d) for d in literal.denominators()]}"
    )
    report(4, ok, time.perf_counter() - t0, 5, detail)
    assert ok


def test_criterion_5_h2h1_images(report):
    t0 = time.perf_counter()
    s = load_scenario("h2h1")
    ok = True
    for word, key in [("e1*e2", "rho_e1e2"), ("e3*e2", "rho_e3e2"), ("e2*e1", "rho_e2e1"), ("e2*e3", "rho_e2e3")]:
        v = rho_star(s, parse_expr(word, 4))
        mc = parse_multicurve(PUBLISHED[key])
        ok = ok and v.terms == {mc: ONE}
    glued = rho_star(s, _pub("final"))
    a, b = parse_multicurve("a1 a3 [a2a3]"), parse_multicurve("a2 a3 [a1a3]")
    expected = SkeinVector({a: A**4 - 1, b: 1 - A**4})
    ok = ok and glued == expected
    report(5, ok, time.perf_counter() - t0, 5)
    assert ok


def test_criterion_6_counterexample(report):
    t0 = time.perf_counter()
    s = load_scenario("h2h1")
    target = rho_star(s, _pub("final"))
    gens = ideal_generators(s, 4)
    m = generator_matrix(s, gens, extra=[target])
    cert = span_membership(target, m)
    dec = z_span_decision(target, m)
    dens = cert.denominators()
    unit_ok = all(d.divide(A**4 + 1) is not None and (A**4 + 1).divide(d) is not None for d in dens)
    lp = principal_membership(A**4 - 1, A**8 - 1) is None and principal_membership(A**8 - 1, A**4 - 1) is not None
    ok = (
        cert.is_member
        and cert.verify()
        and m.independent
        and not cert.all_laurent
        and bool(dens)
        and unit_ok
        and dec.verdict == "non_member"
        and lp
    )
    report(6, ok, time.perf_counter() - t0, 10, f"{len(gens)} generators, denominators {[str(d) for d in dens]}")
    assert ok


def test_criterion_7_remark_embeddings(report):
    t0 = time.perf_counter()
    rel = _pub("remark_relation")
    vanish = not rho_star(load_scenario("fig9"), rel)
    nonzero = bool(rho_star(load_scenario("h2h2"), rel))
    ok = vanish and nonzero
    report(7, ok, time.perf_counter() - t0, 5, f"fig9 zero={vanish}, h2h2 nonzero={nonzero}")
    assert ok


def _random_laurent(rng: random.Random) -> LaurentPoly:
    return LaurentPoly({rng.randint(-5, 5): rng.randint(-4, 4) for _ in range(rng.randint(0, 4))})


def _random_rational(rng: random.Random) -> RationalFn:
    den = _random_laurent(rng)
    while den.is_zero():
        den = _random_laurent(rng)
    return RationalFn(_random_laurent(rng), den)


def test_criterion_8_property_suites(report, monkeypatch):
    t0 = time.perf_counter()
    problems = []
    # Catalan dimensions against brute force
    for k, c in zip(range(2, 7), (2, 5, 14, 42, 132)):
        if len(enumerate_basis(k, k)) != c or set(enumerate_basis(k, k)) != brute_force_matchings(k, k):
            problems.append(f"catalan k={k}")
    # presentation relations
    for k in range(2, 9):
        e = [None] + [TLElement.of(generator_e(k, i)) for i in range(1, k)]
        for i in range(1, k):
            if compose(e[i], e[i]) != e[i].scale(DELTA):
                problems.append(f"e{i}^2 k={k}")
            if i + 1 < k and compose(compose(e[i], e[i + 1]), e[i]) != e[i]:
                problems.append(f"e{i}e{i+1}e{i} k={k}")
            for j in range(i + 2, k):
                if compose(e[i], e[j]) != compose(e[j], e[i]):
                    problems.append(f"e{i}e{j} k={k}")
    # ring and field axioms on random triples, cross-checked by evaluation
    rng = random.Random(20261018)
    n_triples = 10_000
    points = (Fraction(2), Fraction(-3))
    for n in range(n_triples):
        if n % 2:
            x, y, z = (_random_laurent(rng) for _ in range(3))
        else:
            x, y, z = (_random_rational(rng) for _ in range(3))
        if (x + y) * z != x * z + y * z or (x * y) * z != x * (y * z) or x * y != y * x:
            problems.append(f"axioms {x}, {y}, {z}")
            continue
        for a in points:
            try:
                xa, ya, za = x(a), y(a), z(a)
            except ZeroDivisionError:
                continue
            if ((x + y) * z)(a) != (xa + ya) * za:
                problems.append(f"evaluation {x}, {y}, {z} at {a}")
    # certificate re-multiplication on every certificate emitted by a full run
    seen = []
    original = RelationMatrix.certificate

    def recording(self, target):
        cert = original(self, target)
        seen.append(cert)
        return cert

    monkeypatch.setattr(RelationMatrix, "certificate", recording)
    from skeinslide.checks import run_checks

    run_checks()
    rep = conjecture_evidence(4, [load_scenario("h1h1-k4")])
    for lv in rep.levels:
        for cmp in lv.reports.values():
            for d in cmp.left_in_right + cmp.right_in_left:
                seen.append(d.certificate)
    bad_certs = sum(1 for c in seen if not c.verify())
    if bad_certs:
        problems.append(f"{bad_certs} certificates fail re-multiplication")
    ok = not problems
    report(
        8,
        ok,
        time.perf_counter() - t0,
        60,
        f"{n_triples} coefficient triples, {len(seen)} certificates" + (f"; problems: {problems[:3]}" if problems else ""),
    )
    assert ok


@pytest.mark.slow
def test_criterion_9_conjecture_evidence(report):
    t0 = time.perf_counter()
    scen = [load_scenario(n) for n in ("h1h1-k2", "h1h1-k4", "h1h1-k6")]
    rep4 = conjecture_evidence(4, scen)
    t4 = time.perf_counter() - t0
    verdicts = {}
    complete = True
    for lv in rep4.levels:
        for ring in ("QA", "ZA"):
            cmp = lv.reports[ring]
            verdicts[(lv.level, ring)] = cmp.verdict
            decisions = cmp.left_in_right + cmp.right_in_left
            complete = complete and all(d.certificate is not None and d.certificate.verify() for d in decisions)
    four = len(verdicts) == 4
    glued_qa = verdicts.get(("glued", "QA"))
    t1 = time.perf_counter()
    rep6 = conjecture_evidence(6, scen)
    t6 = time.perf_counter() - t1
    six = len(rep6.levels) == 2 and all(len(lv.reports) == 2 for lv in rep6.levels)
    ok = complete and four and six and t6 < 15 * 60
    soft = "soft check glued/QA = equal: " + ("PASS" if glued_qa == "equal" else f"FAIL (got {glued_qa})")
    detail = f"k=4 {t4:.1f}s, k=6 {t6:.1f}s; verdicts {sorted((f'{a}/{b}', v) for (a, b), v in verdicts.items())}; {soft}"
    report(9, ok, time.perf_counter() - t0, 15 * 60, detail)
    assert ok
