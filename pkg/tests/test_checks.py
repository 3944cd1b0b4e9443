from __future__ import annotations

import pytest

from skeinslide import checks
from skeinslide.checks import PUBLISHED, check_names, resolve, run_checks


@pytest.fixture(scope="module")
def results():
    return {r.name: r for r in run_checks()}


def test_every_check_passes(results):
    failed = [f"{r.name}: {r.summary}" for r in results.values() if not r.passed]
    assert not failed
    assert list(results) == check_names()


def test_units_are_reported(results):
    assert results["remark_combination"].details["unit"] == "-1"
    assert results["remark_reduction"].details["unit"] == "A^2"
    assert results["final_relation"].details["unit"] == "1"
    assert results["counterexample"].details["denominators"] == ["A^4 + 1"]


def test_aliases_resolve():
    assert resolve(["eq7", "difference", "eq1"]) == ["difference", "w2"]
    with pytest.raises(KeyError):
        resolve(["nope"])


def test_single_check_filter():
    rs = run_checks(["eq7"])
    assert [r.name for r in rs] == ["difference"] and rs[0].passed


@pytest.mark.parametrize(
    "key, broken",
    [
        ("w4", "w4"),
        ("w4", "phi_l4"),
        ("lower_rhs", "lower_relation"),
        ("two_point_3", "two_point_relations"),
        ("final", "final_relation"),
        ("remark_combination", "remark_combination"),
    ],
)
def test_tampering_is_detected(key, broken):
    table = dict(PUBLISHED)
    first = table[key].split(";")[0]
    table[key] = table[key].replace(first, first + " + A^2*e2", 1)
    (r,) = run_checks([broken], published=table)
    assert not r.passed


def test_tampered_glued_value():
    table = dict(PUBLISHED, rho_e2e1="[a1a3]")
    (r,) = run_checks(["rho"], published=table)
    assert not r.passed


def test_garbage_published_text_fails_cleanly():
    table = dict(PUBLISHED, w2="A^2*Id2 + (")
    (r,) = run_checks(["w2"], published=table)
    assert not r.passed and "raised" in r.summary


def test_to_dict_is_json_ready(results):
    import json

    json.dumps([r.to_dict() for r in results.values()])


def test_published_table_is_not_mutated():
    before = dict(checks.PUBLISHED)
    run_checks(["w2"], published=dict(PUBLISHED, w2="Id2"))
    assert checks.PUBLISHED == before
