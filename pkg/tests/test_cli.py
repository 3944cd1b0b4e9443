from __future__ import annotations

import json

import pytest

from skeinslide import surface
from skeinslide.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["command"] == "verify" and doc["passed"]
    assert len(doc["checks"]) == 16


def test_verify_json_is_byte_stable(capsys):
    _, a, _ = run(capsys, "verify", "--format", "json", "--only", "eq7", "eq8", "rho")
    _, b, _ = run(capsys, "verify", "--format", "json", "--only", "eq7", "eq8", "rho")
    assert a == b


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--only", "eq7")
    assert code == 0
    assert out.startswith("PASS  difference") and "1/1 checks passed" in out


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--only", "bogus")
    assert code == 2 and "unknown check" in err


def test_verify_corrupted_scenario(capsys, monkeypatch):
    real = surface._read_document

    def corrupt(doc):
        data = real(doc)
        if data.get("name") == "h2h1":
            data = dict(data, arcs=data["arcs"][:-1])
        return data

    monkeypatch.setattr(surface, "_read_document", corrupt)
    code, _, err = run(capsys, "verify", "--only", "rho")
    assert code == 2 and "not joined by any arc" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", "--k", "4", "e1*e2*e1"], "e1"),
        (["eval", "--k", "2", "bar(w(Id2))"], "A^-2*Id2 + (1 - A^4)*e1"),
        (["eval", "--k", "2", "Id2 - A^6*w(Id2)"], "(1 - A^8)*Id2 + (A^2 - A^6)*e1"),
        (["glue", "--scenario", "h2h1", "--expr", "e2*e1"], "[a1a2]"),
        (["glue", "--scenario", "h2h1", "--expr", "e1*e2"], "a1 a3 [a2a3]"),
    ],
)
def test_one_line_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_eval_rearranged_lower_relation(capsys):
    _, out, _ = run(capsys, "eval", "--k", "4", "Id4 - A^6 * w(Id4)")
    assert out.startswith("(1 - A^12)*Id4")


def test_relations_census(capsys):
    code, out, _ = run(capsys, "relations", "--k", "4", "--variants", "lower+", "--format", "json")
    doc = json.loads(out)
    # Id4 plus the nine through-degree-2 diagrams of TL_4
    assert code == 0 and len(doc["relations"]) == 10
    assert sum(r["through_degree"] == 2 for r in doc["relations"]) == 9


def test_w_reports_assumption(capsys):
    code, out, _ = run(capsys, "w", "--k", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["w"] == "A^2*Id2 + (1 - A^-4)*e1" and doc["assumption"]


def test_ideal_check(capsys):
    code, out, _ = run(capsys, "ideal-check", "--scenario", "h2h1", "--kmax", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "non_member" and doc["qa"]["verdict"] == "member"
    assert len(doc["generators"]) == 3


def test_expect_mismatch(capsys):
    code, _, err = run(capsys, "ideal-check", "--scenario", "h2h1", "--kmax", "4", "--expect", "member")
    assert code == 1 and "non_member" in err
    code, _, _ = run(capsys, "ideal-check", "--scenario", "h2h1", "--kmax", "4", "--expect", "non_member")
    assert code == 0


def test_conjecture_k4(capsys):
    code, out, _ = run(capsys, "conjecture", "--k", "4", "--expect", "equal", "--format", "json", "--certificates")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--k", "4", "e1*"],
        ["eval", "--k", "4", "e5"],
        ["eval", "--k", "0", "Id1"],
        ["w"],
        ["relations", "--k", "4", "--variants", "sideways"],
        ["glue", "--scenario", "nope", "--expr", "e1"],
        ["glue", "--scenario", "h2h1"],
        ["glue", "--scenario", "{not json", "--expr", "e1"],
        ["ideal-check", "--scenario", "h2h1", "--kmax", "3"],
        ["conjecture", "--k", "5"],
        [],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--format", "xml", "e1"])
    assert exc.value.code == 2


def test_list_scenarios(capsys):
    code, out, _ = run(capsys, "--list-scenarios")
    names = [line.split(":")[0] for line in out.splitlines()]
    assert code == 0
    assert {"h2h1", "fig9", "h2h2", "fig5a", "fig5b", "h1h1-k2", "h1h1-k4", "h1h1-k6"} <= set(names)


def test_scenario_by_path(capsys, tmp_path):
    src = surface._read_document("h2h1")
    p = tmp_path / "mine.json"
    p.write_text(json.dumps(src))
    code, out, _ = run(capsys, "glue", "--scenario", str(p), "--expr", "e3*e2")
    assert code == 0 and out.strip() == "a2 a3 [a1a3]"
