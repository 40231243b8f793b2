import json
from pathlib import Path

import pytest

from nstopo.cli import main
from conftest import ALGEBRA_SCRIPT, SUBBASIS_SCRIPT

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def algebra_file(script_file):
    return script_file(ALGEBRA_SCRIPT, "algebra.nst")


@pytest.fixture
def subbasis_file(script_file):
    return script_file(SUBBASIS_SCRIPT, "subbasis.nst")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_base_golden(capsys, algebra_file):
    code, out, _ = run(capsys, "base", algebra_file, "--family", "L", "--label", "--extended")
    assert code == 0
    assert out == (GOLDEN / "base_B_lx.txt").read_text(encoding="utf-8")


def test_base_singleton(capsys, script_file):
    path = script_file("universe U = a\nnset A over U = (0.5,0.5,0.5)\nfamily F = { A }\n")
    code, out, _ = run(capsys, "base", path, "--family", "F")
    assert code == 0
    assert out == "{ A = < a/(0.5,0.5,0.5) > }\n"


def test_missing_family(capsys, algebra_file):
    code, out, err = run(capsys, "base", algebra_file, "--family", "NOPE")
    assert code == 1 and out == "" and "NOPE" in err


def test_topology_golden(capsys, subbasis_file):
    code, out, _ = run(capsys, "topology", subbasis_file, "--family", "S", "--tabular", "--label", "--extended")
    assert code == 0
    expected = "topology has cardinality 6 and is:\n" + (GOLDEN / "topology_tlx.txt").read_text(encoding="utf-8")
    assert out == expected


def test_topology_of_empty_family(capsys, subbasis_file):
    code, out, _ = run(capsys, "topology", subbasis_file, "--family", "Empty")
    assert code == 0
    assert "cardinality 2" in out
    assert out.splitlines()[1] == "{ ∅̃ = < 1/(0,0,1), 2/(0,0,1), 3/(0,0,1) >, 𝕌 = < 1/(1,1,0), 2/(1,1,0), 3/(1,1,0) > }"


def test_topology_from_base_mode(capsys, subbasis_file, tmp_path):
    code, out, _ = run(capsys, "topology", subbasis_file, "--family", "S", "--from", "base", "--json-out")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"]["cardinality"] == 5
    path = tmp_path / "t.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "check", str(path), "--family", "T")
    assert code == 2 and out.startswith("false\n")


def test_check_generated_topology(capsys, subbasis_file, tmp_path):
    _, out, _ = run(capsys, "topology", subbasis_file, "--family", "S", "--json-out")
    path = tmp_path / "t.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "check", str(path), "--family", "T")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "check", subbasis_file, "--family", "S", "--from", "subbase")
    assert (code, out) == (0, "true\n")


def test_check_indiscrete(capsys, subbasis_file):
    code, out, _ = run(capsys, "check", subbasis_file, "--family", "Empty", "--from", "base")
    assert (code, out) == (0, "true\n")


def test_check_reports_witness(capsys, subbasis_file):
    code, out, _ = run(capsys, "check", subbasis_file, "--family", "S")
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "false"
    assert lines[1] == "missing empty set"
    assert "not closed under intersection: B1, B2" in lines


def test_check_json(capsys, subbasis_file):
    code, out, _ = run(capsys, "check", subbasis_file, "--family", "S", "--json-out")
    verdict = json.loads(out)
    assert code == 2 and verdict["topology"] is False
    assert {"condition": "not closed under intersection", "witness": ["B1", "B2"]} in verdict["violations"]


def test_render_golden(capsys, algebra_file):
    code, out, _ = run(capsys, "render", algebra_file, "--family", "L", "--label", "--extended")
    assert code == 0
    assert out == (GOLDEN / "family_L_lx.txt").read_text(encoding="utf-8")


def test_render_empty(capsys, subbasis_file):
    code, out, _ = run(capsys, "render", subbasis_file, "--family", "Empty")
    assert (code, out) == (0, "∅\n")


def test_render_json_round_trip(capsys, algebra_file, tmp_path):
    _, out, _ = run(capsys, "render", algebra_file, "--family", "L1", "--json-out")
    path = tmp_path / "l1.json"
    path.write_text(out, encoding="utf-8")
    _, again, _ = run(capsys, "render", str(path), "--family", "L1", "--json-out")
    assert again == out
    _, text1, _ = run(capsys, "render", algebra_file, "--family", "L1", "--label")
    _, text2, _ = run(capsys, "render", str(path), "--family", "L1", "--label")
    assert text1 == text2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate", "x.nst", "--family", "L"],
        ["render", "does-not-exist.nst", "--family", "L"],
        ["render", "x.nst"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_parse_error_diagnostic(capsys, script_file):
    path = script_file("universe U = a\nnset A over U = (0,0,2)\n")
    code, out, err = run(capsys, "render", path, "--family", "F")
    assert code == 1 and out == ""
    assert "line 2" in err


def test_malformed_json(capsys, script_file):
    path = script_file("{ not json", "bad.json")
    code, _, err = run(capsys, "render", path, "--family", "F")
    assert code == 1 and "JSON" in err


def test_binary_garbage(capsys, tmp_path):
    path = tmp_path / "junk.nst"
    path.write_bytes(b"\xff\xfe\x00garbage")
    code, _, err = run(capsys, "render", str(path), "--family", "F")
    assert code == 1 and err


def test_cap_exceeded(capsys, subbasis_file):
    code, out, err = run(capsys, "topology", subbasis_file, "--family", "S", "--max-size", "1")
    assert code == 3 and out == "" and "cap" in err


def test_cap_from_environment(capsys, subbasis_file, monkeypatch):
    monkeypatch.setenv("NSTOPO_MAX_SIZE", "1")
    assert run(capsys, "base", subbasis_file, "--family", "S")[0] == 3
    monkeypatch.setenv("NSTOPO_MAX_SIZE", "lots")
    assert run(capsys, "base", subbasis_file, "--family", "S")[0] == 1
    # explicit flag wins over the environment
    assert run(capsys, "base", subbasis_file, "--family", "S", "--max-size", "5")[0] == 0
