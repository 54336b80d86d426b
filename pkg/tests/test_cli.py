import json
from pathlib import Path

import pytest

from idcodes.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_min_id(capsys):
    code, out, _ = run(capsys, "min-id", DATA / "chainTC3.txt")
    assert code == 0 and out.strip() == "gamma_id = 3; code = {0,1,2}"


def test_min_sep_json(capsys):
    code, out, _ = run(capsys, "min-sep", DATA / "c3.txt", "--json")
    assert code == 0 and json.loads(out) == {"gamma_s": 2, "code": [0, 1]}


def test_min_id_twins_is_input_error(capsys):
    code, _, err = run(capsys, "min-id", DATA / "twins.txt")
    assert code == 2 and "twins" in err


def test_check_code(capsys):
    code, out, _ = run(capsys, "check-code", DATA / "chainTC3.txt", "--code", "1,2")
    assert code == 0
    assert out.strip() == "dominating: no (vertex 0); separating: yes; identifying: no"
    code, out, _ = run(capsys, "check-code", DATA / "c3.txt", "--code", "0,1", "--json")
    assert json.loads(out)["identifying"] is True


def test_check_family(capsys):
    code, out, _ = run(capsys, "check-family", DATA / "chainTC3.txt", "--emit-forest")
    assert code == 0 and out == "in family; roots {0}\nn 3\n1 0\n2 1\n"
    code, out, _ = run(capsys, "check-family", DATA / "c3.txt", "--json")
    assert json.loads(out) == {"in_family": False}


def test_bondy(capsys):
    assert run(capsys, "bondy", "element", DATA / "four_sets.json")[1].strip() == "element 1"
    code, out, _ = run(capsys, "bondy", "element", DATA / "four_sets.json", "--json")
    assert json.loads(out) == {"element": 0}
    code, out, _ = run(capsys, "bondy", "reduce", DATA / "four_sets.json", "--json")
    assert json.loads(out) == {"removed": [0]}
    code, _, err = run(capsys, "bondy", "reduce-nonempty", DATA / "four_sets.json")
    assert code == 2 and "fewer sets" in err


def test_extremal_check(capsys):
    code, out, _ = run(capsys, "extremal", "check", DATA / "four_sets.json")
    assert code == 0 and out.strip() == "not extremal; witness element 2"
    code, out, _ = run(capsys, "extremal", "check", DATA / "chain.json")
    assert out.strip() == "extremal"


def test_extremal_witness(capsys):
    code, out, _ = run(capsys, "extremal", "witness", DATA / "chain.json", "--json")
    data = json.loads(out)
    assert data["extremal"] and data["digraph"] == "n 3\n0 1\n0 2\n1 2\n"
    assert data["parent"] == [None, 0, 1]


def test_convert(capsys, tmp_path):
    code, out, _ = run(capsys, "convert", "d2b", DATA / "chainTC3.txt")
    bip = tmp_path / "b.json"
    bip.write_text(out)
    code, out, _ = run(capsys, "convert", "b2d", bip)
    assert code == 0 and out == "n 3\n0 1\n0 2\n1 2\n"
    code, out, _ = run(capsys, "convert", "sys2b", DATA / "four_sets.json")
    sys2b = tmp_path / "four_sets_b.json"
    sys2b.write_text(out)
    # no designated matching: b2d finds the perfect matching itself
    code, out, _ = run(capsys, "convert", "b2d", sys2b)
    assert out == "n 4\n0 1\n0 3\n1 2\n1 3\n"


def test_verify_pass_and_json(capsys):
    code, out, _ = run(capsys, "verify", "gamma-bounds", "--max-n", "3")
    assert code == 0 and out.startswith("PASS gamma-bounds")
    code, out, _ = run(capsys, "verify", "bondy", "--max-n", "3", "--json")
    report = json.loads(out)
    assert report["passed"] and report["per_n"]["3"] == 56


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "unknown-thm"],
        ["verify", "gamma-bounds", "--max-n", "5"],
        ["frobnicate"],
        ["min-id", "/nonexistent/file.txt"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_format_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\n0 0\n")
    code, _, err = run(capsys, "min-id", bad)
    assert code == 2 and "self-loop" in err and "line 2" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from idcodes import harness as verify_module

    broken = verify_module.Sweep("digraphs", lambda D: (True, ("ok", "broken")), 2)
    monkeypatch.setitem(verify_module.SWEEPS, "gamma-bounds", broken)
    code, out, _ = run(capsys, "verify", "gamma-bounds", "--max-n", "2")
    assert code == 1 and out.startswith("FAIL")


def test_workers_env_default(monkeypatch):
    from idcodes.cli import build_parser

    monkeypatch.setenv("IDCODE_WORKERS", "3")
    assert build_parser().parse_args(["verify", "bondy"]).workers == 3
