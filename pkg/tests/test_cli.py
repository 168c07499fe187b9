import json
import subprocess
import sys

import pytest

from shifted_crystal.cli import EXIT_FAILED, EXIT_OK, EXIT_UNDEFINED, EXIT_USAGE, cactus_main, main

T_EVAC = "1 1 2' 2\n2 2\n3\n"


@pytest.fixture
def tab(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text(T_EVAC)
    return str(p)


def test_transform_evac(tab, capsys):
    assert main(["transform", "evac", tab]) == EXIT_OK
    assert capsys.readouterr().out.split("\n")[:3] == ["1 2' 2 2", "2 3'", "3"]


def test_transform_evac_four_letters(tab, capsys):
    assert main(["transform", "evac", tab, "--n", "4"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("2 3' 3 3")


def test_transform_json_round_trip(tab, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["transform", "rect", tab, "--format", "json", "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["slides"] == {"steps": []}
    assert main(["transform", "eta", str(out), "--format", "text"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("1 2' 2 2")


def test_transform_word_ops(capsys):
    assert main(["transform", "complement", "--word", "3 3 2 2 3' 3 1 1 2'", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 1' 2 2' 1 1' 3 3' 2"
    assert main(["transform", "rect", "--word", "2 3 1 1'"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 1 2 3"


def test_undefined_operator_exit_code(capsys):
    assert main(["transform", "F", "--word", "2 2", "--n", "2", "-i", "1"]) == EXIT_UNDEFINED
    assert "undefined" in capsys.readouterr().err


def test_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 q\n")
    assert main(["transform", "evac", str(bad)]) == EXIT_USAGE
    assert "row 1, column 2" in capsys.readouterr().err
    assert main(["transform", "E", "--word", "1 2"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["transform", "nope"])
    assert exc.value.code == 2


def test_graph_dot(tmp_path, capsys):
    out = tmp_path / "g.dot"
    assert main(["graph", "--shape", "2,1", "--n", "4", "--format", "dot", "--out", str(out)]) == EXIT_OK
    assert out.read_text().startswith("digraph")
    assert json.loads(capsys.readouterr().out)["vertices"] == 16


def test_count(capsys):
    assert main(["count", "--shape", "5,3,1", "--n", "3"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["tableaux"] == 64
    assert main(["count", "--shape", "6,5,2,1", "--mu", "4,2", "--nu", "4,3,1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["lrs_coefficient"] == 4


def test_braid_order(capsys):
    assert main(["braid-order", "--shape", "5,3,1"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["least_m"] == 45
    assert doc["histogram"] == {"3": 18, "5": 10, "9": 36}


def test_verify_json_report(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["verify", "crystal", "--shape", "3,1", "--n", "3", "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["ok"] and all(c["status"] == "pass" for c in doc["checks"])
    assert "OK:" in capsys.readouterr().out


def test_cactus_entry_point(capsys):
    assert cactus_main(["verify", "--shape", "2,1", "--n", "4"]) == EXIT_OK
    assert "cactus relations" in capsys.readouterr().out


def test_verify_failure_exit_code(monkeypatch, capsys):
    import shifted_crystal.verify as verify

    monkeypatch.setitem(verify.SUITE_CHECKS, "cactus", (("always fails", lambda g: [{"x": 1}]),))
    assert main(["verify", "cactus", "--shape", "2,1", "--n", "3"]) == EXIT_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "shifted_crystal", "braid-order", "--shape", "3,2,1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["least_m"] == 3
