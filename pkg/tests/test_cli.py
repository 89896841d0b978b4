import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from gbent.cli import TableError, emit_report, emit_table, main, parse_table
from gbent.constructions import lift_bent
from gbent.func import GBFunc

from test_func import gbfuncs

XY = GBFunc.from_callable(3, 1, 2, 1, lambda x: x[0] * x[1])


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, f, name="f.txt"):
    path = tmp_path / name
    path.write_text(emit_table(f))
    return str(path)


def test_parse_examples():
    f = parse_table("3 1 1 1\n0 0 0")
    assert f == GBFunc.zero(3, 1, 1, 1)
    g = parse_table("# comment\n3 1 2 2\n" + " ".join(map(str, range(9))) + "\n")
    assert g.table.tolist() == list(range(9)) and g.k == 2


@pytest.mark.parametrize("text,line,col,fragment", [
    ("4 1 1 1\n0 0 0 0", 1, 1, "odd prime"),
    ("3  1 1 1\n0 0 0", 1, 1, "header"),
    ("3 2 1 1\n" + "0 " * 9, 1, 3, "l <= k"),
    ("3 1 1 1\n0 0 3", 2, 5, "outside"),
    ("3 1 1 1\n0 x 1", 2, 3, "not an integer"),
    ("3 1 1 1\n0 0\n", 3, 1, "expected 3 values"),
    ("3 1 1 1\n0 0 0\n# trailing comment\n1", 4, 1, "more than 3"),
    ("# only a comment\n", 2, 1, "missing header"),
])
def test_parse_errors_are_located(text, line, col, fragment):
    with pytest.raises(TableError) as info:
        parse_table(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert fragment in str(info.value)


@settings(max_examples=30, deadline=None)
@given(gbfuncs())
def test_table_round_trip(f):
    assert parse_table(emit_table(f)) == f


def test_analyze_lifted_product(tmp_path, capsys):
    path = write(tmp_path, lift_bent(XY, 2))
    code, out, _ = run(capsys, "analyze", path)
    report = json.loads(out)
    assert code == 0
    assert report["gbent"] is True and report["regularity"] == "regular"
    assert report["input"]["p"] == 3 and len(report["dual"]) == 9


def test_analyze_failure_reports_witness(tmp_path, capsys):
    path = write(tmp_path, GBFunc.zero(3, 1, 2, 2))
    code, out, _ = run(capsys, "analyze", path)
    report = json.loads(out)
    assert code == 1 and report["gbent"] is False and report["gbent_witness"] == 0


def test_construct_spread_then_rds(tmp_path, capsys):
    code, table, _ = run(capsys, "construct", "--spread", "3", "2", "2")
    assert code == 0
    path = tmp_path / "spread.txt"
    path.write_text(table)
    code, out, _ = run(capsys, "rds", str(path))
    report = json.loads(out)
    assert code == 0
    assert report["rds"]["params"] == [81, 9, 81, 9]
    assert report["rds"]["bruteforce"]["ok"] and report["rds"]["characters"]["ok"]
    code, out, _ = run(capsys, "zpkbent", str(path))
    assert code == 0 and json.loads(out)["zpk_bent"] is True
    code, out, _ = run(capsys, "gray", str(path))
    assert code == 0 and json.loads(out)["gray_plateaued"] == [True, 1]


def test_lift_fails_zpk_and_rds(tmp_path, capsys):
    path = write(tmp_path, XY, "xy.txt")
    code, table, _ = run(capsys, "construct", "--lift", path, "--k", "2")
    assert code == 0 and parse_table(table) == lift_bent(XY, 2)
    lifted = tmp_path / "lift.txt"
    lifted.write_text(table)
    assert run(capsys, "zpkbent", str(lifted))[0] == 1
    assert run(capsys, "rds", str(lifted))[0] == 1


def test_characterize(tmp_path, capsys):
    path = write(tmp_path, lift_bent(XY, 2))
    code, out, _ = run(capsys, "characterize", path)
    report = json.loads(out)
    assert code == 0
    assert {r["mode"] for r in report["characterization"]} == {"A", "B", "C", "D"}
    assert all(r["verdict"] and r["agrees_with_gbent"] for r in report["characterization"])
    code, out, _ = run(capsys, "characterize", path, "--mode", "c", "--t", "1")
    entries = json.loads(out)["characterization"]
    assert code == 0 and len(entries) == 1 and entries[0]["certificate"]["0"]["d"] == [0]
    code, _, err = run(capsys, "characterize", path, "--mode", "A", "--t", "2")
    assert code == 2 and "mode A" in err


def test_construct_quad_and_mode_d(tmp_path, capsys):
    code, table, _ = run(capsys, "construct", "--quad", "3", "2", "3", "1")
    path = tmp_path / "q.txt"
    path.write_text(table)
    code, out, _ = run(capsys, "characterize", str(path), "--mode", "D")
    report = json.loads(out)
    assert code == 0 and report["gbent"] and report["characterization"][0]["verdict"]


def test_input_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 1 1 1\n0 0 0 0\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 1, column 1" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, _ = run(capsys, "construct", "--spread", "3", "1", "2")
    assert code == 2


def test_reports_are_deterministic(tmp_path, capsys):
    path = write(tmp_path, lift_bent(XY, 2))
    first = run(capsys, "characterize", path)[1]
    second = run(capsys, "characterize", path)[1]
    assert first == second
    timed = json.loads(run(capsys, "analyze", path, "--timings")[1])
    assert "timings" in timed


def test_emit_report_formats():
    echo = {"input": {"p": 3, "l": 1, "n": 1, "k": 1, "sha256": "00"}}
    assert json.loads(emit_report(echo)) == echo
    plain = emit_report({"gbent": False, "gbent_witness": 4, "input": echo["input"]}, "plain")
    assert "gbent_witness: 4" in plain and "input.p: 3" in plain
    with pytest.raises(ValueError):
        emit_report(echo, "xml")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    report = json.loads(out)["selftest"]
    assert code == 0
    assert all(v["passed"] == v["total"] > 0 for v in report.values())


def test_module_entry_point(tmp_path):
    path = write(tmp_path, XY)
    proc = subprocess.run([sys.executable, "-m", "gbent.cli", "analyze", path, "--format", "plain"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "gbent: True" in proc.stdout
