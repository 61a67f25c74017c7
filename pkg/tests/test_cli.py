import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from kneser_bandwidth.cli import CSV_COLUMNS, main
from kneser_bandwidth.layout import read_layout, trivial_layout


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_12_3(capsys):
    code, out, _ = run(["verify", "--n", "12", "--r", "3"], capsys)
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln.split() and ln.split()[0] in
            {"S12", "S156", "S157", "Rest15", "S189", "S18_10", "RestS1p", "S346", "S347",
             "Rest34", "S356", "S357", "Rest35", "Rest3"}]
    assert len(rows) == 14
    assert all(" ok " in r for r in rows)
    assert "U_cert = 173" in out


def test_verify_exact_14_4(capsys):
    code, out, _ = run(["verify", "--n", "14", "--r", "4", "--exact"], capsys)
    assert code == 0 and "FAIL" not in out and "U_cert = 746" in out


def test_layout_infeasible(tmp_path, capsys):
    code, _, err = run(["layout", "--n", "9", "--r", "3", "--kind", "paper", "--out", str(tmp_path / "x")], capsys)
    assert code == 2
    assert "n_min" in err and "10" in err
    assert not (tmp_path / "x").exists()


def test_verify_infeasible(capsys):
    code, _, err = run(["verify", "--n", "10", "--r", "2"], capsys)
    assert code == 2 and "r_min" in err


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["bounds", "--n", "12"],
    ["layout", "--n", "12", "--r", "3", "--kind", "spiral", "--out", "x"],
    ["dilation", "--n", "12", "--r", "3"],
    ["exact", "--n", "7", "--r", "3"],
    ["sweep", "--r", "3", "--n-min", "14", "--n-max", "12", "--out", "x"],
    ["report", "--n", "12", "--r", "3", "--kinds", "paper,spiral"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1 and "usage error" in err


def test_exact_budget(capsys):
    code, out, _ = run(["exact", "--n", "6", "--r", "2", "--budget", "5"], capsys)
    assert code == 3 and "bandwidth in [" in out


def test_exact_petersen(capsys):
    code, out, _ = run(["exact", "--n", "5", "--r", "2"], capsys)
    assert code == 0 and "bandwidth 5" in out


def test_layout_then_dilation(tmp_path, capsys):
    path = tmp_path / "triv.txt"
    assert run(["layout", "--n", "10", "--r", "3", "--kind", "trivial", "--out", str(path)], capsys)[0] == 0
    assert read_layout(path) == trivial_layout(10, 3)
    code, out, _ = run(["dilation", "--layout", str(path), "--method", "all"], capsys)
    assert code == 0
    values = {ln.split()[2] for ln in out.splitlines()}
    assert len(values) == 1 and int(values.pop()) <= 102


def test_dilation_generated(capsys):
    code, out, _ = run(["dilation", "--n", "12", "--r", "3", "--kind", "paper"], capsys)
    assert code == 0 and out.startswith("scan: dilation 173 witness")


def test_bounds_json(capsys):
    code, out, _ = run(["bounds", "--n", "20", "--r", "4", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["lower_thm27"] == {"exact": "3553/2", "decimal": 1776.5}
    assert data["certified_upper"] == 4080
    assert Fraction(data["residual_upper"]["exact"]) == Fraction(data["asym_upper_terms"]["exact"]) - 4080
    assert data["regime_flag"] == "not-meaningful"


def test_report_json_dilations(capsys):
    code, out, _ = run(["report", "--n", "12", "--r", "3", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["dilations"] == {"paper": 173, "trivial": 192, "bfs": 209}
    assert data["lower_thm27"] is None


def test_sweep_csv(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert run(["sweep", "--r", "3", "--n-min", "12", "--n-max", "30", "--out", str(out)], capsys)[0] == 0
    rows = list(csv.DictReader(out.open()))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    assert len(rows) == 19 and [int(r["n"]) for r in rows] == list(range(12, 31))
    residual = [Fraction(r["residual_upper"]) for r in rows]
    assert max(residual) <= 1
    for r in rows:
        assert int(r["dilation_paper"]) <= int(r["certified_upper"]) <= int(r["trivial_upper"])
    assert out.read_bytes().isascii()


def test_sweep_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        run(["sweep", "--r", "3", "--n-min", "12", "--n-max", "16", "--out", str(p)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_sweep_keeps_infeasible_rows(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert run(["sweep", "--r", "3", "--n-min", "8", "--n-max", "11", "--out", str(out)], capsys)[0] == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["certified_upper"] for r in rows] == ["", "", "86", "125"]
    assert rows[0]["dilation_paper"] == "" and rows[0]["dilation_trivial"] != ""


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "kneser_bandwidth.cli", "bounds", "--n", "12", "--r", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "certified_upper   173" in proc.stdout
