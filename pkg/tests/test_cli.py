"""CLI subcommands: spectrum, gen, bounds, classify, table."""

import json
import subprocess
import sys


def run_cli(*args, check=True):
    res = subprocess.run([sys.executable, "-m", "specind.cli", *args],
                         capture_output=True, text=True)
    if check:
        assert res.returncode == 0, res.stderr
    return res


def test_spectrum_family():
    res = run_cli("spectrum", "--family", "petersen")
    data = json.loads(res.stdout)
    assert data["theta"] == [3, 1, -2]
    assert data["mult"] == [1, 5, 4]
    assert data["n"] == 10


def test_gen_graph6_round_trip(tmp_path):
    res = run_cli("gen", "--family", "cycle:6")
    g6 = res.stdout.strip()
    path = tmp_path / "c6.g6"
    path.write_text(g6 + "\n")
    res = run_cli("spectrum", "--in", str(path))
    data = json.loads(res.stdout)
    assert data["n"] == 6 and data["theta"][0] == 2


def test_bounds_text_and_floor():
    res = run_cli("bounds", "--family", "odd:6", "--k", "4", "--exact")
    assert "11" in res.stdout


def test_bounds_json_format():
    res = run_cli("bounds", "--family", "petersen", "--k", "1",
                  "--format", "json")
    reports = json.loads(res.stdout)
    methods = {r["method"] for r in reports}
    assert "cvetkovic" in methods and "hoffman" in methods


def test_bounds_csv_format():
    res = run_cli("bounds", "--family", "petersen", "--k", "1",
                  "--format", "csv")
    assert res.stdout.splitlines()[0].startswith("method,k,value,floor")


def test_bounds_all_k():
    res = run_cli("bounds", "--family", "hypercube:4", "--k", "all")
    assert res.stdout.strip()


def test_classify():
    res = run_cli("classify", "--family", "kneser:6,2", "--k", "1")
    data = json.loads(res.stdout)
    assert data["is_ch"] and data["is_tight_ch"]
    assert data["inertia"] == 5 and data["ratio"] == 5


def test_classify_no_exact():
    res = run_cli("classify", "--family", "odd:5", "--k", "3", "--no-exact")
    data = json.loads(res.stdout)
    assert data["inertia"] == 8 and data["exact"] is None


def test_error_exit_code():
    res = run_cli("spectrum", "--family", "unknown:1", check=False)
    assert res.returncode == 2
    res = run_cli("spectrum", "--in", "/nonexistent/file.g6", check=False)
    assert res.returncode == 2


def test_table_t1():
    res = run_cli("table", "t1")
    assert "mismatch 0" in res.stdout


def test_table_t2():
    res = run_cli("table", "t2")
    assert "mismatch 0" in res.stdout


def test_table_minor_odd():
    res = run_cli("table", "minor-odd")
    assert "mismatch 0" in res.stdout


def test_table_sign_odd6():
    res = run_cli("table", "sign-odd6")
    assert "mismatch 0" in res.stdout


def test_table_unknown():
    res = run_cli("table", "nonsense", check=False)
    assert res.returncode == 2


def test_table_row_filter():
    res = run_cli("table", "t5", "--rows", "frucht,nauru,hoffman")
    assert "mismatch 0" in res.stdout
    assert "ok 3" in res.stdout
