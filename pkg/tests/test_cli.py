"""Command-line surface: schemas, formats, exit codes, determinism."""

import json
import os
import subprocess
import sys

import pytest

from extline.cli import main, parse_word, poly_str


def run_cli(args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "extline.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


def test_poly_str():
    assert poly_str([1, 0, 0, 1]) == "1 + t^3"
    assert poly_str([1] + [0] * 3 + [-1]) == "1 - t^4"
    assert poly_str([0, 2]) == "2t"
    assert poly_str([]) == "0"


def test_ext_table_json_schema(tmp_path):
    out = tmp_path / "table.json"
    code = main(["ext-table", "--n", "2", "--max-deg", "7", "--format", "json",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert set(payload) == {"n", "characteristic", "max_degree", "data", "checks"}
    assert payload["data"]["1,1"] == [1, 0, 0, 1, 1, 0, 0, 1]
    assert payload["checks"][0]["status"] == "pass"


def test_ext_table_json_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["ext-table", "--n", "3", "--format", "json", "--seed", "5", "--out", str(a)])
    main(["ext-table", "--n", "3", "--format", "json", "--seed", "5", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_ext_table_all_ones_row_n1():
    r = run_cli(["ext-table", "--n", "1", "--max-deg", "5", "--format", "json"])
    assert r.returncode == 0
    assert json.loads(r.stdout)["data"]["1,1"] == [1] * 6


def test_poincare_command():
    r = run_cli(["poincare", "--n", "2", "--i", "1", "--j", "1"])
    assert r.returncode == 0
    assert "numerator: 1 + t^3" in r.stdout
    assert "denominator: 1 - t^4" in r.stdout
    r = run_cli(["poincare", "--n", "3", "--i", "2", "--j", "2", "--format", "json"])
    payload = json.loads(r.stdout)
    assert payload["numerator"] == "1 + t^2 + t^3 + t^5"
    r = run_cli(["poincare", "--n", "3", "--i", "1", "--j", "3", "--format", "json"])
    assert json.loads(r.stdout)["numerator"] == "t^2 + t^3"


def test_resolve_command_passes():
    r = run_cli(["resolve", "--n", "2", "--i", "1", "--max-deg", "4"])
    assert r.returncode == 0
    assert "P1 | P2 | P2 | P1 | P1 | period 4" in r.stdout


def test_resolve_reflected_term():
    r = run_cli(["resolve", "--n", "3", "--i", "2", "--max-deg", "6", "--format", "json"])
    payload = json.loads(r.stdout)
    assert payload["terms"].split(" | ")[3] == "P2"  # degree N lands on P_{N+1-i}


def test_resolve_corrupt_flag_fails():
    r = run_cli(["resolve", "--n", "3", "--i", "1", "--char", "0",
                 "--debug-corrupt-sign", "--format", "json"])
    assert r.returncode == 1
    payload = json.loads(r.stdout)
    failed = [c for c in payload["checks"] if c["status"] == "fail"]
    assert failed and any("degree" in c["detail"] for c in failed)


def test_verify_relations_vacuous_n1():
    r = run_cli(["verify", "--suite", "relations", "--n", "1", "--format", "json"])
    assert r.returncode == 0
    assert json.loads(r.stdout)["status"] == "PASS"


def test_verify_all_small():
    r = run_cli(["verify", "--suite", "all", "--n", "2", "--max-deg", "8"])
    assert r.returncode == 0
    assert "PASS" in r.stdout


def test_verify_gamma_suite():
    r = run_cli(["verify", "--suite", "gamma", "--n", "3", "--max-deg", "8",
                 "--format", "json"])
    assert r.returncode == 0


def test_gamma_dims_against_table():
    r = run_cli(["gamma-dims", "--n", "2", "--max-deg", "6", "--format", "json"])
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["data"]["1,2"] == [0, 1, 1, 0, 0, 1, 1]


def test_yoneda_product_command():
    r = run_cli(["yoneda-product", "--n", "3", "--word", "x1 x2", "--format", "json"])
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["data"]["1,3"] == "nonzero"
    r = run_cli(["yoneda-product", "--n", "3", "--word", "x1 x1*"])
    assert "zero" in r.stdout


def test_word_parsing():
    w = parse_word(3, "x1, x2  y3")
    assert w.arrows == (("x", 1), ("x", 2), ("y", 3))
    w = parse_word(3, "y1 x2*")
    assert w.arrows == (("y", 1), ("xstar", 2))
    with pytest.raises(ValueError):
        parse_word(3, "z1")
    with pytest.raises(ValueError):
        parse_word(3, "y1*")


def test_usage_errors_exit_two():
    assert run_cli(["ext-table", "--n", "0"]).returncode == 2
    assert run_cli(["ext-table", "--n", "2", "--char", "6"]).returncode == 2
    assert run_cli(["poincare", "--n", "2", "--i", "3", "--j", "1"]).returncode == 2
    assert run_cli(["resolve", "--n", "2"]).returncode == 2


def test_latex_output():
    r = run_cli(["ext-table", "--n", "2", "--max-deg", "3", "--format", "latex"])
    assert r.returncode == 0
    assert r.stdout.startswith("\\begin{tabular}")
    assert "\\end{tabular}" in r.stdout


def test_thread_env_does_not_change_output():
    env = dict(os.environ, EXTLINE_THREADS="4")
    a = run_cli(["verify", "--suite", "syzygy", "--n", "3", "--format", "json"], env=env)
    b = run_cli(["verify", "--suite", "syzygy", "--n", "3", "--format", "json"])
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
