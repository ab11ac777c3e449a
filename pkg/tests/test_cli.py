import json
import subprocess
import sys

import pytest

from mutvis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_compute_petersen(capsys):
    code, data = run_json(capsys, "compute", "--graph", "petersen", "--variant", "all")
    assert code == 0
    assert [(r["variant"], r["value"]) for r in data] == [("mutual", 6), ("outer", 4), ("dual", 0), ("total", 0)]


def test_compute_single_variant(capsys):
    code, data = run_json(capsys, "compute", "--graph", "cart(K(3),K(3))", "--variant", "dual")
    assert code == 0 and data["value"] == 5 and data["exact"]
    assert len(data["witness_labels"]) == 5


def test_json_keys_are_sorted(capsys):
    _, out, _ = run(capsys, "compute", "--graph", "C(5)", "--variant", "mu")
    keys = [line.split(":")[0].strip() for line in out.splitlines() if line.startswith('  "')]
    assert keys == sorted(keys)


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "petersen", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("variant,value") and len(lines) == 5


def test_input_errors_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "compute", "--graph", "file(missing.g6)")
    assert code == 2 and "missing.g6" in err
    code, _, err = run(capsys, "compute", "--graph", "K(3,")
    assert code == 2 and "offset 4" in err
    code, _, _ = run(capsys, "compute", "--graph", "K(2) u K(2)")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--graph", "C(5)", "--variant", "mu", "9")
    assert code == 2


def test_graph_flag_accepts_file_path(capsys, tmp_path):
    from mutvis.graphs import petersen
    from mutvis.io import write_graph

    path = tmp_path / "p.el"
    write_graph(petersen(), path)
    code, data = run_json(capsys, "compute", "--graph", str(path), "--variant", "outer")
    assert code == 0 and data["value"] == 4


def test_budget_exhaustion_exit_3(capsys):
    code, data = run_json(
        capsys, "compute", "--graph", "cart(K(6),K(6))", "--variant", "mu", "--strategy", "bnb", "--budget", "0.05"
    )
    assert code == 3 and data["exact"] is False


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "--graph", "petersen", "--variant", "outer", "2", "4", "5", "6")
    assert code == 0 and data["valid"]
    code, data = run_json(capsys, "verify", "--graph", "petersen", "--variant", "total", "0")
    assert not data["valid"] and data["failing_pair"] is not None
    code, data = run_json(capsys, "verify", "--graph", "petersen", "--variant", "total")
    assert data["valid"]


def test_verify_with_labels_and_file(capsys, tmp_path):
    code, data = run_json(
        capsys, "verify", "--graph", "cart(K(3),K(3))", "--variant", "dual", "(0,0)", "(1,0)", "(2,0)", "(0,1)", "(0,2)"
    )
    assert data["valid"]
    path = tmp_path / "set.txt"
    path.write_text("0-1 2-3\n")
    code, data = run_json(capsys, "verify", "--graph", "line(K(4))", "--variant", "mu", f"@{path}")
    assert code == 0 and data["valid"]


def test_construct(capsys):
    code, data = run_json(capsys, "construct", "dual-cart", "--n", "4", "--m", "5")
    assert code == 0 and data["value"] == 8 and len(data["witness_labels"]) == 8
    assert data["source"] == "construction" and data["host_graph6"]
    _, data = run_json(capsys, "construct", "total-lkn", "--n", "10")
    assert data["value"] == 13 and len(data["edges"]) == 13
    _, data = run_json(capsys, "construct", "lk10-witness")
    assert data["value"] == 16 and [0, 4] in data["edges"]
    _, data = run_json(capsys, "construct", "family", "--graph", "g7(1,1,2)")
    assert {r["variant"]: r["value"] for r in data} == {"total": 4, "outer": 7, "dual": 6, "mutual": 8}
    _, data = run_json(capsys, "construct", "cograph", "--graph", "(K(1) u K(1)) + (K(1) u K(1))")
    assert {r["variant"]: r["value"] for r in data} == {"total": 2, "outer": 2, "dual": 3, "mutual": 3}
    code, _, _ = run(capsys, "construct", "dual-cart", "--n", "2", "--m", "5")
    assert code == 2
    code, _, _ = run(capsys, "construct", "dual-cart", "--n", "4")
    assert code == 2


def test_oracle(capsys):
    code, data = run_json(capsys, "oracle", "ex", "--forbid", "k4c4", "--n", "8")
    assert code == 0 and data["value"] == 15
    _, z = run_json(capsys, "oracle", "zarankiewicz", "--m", "3", "--n", "3")
    _, mu = run_json(capsys, "compute", "--graph", "cart(K(3),K(3))", "--variant", "mu")
    assert z["value"] == mu["value"] == 6
    code, _, _ = run(capsys, "oracle", "ex", "--forbid", "c4", "--n", "20")
    assert code == 3


def test_cograph_analyze(capsys):
    code, data = run_json(capsys, "cograph", "analyze", "--graph", "(K(1) u K(1)) + (K(1) u K(1))")
    assert code == 0 and data["is_cograph"]
    assert data["big_mu"]["t"] == 1
    assert data["numbers"] == {"dual": 3, "mutual": 3, "outer": 2, "total": 2}
    _, data = run_json(capsys, "cograph", "analyze", "--graph", "C(5)")
    assert not data["is_cograph"] and data["big_mu"] is None and data["numbers"] is None


@pytest.mark.parametrize("suite", ["family-g", "line-complete"])
def test_reports_agree(capsys, suite):
    code, rows = run_json(capsys, "report", suite)
    assert code == 0 and rows and all(r["agree"] for r in rows)


def test_report_cographs_seeded(capsys):
    code, a = run_json(capsys, "report", "cographs", "--count", "15", "--seed", "3")
    _, b = run_json(capsys, "report", "cographs", "--count", "15", "--seed", "3")
    assert code == 0 and a == b and all(r["agree"] for r in a)


def test_report_disagreement_exit_4(capsys, monkeypatch):
    from mutvis import cli

    monkeypatch.setitem(cli.REPORTS, "family-g", lambda args: [{"agree": False}])
    code, _, err = run(capsys, "report", "family-g")
    assert code == 4 and "disagree" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mutvis", "compute", "--graph", "C(5)", "--variant", "total"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 0


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["hamming", "direct"])
def test_product_reports_agree(capsys, suite):
    code, rows = run_json(capsys, "report", suite)
    assert code == 0 and all(r["agree"] for r in rows)
    if suite == "hamming":
        assert {(r["n"], r["m"]) for r in rows} == {(n, m) for n in range(3, 6) for m in range(n, 6)}
        assert next(r for r in rows if (r["n"], r["m"]) == (5, 5))["mutual_solver"] == 12
