from __future__ import annotations

import pytest

from parketaylor.cli import main
from parketaylor.ptcore import build_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_matrix_deterministic(capsys, tmp_path):
    code, first, _ = run(capsys, "matrix", "--n", "5")
    assert code == 0
    _, second, _ = run(capsys, "matrix", "--n", "5")
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "10 6"
    entries = {tuple(map(int, l.split()[:2])) for l in lines[1:]}
    dense = build_matrix(5).to_dense()
    assert entries == {(r, c) for r in range(10) for c in range(6) if dense[r][c]}
    out = tmp_path / "a5.txt"
    assert main(["matrix", "--n", "5", "--out", str(out)]) == 0
    assert out.read_text() == first


def test_usage_errors(capsys):
    assert run(capsys, "matrix", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "bogus", "--n", "5")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


@pytest.mark.parametrize("suite", ["toric", "lifts", "moduli", "full"])
def test_verify_n5_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--n", "5")
    assert code == 0
    assert "exit = 0" in out
    assert "FAIL" not in out


def test_long_items_are_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "toric", "--n", "6")
    assert code == 0
    assert "skipped" in out and "--opt-in-long" in out


def test_conjecture_reports_both_readings(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "conjecture", "--n", "7")
    assert code == 1
    assert "span 106/106" in out
    assert "info" in out


def test_budget_exit_code(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "lifts", "--n", "6", "--opt-in-long", "--budget-seconds", "0.01"
    )
    assert code == 3
    assert "budget-exceeded" in out


def test_export_formats(capsys):
    code, out, _ = run(capsys, "export", "ideal", "--n", "5", "--format", "cas-script")
    assert code == 0
    assert "saturate(I, product gens R)" in out
    assert "z12354*z12435 + z12345*z12453 + z12354*z12453" in out
    code, out, _ = run(capsys, "export", "lifts", "--n", "6")
    assert code == 0 and len(out.splitlines()) == 9
    code, out, _ = run(capsys, "export", "matrix", "--n", "5")
    assert code == 0 and out.startswith("10 6")
