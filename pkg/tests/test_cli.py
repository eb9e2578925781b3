import csv
import json
from io import StringIO

import numpy as np
import pytest

from entswap import Povm, analysis, asymmetric_povm, povm_to_dict, sweep, werner_bell_povm
from entswap.analysis import SweepConfig
from entswap.cli import SWEEP_HEADER, main

I4 = np.eye(4, dtype=complex)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sweep_stdout_shape(capsys):
    code, out, err = run_cli(capsys, "sweep", "--case", "I", "--grid", "5")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 1 + 5 * 4 * 3


def test_sweep_csv_round_trips(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--case", "II", "--grid", "3")
    assert code == 0
    rows = list(csv.DictReader(StringIO(out)))
    records = sweep(SweepConfig(case="II", count=3))
    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        assert row["case"] == rec.case
        assert row["pair"] == rec.pair
        assert int(row["outcome"]) == rec.outcome
        assert abs(float(row["x"]) - rec.x) < 1e-15
        for name in ("lambda", "probability", "negativity", "steering2",
                     "steering3", "nonlocality", "M", "Lambda3"):
            attr = {"lambda": "lam"}.get(name, name)
            assert abs(float(row[name]) - getattr(rec, attr)) < 1e-9


def test_sweep_case1_has_empty_x_column(capsys):
    _, out, _ = run_cli(capsys, "sweep", "--case", "I", "--grid", "2")
    row = next(csv.DictReader(StringIO(out)))
    assert row["x"] == ""


def test_sweep_writes_file_atomically(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run_cli(capsys, "sweep", "--case", "I", "--grid", "3", "--out", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().strip().splitlines()
    assert len(lines) == 1 + 3 * 4 * 3
    assert not list(tmp_path.glob("*.tmp"))


def test_sweep_compute_error_leaves_no_file(tmp_path, capsys):
    target = tmp_path / "never.csv"
    code, _, err = run_cli(
        capsys, "sweep", "--case", "I", "--x", "0.3", "--out", str(target)
    )
    assert code == 1
    assert "case I has no x" in err
    assert not target.exists()


def test_bad_flags_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep"])  # --case missing
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--case", "V"])
    assert exc.value.code == 2


def test_thresholds_text_contains_interval_values(capsys):
    code, out, _ = run_cli(capsys, "thresholds", "--case", "I")
    assert code == 0
    for value in ("0.333333", "0.577350", "0.707107", "0.910684", "0.748610", "0.624519"):
        assert value in out


def test_thresholds_csv_and_coarse_tolerance(capsys):
    code, out, _ = run_cli(
        capsys, "thresholds", "--case", "I", "--format", "csv",
        "--grid", "21", "--tol", "1e-3",
    )
    assert code == 0
    rows = {(r["pair"], r["measure"]): r for r in csv.DictReader(StringIO(out))}
    assert rows[("14", "negativity")]["pattern"] == "above"
    assert abs(float(rows[("14", "negativity")]["threshold"]) - 1 / 3) < 1e-3
    assert abs(float(rows[("12", "nonlocality")]["threshold"]) - 0.6245192) < 1e-3


def test_analyze_projective_swap(tmp_path, capsys):
    path = tmp_path / "projective.json"
    path.write_text(json.dumps(povm_to_dict(werner_bell_povm(1.0))))
    code, out, err = run_cli(capsys, "analyze", "--povm", str(path))
    assert code == 0 and err == ""
    assert "probability 0.25" in out
    assert "nonlocal" in out


def test_analyze_csv_flags_nonlocal_pair(tmp_path, capsys):
    path = tmp_path / "asym.json"
    path.write_text(json.dumps(povm_to_dict(asymmetric_povm(0.8, 0.5))))
    code, out, _ = run_cli(capsys, "analyze", "--povm", str(path), "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(StringIO(out)))
    assert len(rows) == 4 * 3
    for row in rows:
        expected = "true" if row["pair"] == "14" else "false"
        assert row["nonlocal"] == expected
        assert row["entangled"] == "true"


def test_analyze_invalid_povm_exits_three(tmp_path, capsys):
    path = tmp_path / "double.json"
    path.write_text(json.dumps(povm_to_dict(Povm((I4, I4), label="double"))))
    code, _, err = run_cli(capsys, "analyze", "--povm", str(path))
    assert code == 3
    assert "completeness" in err


def test_analyze_structural_error_exits_three(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"label": "broken", "effects": [[[0.0]]]}))
    code, _, err = run_cli(capsys, "analyze", "--povm", str(path))
    assert code == 3
    assert "effect 1" in err


def test_analyze_missing_file_exits_one(capsys):
    code, _, err = run_cli(capsys, "analyze", "--povm", "/nonexistent/p.json")
    assert code == 1
    assert "cannot read" in err


def test_verify_all_cases_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--grid", "11")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out


def test_verify_detects_injected_fault(monkeypatch, capsys):
    real = analysis.case1_closed_forms

    class Corrupted:
        def __init__(self, lam):
            self._forms = real(lam)

        def report(self, pair, tol=1e-9):
            rep = self._forms.report(pair, tol)
            from entswap import CorrelationReport

            return CorrelationReport.from_quantities(
                rep.negativity + 1e-5, rep.M, rep.Lambda3, tol
            )

    monkeypatch.setattr(analysis, "case1_closed_forms", Corrupted)
    code, out, _ = run_cli(capsys, "verify", "--case", "I", "--grid", "5")
    assert code == 1
    assert "FAIL" in out
