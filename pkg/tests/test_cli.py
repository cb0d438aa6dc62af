import json

import pytest

from riemann_energy import cli


def test_constants(capsys):
    assert cli.main(["constants", "--tol", "1e-8"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["C_quadrature_planar"] - out["C_exact"]) <= 1e-8


def test_identity(capsys):
    assert cli.main(["identity", "--configs", "50", "--max-n", "20", "--seed", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["max_relative_discrepancy"] <= 1e-10


def test_identity_violation(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_identity_check", lambda *a: 1e-6)
    assert cli.main(["identity"]) == cli.EXIT_VIOLATION


def test_estimate_to_file(tmp_path):
    out = tmp_path / "r.csv"
    code = cli.main(["estimate", "--degrees", "2,3", "--samples", "40", "--out", str(out)])
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("N,n_samples,n_rejected,mean_abs")
    assert len(lines) == 3


def test_sweep_json(capsys):
    assert cli.main(["sweep", "--min", "2", "--max", "6", "--step", "2", "--samples", "30", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["N"] for r in data] == [2, 4, 6]


def test_z_score_violation(capsys):
    assert cli.main(["estimate", "--degrees", "3", "--samples", "30", "--z-max", "0"]) == cli.EXIT_VIOLATION


def test_numerical_failure(monkeypatch, capsys):
    from riemann_energy.exceptions import ConvergenceFailure

    def boom(tol):
        raise ConvergenceFailure("no")

    monkeypatch.setattr(cli, "run_constants_check", boom)
    assert cli.main(["constants"]) == cli.EXIT_NUMERICAL


def test_bad_degrees():
    with pytest.raises(SystemExit):
        cli.main(["estimate", "--degrees", "a,b"])
