import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from sig4 import cli, shen

GOLDEN = Path(__file__).parent / "golden" / "verify_all_grid25.csv"


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_dd_at_zero(capsys):
    code, out, _ = run(["eval", "dd", "--kappa", "0.5", "--z", "0"], capsys)
    assert code == 0
    assert float(out) == 1.0


def test_eval_dd_at_omega(capsys):
    code, out, _ = run(["eval", "dd", "--kappa", "0.5", "--z", "omega"], capsys)
    assert code == 0
    assert float(out) == pytest.approx(math.sqrt(0.75), abs=1e-13)
    assert len(out.strip().replace(".", "").lstrip("0")) == 15


def test_eval_f4_zero(capsys):
    code, out, _ = run(["eval", "f4", "--x", "0"], capsys)
    assert code == 0 and out.strip() == "1"


def test_eval_complex_output(capsys):
    code, out, _ = run(["eval", "dd", "--kappa", "0.5", "--z", "0.6+0.3i"], capsys)
    assert code == 0
    fr = shen.make_shen_frame(0.5)
    assert complex(out.strip()) == pytest.approx(shen.dd_via_wp(0.6 + 0.3j, fr), abs=1e-14)


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "wp", "--kappa", "0.5", "--z", "0"],
        ["eval", "dd", "--kappa", "0.5", "--z", "omega'"],
        ["eval", "dd", "--kappa", "1.5", "--z", "0.1"],
        ["eval", "f2", "--x", "1.0"],
        ["eval", "d_real", "--kappa", "0.5", "--z", "1+1j"],
        ["eval", "dd", "--kappa", "0.5", "--z", "abc"],
        ["eval", "f4"],
    ],
)
def test_eval_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("sig4: error:")
    assert err.count("\n") == 1


def test_eval_pole_diagnostic_names_guard(capsys):
    _, _, err = run(["eval", "dd", "--kappa", "0.5", "--z", "omega'"], capsys)
    assert "dd pole guard" in err


def test_eval_jacobi_and_real(capsys):
    code, out, _ = run(["eval", "sn", "--kappa", "0.6", "--z", "0"], capsys)
    assert code == 0 and float(out) == 0.0
    code, out, _ = run(["eval", "d_real", "--kappa", "0.5", "--z", "0.37"], capsys)
    assert float(out) == pytest.approx(shen.d_real(0.37, shen.Modulus.from_kappa(0.5)), abs=1e-14)
    code, out, _ = run(["eval", "wp", "--kappa", "0.5", "--z", "omega"], capsys)
    assert float(out) == pytest.approx(1 / 6 + math.sqrt(0.75) / 2, abs=1e-12)


def _periods_table(out):
    rows = {}
    for line in out.strip().splitlines():
        label, value = line.rsplit(None, 1) if "status" not in line else ("status", line)
        rows[label.strip()] = value
    return rows


def test_periods_symmetric_point(capsys):
    code, out, _ = run(["periods", "--kappa", str(1 / math.sqrt(2))], capsys)
    assert code == 0
    rows = _periods_table(out)
    assert float(rows["-i omega'/omega"]) == pytest.approx(math.sqrt(2), abs=1e-10)


def test_periods_small_and_mid(capsys):
    # at kappa = 0.01, e2 - e3 ~ kappa^2/4 makes the F2 route's omega'
    # ill-conditioned (~1e-9), so only the limit value is asserted here
    code, out, _ = run(["periods", "--kappa", "0.01"], capsys)
    assert code in (0, 3)
    assert float(_periods_table(out)["omega (F4)"]) == pytest.approx(math.pi / 2, abs=1e-4)
    code, out, _ = run(["periods", "--kappa", "0.5"], capsys)
    rows = _periods_table(out)
    assert code == 0
    assert float(rows["omega deviation"]) < 1e-10
    assert float(rows["omega' deviation"]) < 1e-10


def test_periods_failure_exit_3(capsys):
    code, out, _ = run(["periods", "--kappa", "0.5", "--tol", "1e-30"], capsys)
    assert code == 3
    assert "FAIL" in out


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_verify_transfer_grid_99(capsys):
    code, out, _ = run(["verify", "transfer", "--grid", "99"], capsys)
    assert code == 0
    rows = _rows(out)
    assert len(rows) == 99 * 3
    assert all(float(r["residual"]) < 1e-10 for r in rows)
    assert float(rows[0]["lambda"]) == 0.01
    assert float(rows[-1]["lambda"]) == pytest.approx(0.99, abs=1e-15)


def test_verify_ode_grid_5(capsys):
    code, out, _ = run(["verify", "ode", "--grid", "5"], capsys)
    assert code == 0
    rows = _rows(out)
    assert len(rows) == 5
    assert all(float(r["residual"]) < 1e-8 and r["pass"] == "true" for r in rows)


@pytest.mark.parametrize(
    "extra",
    [
        ["--grid", "0"],
        ["--lambda-min", "0.5", "--lambda-max", "0.2"],
        ["--lambda-min", "0.0"],
        ["--tol", "-1"],
    ],
)
def test_verify_config_errors(extra, capsys):
    code, _, _ = run(["verify", "transfer", *extra], capsys)
    assert code == 2


def test_verify_failure_exit_3(capsys):
    code, out, _ = run(["verify", "transfer", "--grid", "3", "--tol", "1e-30"], capsys)
    assert code == 3
    assert all(r["pass"] == "false" for r in _rows(out))


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("SIG4_TOL", "1e-30")
    code, _, _ = run(["verify", "periods", "--grid", "2"], capsys)
    assert code == 3
    monkeypatch.setenv("SIG4_TOL", "not-a-number")
    code, _, _ = run(["verify", "periods", "--grid", "2"], capsys)
    assert code == 2


def test_json_mirrors_csv(tmp_path, capsys):
    out_csv = tmp_path / "r.csv"
    out_json = tmp_path / "r.json"
    assert run(["verify", "periods", "--grid", "4", "--out", str(out_csv)], capsys)[0] == 0
    assert run(["verify", "periods", "--grid", "4", "--format", "json", "--out", str(out_json)], capsys)[0] == 0
    rows_csv = _rows(out_csv.read_text())
    rows_json = json.loads(out_json.read_text())
    assert len(rows_csv) == len(rows_json) == 8
    for c, j in zip(rows_csv, rows_json):
        assert float(c["lambda"]) == j["lambda"]
        assert c["check"] == j["check"]
        assert float(c["residual"]) == j["residual"]
        assert (c["pass"] == "true") == j["pass"]


def test_csv_header_and_parallel_order(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["verify", "routes", "--grid", "6", "--out", str(a)], capsys)
    run(["verify", "routes", "--grid", "6", "--jobs", "3", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0] == "lambda,check,residual,tolerance,pass"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sig4", "eval", "f2", "--x", "0"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"


def test_golden_file_matches(tmp_path, capsys):
    out = tmp_path / "all.csv"
    code, _, _ = run(["verify", "all", "--grid", "25", "--out", str(out)], capsys)
    assert code == 0
    assert out.read_bytes() == GOLDEN.read_bytes()
