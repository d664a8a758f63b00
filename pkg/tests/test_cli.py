import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from qhmetrics.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestDist:
    def test_k_punctured_quoted_digits(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "k-punctured", "--z", "0,0",
            "--x", "1,0", "--y", "0,1",
        )
        assert rc == 0
        assert out.strip() == "1.570796326795"

    def test_rho_quoted_digits(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "rho", "--x", "0,0", "--y", "0.5,0"
        )
        assert rc == 0
        assert out.strip() == "1.098612288668"

    def test_j_identical_points(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "j", "--x", "0,0", "--y", "0,0"
        )
        assert rc == 0
        assert float(out) == 0.0

    def test_j_punctured_via_z(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "j", "--z", "0,0", "--x", "1,0", "--y", "2,0"
        )
        assert rc == 0
        assert math.isclose(float(out), math.log(2), rel_tol=1e-12)

    def test_k_ball_interval(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "k-ball", "--x", "0.5,0", "--y", "0,0.5",
            "--format", "json",
        )
        assert rc == 0
        payload = json.loads(out)
        assert payload["lo"] <= 1.15434129 <= payload["hi"]
        assert payload["hi"] - payload["lo"] <= 1e-4

    def test_chordal_with_infinity(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "q", "--x", "0,0", "--y", "inf"
        )
        assert rc == 0
        assert float(out) == 1.0

    def test_delta_default_ball(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "delta", "--x", "0,0", "--y", "0.5,0"
        )
        assert rc == 0
        assert math.isclose(float(out), math.log(3), rel_tol=1e-12)

    def test_delta_boundary_sample(self, capsys):
        rc, out, _ = run_cli(
            capsys, "dist", "--metric", "delta", "--boundary", "0,0;inf",
            "--x", "1,0", "--y", "2,0",
        )
        assert rc == 0
        assert math.isclose(float(out), math.log(2), rel_tol=1e-12)

    def test_domain_error_exit_2(self, capsys):
        rc, out, err = run_cli(
            capsys, "dist", "--metric", "j", "--x", "1,0", "--y", "0,0"
        )
        assert rc == 2
        assert "|x| < 1" in err

    def test_dimension_mismatch_exit_2(self, capsys):
        rc, _, err = run_cli(
            capsys, "dist", "--metric", "rho", "--x", "0.1,0", "--y", "0.1,0,0"
        )
        assert rc == 2
        assert "dimension" in err

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dist", "--metric", "nope", "--x", "0,0", "--y", "0,0"])
        assert exc.value.code == 2


class TestMobius:
    def test_apply(self, capsys):
        rc, out, _ = run_cli(capsys, "mobius", "--a", "0.5,0", "--x=-0.5,0")
        assert rc == 0
        coords = [float(tok) for tok in out.strip().split(",")]
        assert math.isclose(coords[0], -0.8, rel_tol=1e-12)
        assert coords[1] == 0.0

    def test_apply_with_rotation(self, capsys):
        rc, out, _ = run_cli(
            capsys, "mobius", "--a", "0.5,0", "--x", "0.5,0",
            "--kappa", "0,-1,1,0", "--format", "json",
        )
        assert rc == 0
        payload = json.loads(out)
        assert np.allclose(payload["image"], [0.0, 0.0])
        assert math.isclose(payload["bilipschitz_constant"], 3.0, rel_tol=1e-12)

    def test_bad_center_exit_2(self, capsys):
        rc, _, err = run_cli(capsys, "mobius", "--a", "1,0", "--x", "0,0")
        assert rc == 2


class TestVerify:
    def test_single_suite_passes(self, capsys):
        rc, out, _ = run_cli(
            capsys, "verify", "--suite", "lemma33", "--seed", "7"
        )
        assert rc == 0
        assert "checks passed" in out
        assert "FAIL" not in out

    def test_deterministic_output(self, capsys):
        args = ("verify", "--suite", "conj28", "--seed", "7", "--samples", "50")
        rc1, out1, _ = run_cli(capsys, *args)
        rc2, out2, _ = run_cli(capsys, *args)
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_corrupted_constant_fails(self, capsys, monkeypatch):
        # mutation control: breaking a library function must flip the suite red
        import qhmetrics.special as special
        import qhmetrics.verify as verify_mod

        orig = special.sum_ratio_max
        monkeypatch.setattr(
            verify_mod.special, "sum_ratio_max", lambda a: (orig(a)[0] * 1.01, orig(a)[1])
        )
        rc, out, _ = run_cli(capsys, "verify", "--suite", "lemma33", "--seed", "7")
        assert rc == 1
        assert "FAIL" in out

    def test_csv_format(self, capsys):
        rc, out, _ = run_cli(
            capsys, "verify", "--suite", "conj28", "--seed", "1", "--format", "csv"
        )
        assert rc == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["name", "passed", "margin", "detail"]
        assert all(r[1] == "1" for r in rows[1:])


class TestSearch:
    def test_qk_sup_csv_round_trip(self, capsys):
        rc, out, _ = run_cli(
            capsys, "search", "--problem", "qk-sup", "--z", "0,0",
            "--seeds", "8", "--budget", "4000", "--rng", "1",
        )
        assert rc == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["iteration", "best_value", "x_1", "x_2", "y_1", "y_2"]
        values = [float(r[1]) for r in rows[1:]]
        assert values == sorted(values)
        assert abs(values[-1] - 0.5) < 5e-2
        # full-precision round trip
        from qhmetrics import chordal_qh_problem, maximize

        res = maximize(
            chordal_qh_problem(np.zeros(2)), seeds=8, budget=4000, rng_seed=1
        )
        assert values[-1] == res.best_value
        assert [float(c) for c in rows[-1][2:]] == list(res.trace_args[-1])

    def test_byte_identical_files(self, capsys, tmp_path):
        f1 = tmp_path / "a.csv"
        f2 = tmp_path / "b.csv"
        for f in (f1, f2):
            rc, _, _ = run_cli(
                capsys, "search", "--problem", "qk-sup", "--z", "0.75,0",
                "--seeds", "8", "--budget", "4000", "--rng", "5", "--out", str(f),
            )
            assert rc == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_sharpness_table(self, capsys):
        rc, out, _ = run_cli(
            capsys, "search", "--problem", "thm13-sharpness", "--a", "0.5"
        )
        assert rc == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["t", "ratio_forward", "ratio_inverse"]
        # last row is the Richardson extrapolation at t = 0
        assert float(rows[-1][0]) == 0.0
        assert math.isclose(float(rows[-1][1]), 2 / 3, abs_tol=1e-6)
        assert math.isclose(float(rows[-1][2]), 1.5, abs_tol=1e-6)

    def test_conj17_json_verdict(self, capsys):
        rc, out, _ = run_cli(
            capsys, "search", "--problem", "conj17", "--a", "0.9",
            "--budget", "5000", "--rng", "2", "--format", "json",
        )
        assert rc == 0
        payload = json.loads(out)
        assert payload["verdict"] in ("consistent", "exceeded")
        assert payload["verdict"] == "consistent"
        assert payload["best_value"] <= 1.9 + 1e-6

    def test_conj28_grid(self, capsys):
        rc, out, _ = run_cli(
            capsys, "search", "--problem", "conj28-grid", "--format", "json",
            "--knum", "7", "--rnum", "11",
        )
        assert rc == 0
        payload = json.loads(out)
        assert payload["holds"] is True

    def test_missing_flag_exit_2(self, capsys):
        rc, _, err = run_cli(capsys, "search", "--problem", "qk-sup")
        assert rc == 2


class TestSpecfun:
    def test_values(self, capsys):
        rc, out, _ = run_cli(capsys, "specfun", "--fn", "mu", "--r", "0.7071067811865476")
        assert rc == 0
        assert math.isclose(float(out), math.pi / 2, rel_tol=1e-12)
        rc, out, _ = run_cli(capsys, "specfun", "--fn", "phi", "--K", "2", "--r", "0.25")
        assert math.isclose(float(out), 0.8, rel_tol=1e-9)
        rc, out, _ = run_cli(capsys, "specfun", "--fn", "b", "--K", "1.1")
        assert math.isclose(float(out), 1.9199468881943842, rel_tol=1e-9)
        rc, out, _ = run_cli(
            capsys, "specfun", "--fn", "lemma22", "--r", "0.5", "--t", "0.5"
        )
        assert 1.0 < float(out) < 1.5
        rc, out, _ = run_cli(
            capsys, "specfun", "--fn", "remark", "--a", "0.5", "--t", "0.5"
        )
        assert math.isclose(
            float(out), 1 + math.atanh(0.25) / math.atanh(0.5), rel_tol=1e-10
        )

    def test_sum_ratio_max_output(self, capsys):
        rc, out, _ = run_cli(capsys, "specfun", "--fn", "lemma33", "--a", "1", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert math.isclose(payload["max"], ((1 + math.sqrt(5)) / 2) ** 2, rel_tol=1e-12)

    def test_missing_arg_exit_2(self, capsys):
        rc, _, err = run_cli(capsys, "specfun", "--fn", "mu")
        assert rc == 2


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "qhmetrics.cli", "dist", "--metric", "rho",
         "--x", "0,0", "--y", "0.5,0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1.098612288668"
