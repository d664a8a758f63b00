import math

import numpy as np
import pytest

from qhmetrics import (
    DomainError,
    chordal_qh_problem,
    diameter_family_ratio,
    explore_j_quasiinvariance,
    j_quasiinvariance_problem,
    j_rho_alignment_ratio,
    maximize,
    mobius_sharpness_table,
    monotone_scan,
    quasiinvariance_verdict,
    rho_invariance_problem,
    richardson_limit,
    sum_ratio_max,
    sum_ratio_problem,
)


class TestMaximize:
    def test_chordal_qh_at_origin(self):
        res = maximize(chordal_qh_problem(np.zeros(2)), seeds=32, budget=20000, rng_seed=1)
        assert abs(res.best_value - 0.5) <= 1e-3
        assert res.best_value <= 0.5 + 1e-9

    def test_chordal_qh_offset_extremal_point(self):
        z = np.array([0.75, 0.0])
        res = maximize(chordal_qh_problem(z), seeds=32, budget=30000, rng_seed=1)
        assert abs(res.best_value - 1.0) <= 1e-3
        target = np.array([-0.5, 0.0])
        assert np.linalg.norm(res.best_args[0] - target) <= 0.05
        assert np.linalg.norm(res.best_args[1] - target) <= 0.05

    def test_rho_invariance_is_flat(self):
        res = maximize(rho_invariance_problem(0.7), seeds=8, budget=4000, rng_seed=2)
        assert abs(res.best_value - 1.0) <= 1e-9

    def test_sum_ratio_matches_closed_form(self):
        for a in (0.0, 1.0, 2.0):
            res = maximize(sum_ratio_problem(a), seeds=16, budget=8000, rng_seed=3)
            assert abs(res.best_value - sum_ratio_max(a)[0]) <= 1e-6

    def test_reproducible_bit_identical(self):
        p = chordal_qh_problem(np.array([0.5, 0.25]))
        a = maximize(p, seeds=16, budget=8000, rng_seed=42)
        b = maximize(p, seeds=16, budget=8000, rng_seed=42)
        assert a.best_value == b.best_value
        assert a.trace == b.trace
        assert all(np.array_equal(u, v) for u, v in zip(a.best_args, b.best_args))
        c = maximize(p, seeds=16, budget=8000, rng_seed=43)
        assert c.trace != a.trace

    def test_best_value_matches_args(self):
        p = chordal_qh_problem(np.zeros(2))
        res = maximize(p, seeds=8, budget=5000, rng_seed=7)
        from qhmetrics import chordal, k_punctured

        x, y = res.best_args
        direct = chordal(x, y) / k_punctured(np.zeros(2), x, y)
        assert math.isclose(direct, res.best_value, rel_tol=1e-10)

    def test_trace_monotone_and_args_aligned(self):
        res = maximize(chordal_qh_problem(np.zeros(2)), seeds=8, budget=5000, rng_seed=9)
        vals = [v for _, v in res.trace]
        assert all(u < v for u, v in zip(vals, vals[1:]))
        assert len(res.trace) == len(res.trace_args)
        assert res.status in ("converged", "budget-exhausted")

    def test_input_validation(self):
        p = sum_ratio_problem(1.0)
        with pytest.raises(DomainError):
            maximize(p, seeds=0, budget=100, rng_seed=0)
        with pytest.raises(DomainError):
            maximize(p, seeds=1, budget=0, rng_seed=0)


class TestSharpnessTable:
    def test_limits(self):
        table = mobius_sharpness_table(0.5, [1e-4])
        t, fwd, inv = table[0]
        assert abs(fwd - 2 / 3) <= 1e-3
        assert abs(inv - 1.5) <= 1e-3

    def test_richardson_hits_limits(self):
        ts = [1e-2, 1e-3, 1e-4]
        table = mobius_sharpness_table(0.5, ts)
        ex_f = richardson_limit(ts, [r[1] for r in table])
        ex_i = richardson_limit(ts, [r[2] for r in table])
        assert abs(ex_f - 2 / 3) <= 1e-6
        assert abs(ex_i - 1.5) <= 1e-6

    def test_small_center_both_ratios_near_1(self):
        table = mobius_sharpness_table(1e-6, [1e-6])
        _, fwd, inv = table[0]
        assert abs(fwd - 1.0) <= 1e-5
        assert abs(inv - 1.0) <= 1e-5

    def test_factor_2_approached_near_unit_center(self):
        table = mobius_sharpness_table(1 - 1e-3, [1e-6])
        assert table[0][2] >= 2 - 5e-3

    def test_domain(self):
        with pytest.raises(DomainError):
            mobius_sharpness_table(0.5, [1.1])  # (1+t) a leaves the ball
        with pytest.raises(DomainError):
            mobius_sharpness_table(1.2, [1e-3])


class TestRichardson:
    def test_polynomial_exact(self):
        # quadratic in t is reproduced exactly from three nodes
        ts = [0.1, 0.01, 0.001]
        vals = [7.0 + 3 * t - 2 * t * t for t in ts]
        assert math.isclose(richardson_limit(ts, vals), 7.0, rel_tol=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            richardson_limit([0.1], [1.0])


class TestExplorer:
    def test_explorer_consistent_with_conjectured_sup(self):
        for absa in (0.3, 0.9):
            res = explore_j_quasiinvariance(absa, budget=20000, rng_seed=11)
            assert res.best_value <= 1 + absa + 1e-6
            assert res.best_value >= 1 + absa - 1e-2
            assert quasiinvariance_verdict(absa, res.best_value) == "consistent"

    def test_verdict_threshold(self):
        assert quasiinvariance_verdict(0.5, 1.5 + 2e-6) == "exceeded"
        assert quasiinvariance_verdict(0.5, 1.5) == "consistent"

    def test_diameter_family_reaches_conjectured_sup(self):
        assert abs(diameter_family_ratio(0.5, 1e-3) - 1.5) <= 1e-3


class TestMonotoneScan:
    def test_alignment_ratio_scan(self):
        mono, viol = monotone_scan(
            lambda t: j_rho_alignment_ratio(0.5, t), 1e-6, 1.0 - 1e-6, 1000
        )
        assert mono and viol == 0.0

    def test_arctanh_quotient_scan(self):
        from qhmetrics import arctanh_quotient

        mono, viol = monotone_scan(
            lambda t: arctanh_quotient(0.5, t), 1e-6, 1 - 1e-6, 1000
        )
        assert mono and viol == 0.0

    def test_constant_function_control(self):
        mono, viol = monotone_scan(lambda t: 1.0, 0.0, 1.0, 100)
        assert not mono
        assert viol == 0.0

    def test_increasing_reports_violation(self):
        mono, viol = monotone_scan(lambda t: t, 0.0, 1.0, 11)
        assert not mono
        assert math.isclose(viol, 0.1, rel_tol=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            monotone_scan(lambda t: t, 0.0, 1.0, 2)
        with pytest.raises(DomainError):
            monotone_scan(lambda t: t, 1.0, 0.0, 10)


def test_problem_guard_raises_on_fake_bound():
    # a deliberately wrong proven bound must be caught, not silently reported
    from qhmetrics import RatioProblem

    p = sum_ratio_problem(1.0)
    rigged = RatioProblem(
        name=p.name,
        lower=p.lower,
        upper=p.upper,
        evaluate=p.evaluate,
        decode=p.decode,
        proven_bound=1.0,  # true sup is ~2.618
    )
    with pytest.raises(RuntimeError):
        maximize(rigged, seeds=4, budget=2000, rng_seed=0)
