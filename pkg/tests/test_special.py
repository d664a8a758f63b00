import math

import numpy as np
import pytest

from qhmetrics import (
    ConvergenceError,
    DistortionParams,
    DomainError,
    agm,
    arctanh_quotient,
    diameter_family_ratio,
    distortion_growth_check,
    eta_quasisymmetry,
    grotzsch_lambda_bounds,
    grotzsch_mu,
    grotzsch_mu_inverse,
    j_rho_alignment_ratio,
    phi_distortion,
    seittenranta_b,
    sum_ratio_max,
    sum_ratio_objective,
)
from oracles import brute_force_sum_ratio_max, mu_oracle

# pinned after first computation; re-derived below against the scipy oracle
B_11_2 = 1.9199468881943842


class TestMu:
    def test_against_scipy_oracle(self):
        rs = np.array([0.01, 0.1, 0.3, 0.5, 1 / math.sqrt(2), 0.9, 0.99, 0.9999])
        np.testing.assert_allclose(grotzsch_mu(rs), mu_oracle(rs), rtol=1e-13)

    def test_symmetry_point(self):
        assert math.isclose(
            grotzsch_mu(1 / math.sqrt(2)), math.pi / 2, rel_tol=1e-15
        )

    def test_functional_identity(self):
        for r in np.arange(0.1, 0.95, 0.1):
            prod = grotzsch_mu(r) * grotzsch_mu(math.sqrt(1 - r * r))
            assert math.isclose(prod, math.pi**2 / 4, rel_tol=1e-14)

    def test_strictly_decreasing(self):
        rs = np.linspace(0.01, 0.99, 200)
        vals = grotzsch_mu(rs)
        assert np.all(np.diff(vals) < 0)

    def test_domain(self):
        for bad in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(DomainError):
                grotzsch_mu(bad)

    def test_inverse_round_trip(self):
        for r in (1e-6, 0.01, 0.3, 0.7071, 0.95, 0.999999):
            assert math.isclose(
                grotzsch_mu_inverse(grotzsch_mu(r)), r, rel_tol=1e-12
            )
        for y in (0.6, 1.0, 3.0, 29.0, 35.0, 80.0):
            assert math.isclose(
                grotzsch_mu(grotzsch_mu_inverse(y)), y, rel_tol=1e-12
            )
        # near r = 1 the forward map loses accuracy to the float spacing of
        # 1 - r, so the round trip there is only as good as mu's conditioning
        assert math.isclose(grotzsch_mu(grotzsch_mu_inverse(0.15)), 0.15, rel_tol=1e-4)
        # below ~0.129 no float in (0, 1) reaches the target: the root is
        # within 1e-10000 of 1, so the inverse saturates at the limit
        assert grotzsch_mu_inverse(1e-4) == 1.0

    def test_agm_basics(self):
        assert agm(1.0, 1.0) == 1.0
        assert math.isclose(agm(1.0, 2.0), agm(2.0, 1.0), rel_tol=1e-15)


class TestPhi:
    def test_identity_at_K_1(self):
        rs = np.linspace(0.05, 0.95, 19)
        np.testing.assert_allclose(phi_distortion(1.0, rs), rs, atol=1e-15)

    def test_K_2_closed_form(self):
        for r in np.arange(0.1, 0.95, 0.1):
            assert math.isclose(
                phi_distortion(2.0, r), 2 * math.sqrt(r) / (1 + r), rel_tol=1e-12
            )
        assert math.isclose(phi_distortion(2.0, 0.25), 0.8, rel_tol=1e-12)

    def test_inverse_pair(self):
        assert math.isclose(
            phi_distortion(1 / 3, phi_distortion(3.0, 0.5)), 0.5, rel_tol=1e-12
        )

    def test_semigroup(self):
        rs = np.linspace(0.1, 0.9, 9)
        lhs = phi_distortion(1.5, phi_distortion(2.0, rs))
        rhs = phi_distortion(3.0, rs)
        np.testing.assert_allclose(lhs, rhs, atol=1e-9)

    def test_increasing_in_r(self):
        rs = np.linspace(0.01, 0.99, 99)
        vals = phi_distortion(1.7, rs)
        assert np.all(np.diff(vals) > 0)
        assert np.all((vals > 0) & (vals < 1))

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_distortion(-1.0, 0.5)
        with pytest.raises(DomainError):
            phi_distortion(2.0, 1.0)


class TestDistortionParams:
    def test_plane_values(self):
        p = DistortionParams(2, 1.1)
        assert math.isclose(p.alpha, 1 / 1.1, rel_tol=1e-15)
        assert math.isclose(p.beta, 1.1, rel_tol=1e-15)
        assert p.lambda_n == 4.0
        assert math.isclose(p.b, B_11_2, rel_tol=1e-9)
        assert math.isclose(seittenranta_b(p), p.b, rel_tol=0.0)

    def test_b_from_scipy_oracle(self):
        # independent recomputation: invert the scipy-based modulus by brentq
        from scipy import optimize

        K = 1.1
        target = float(mu_oracle(1 / math.sqrt(2))) / K
        s = optimize.brentq(
            lambda r: float(mu_oracle(r)) - target, 1e-9, 1 - 1e-12, xtol=1e-15
        )
        eta = s * s / (1 - s * s)
        assert math.isclose(4.0**0.1 * 1.1 * eta, B_11_2, rel_tol=1e-9)

    def test_exact_at_K_1(self):
        assert DistortionParams(2, 1.0).b == 1.0
        assert DistortionParams(7, 1.0).b == 1.0
        assert eta_quasisymmetry(1.0) == 1.0

    def test_b_tends_to_1(self):
        bs = [DistortionParams(2, K).b for K in (1.2, 1.1, 1.05, 1.01, 1.001)]
        assert all(u > v for u, v in zip(bs, bs[1:]))
        assert bs[-1] < 1.01
        assert all(b > 1 for b in bs)

    def test_higher_dimension_requires_inputs(self):
        with pytest.raises(DomainError):
            DistortionParams(3, 1.5)
        with pytest.raises(DomainError):
            DistortionParams(3, 1.5, eta1=2.0)
        lo, hi = grotzsch_lambda_bounds(3)
        assert (lo, hi) == (4.0, 2 * math.exp(2))
        with pytest.raises(DomainError):
            DistortionParams(3, 1.5, eta1=2.0, lambda_n=hi)
        p = DistortionParams(3, 1.5, eta1=2.0, lambda_n=4.5)
        beta = 1.5**0.5
        assert math.isclose(p.b, 4.5 ** (beta - 1) * beta * 2.0, rel_tol=1e-15)

    def test_K_below_1_rejected(self):
        with pytest.raises(DomainError):
            DistortionParams(2, 0.9)


class TestScalarRatios:
    def test_alignment_ratio_endpoints(self):
        for r in (0.1, 0.5, 0.9):
            assert abs(j_rho_alignment_ratio(r, 1e-6) - (1 + r)) <= 1e-4
            assert abs(j_rho_alignment_ratio(r, 2 * r - 1e-6) - 1.0) <= 1e-4
            assert j_rho_alignment_ratio(r, 0.0) == 1 + r

    def test_alignment_ratio_strictly_decreasing(self):
        for r in (0.1, 0.5, 0.9):
            ts = np.linspace(1e-6, 2 * r - 1e-6, 1000)
            vals = j_rho_alignment_ratio(r, ts)
            assert np.all(np.diff(vals) < 0)
            assert np.all((vals > 1.0) & (vals < 1 + r))

    def test_alignment_ratio_interior_value(self):
        v = j_rho_alignment_ratio(0.5, 0.5)
        assert 1.0 < v < 1.5
        assert j_rho_alignment_ratio(0.5, 0.4) > j_rho_alignment_ratio(0.5, 0.6)

    def test_alignment_ratio_domain(self):
        with pytest.raises(DomainError):
            j_rho_alignment_ratio(1.2, 0.1)
        with pytest.raises(DomainError):
            j_rho_alignment_ratio(0.5, 1.5)

    def test_diameter_ratio_endpoints(self):
        for a in (0.3, 0.5, 0.9):
            assert abs(diameter_family_ratio(a, 1e-6) - (1 + a)) <= 1e-4
            assert diameter_family_ratio(a, 1.0) == 1.0
            assert diameter_family_ratio(a, 0.0) == 1 + a

    def test_diameter_ratio_decreasing(self):
        ts = np.linspace(1e-6, 1 - 1e-6, 1000)
        vals = diameter_family_ratio(0.5, ts)
        assert np.all(np.diff(vals) < 0)
        assert diameter_family_ratio(0.5, 0.2) > diameter_family_ratio(0.5, 0.8)
        qs = arctanh_quotient(0.5, ts)
        assert np.all(np.diff(qs) < 0)
        assert np.all((qs > 0) & (qs < 0.5))

    def test_diameter_ratio_matches_mobius_construction(self):
        # same quantity from the actual automorphism and metric
        from qhmetrics import j_ball, mobius_to_origin

        a = np.array([0.5, 0.0])
        for t in (0.1, 0.5, 0.9):
            x = np.array([-t, 0.0])
            y = np.array([t, 0.0])
            direct = j_ball(
                mobius_to_origin(a, x), mobius_to_origin(a, y)
            ) / j_ball(x, y)
            assert math.isclose(
                direct, diameter_family_ratio(0.5, t), rel_tol=1e-12
            )


class TestSumRatio:
    def test_closed_form_values(self):
        maxval, argr = sum_ratio_max(0.0)
        assert math.isclose(maxval, 1.0, rel_tol=1e-15)
        assert math.isclose(argr, 1.0, rel_tol=1e-15)
        maxval, argr = sum_ratio_max(1.0)
        assert math.isclose(maxval, ((1 + math.sqrt(5)) / 2) ** 2, rel_tol=1e-15)
        assert math.isclose(argr, (math.sqrt(5) - 1) / 2, rel_tol=1e-15)

    def test_against_brute_force(self):
        for a in (0.0, 0.5, 1.0, 2.0, 5.0):
            brute, arg = brute_force_sum_ratio_max(a)
            closed, argr = sum_ratio_max(a)
            assert abs(brute - closed) <= 1e-6
            if a == 0.0:
                # at a = 0 the maximum is attained along the hyperbola rs = 1
                assert abs(arg[0] * arg[1] - 1.0) <= 1e-3
            else:
                assert abs(arg[0] - argr) <= 1e-3 and abs(arg[1] - argr) <= 1e-3

    def test_beats_axis_value(self):
        for a in (0.1, 1.0, 3.0, 5.0):
            assert sum_ratio_max(a)[0] >= 1 + a * a - 1e-12
            if a > 0:
                axis = sum_ratio_objective(1 / a, 0.0, a)
                assert math.isclose(axis, 1 + a * a, rel_tol=1e-12)

    def test_stationarity(self):
        maxval, argr = sum_ratio_max(1.3)
        h = 1e-6
        for dr, ds in ((h, 0), (-h, 0), (0, h), (0, -h)):
            assert sum_ratio_objective(argr + dr, argr + ds, 1.3) <= maxval + 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            sum_ratio_max(-0.1)


class TestGrowthCheck:
    def test_plane_grid_holds(self):
        ok, worst, _ = distortion_growth_check(
            np.linspace(1.0, 4.0, 13), np.linspace(0.02, 0.98, 25)
        )
        assert ok
        assert worst <= 1e-12

    def test_equality_at_K_1(self):
        ok, worst, _ = distortion_growth_check([1.0], np.linspace(0.1, 0.9, 9))
        assert ok
        assert abs(worst) <= 1e-12
