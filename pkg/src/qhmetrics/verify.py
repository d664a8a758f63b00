"""Named verification suites wrapping the library's mathematical invariants.

Each check reports a margin: the slack left before the asserted inequality
would fail (nonnegative means pass).  Suites are deterministic for a fixed
seed and sample count, and their report order is canonical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import maps, metrics, mobius, qhball, search, special
from .geometry import angle, star

TOL_REFINED = 1e-4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    margin: float
    detail: str


def _sample_ball(rng, count, dim, radius):
    v = rng.standard_normal((count, dim))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    r = radius * rng.random(count) ** (1.0 / dim)
    return v * r[:, None]


def _check(name, passed, margin, detail=""):
    return CheckResult(name, bool(passed), float(margin), detail)


# ---------------------------------------------------------------------------


def suite_thm13(rng, samples):
    """Sharp quasi-invariance of the ball quasihyperbolic metric under its
    Mobius self-maps."""
    out = []
    absa = 0.5
    table = search.mobius_sharpness_table(absa, [1e-2, 1e-3, 1e-4])
    fwd = table[-1][1]
    inv = table[-1][2]
    out.append(
        _check(
            "thm13/forward-limit",
            abs(fwd - 1.0 / 1.5) <= 1e-3,
            1e-3 - abs(fwd - 1.0 / 1.5),
            f"ratio at t=1e-4: {fwd:.9f}",
        )
    )
    out.append(
        _check(
            "thm13/inverse-limit",
            abs(inv - 1.5) <= 1e-3,
            1e-3 - abs(inv - 1.5),
            f"ratio at t=1e-4: {inv:.9f}",
        )
    )
    ts = [row[0] for row in table]
    ex_f = search.richardson_limit(ts, [row[1] for row in table])
    ex_i = search.richardson_limit(ts, [row[2] for row in table])
    err = max(abs(ex_f - 1.0 / 1.5), abs(ex_i - 1.5))
    out.append(
        _check(
            "thm13/richardson",
            err <= 1e-6,
            1e-6 - err,
            f"extrapolated {ex_f:.12f}, {ex_i:.12f}",
        )
    )

    inv_row = search.mobius_sharpness_table(1.0 - 1e-3, [1e-6])[0]
    out.append(
        _check(
            "thm13/factor2-context",
            inv_row[2] >= 2.0 - 5e-3,
            inv_row[2] - (2.0 - 5e-3),
            f"inverse ratio {inv_row[2]:.6f} near |a|=1",
        )
    )

    n = max(200, samples)
    dim = 3
    a_s = _sample_ball(rng, n, dim, 0.9)
    x_s = _sample_ball(rng, n, dim, 0.95)
    y_s = _sample_ball(rng, n, dim, 0.95)
    tx = np.array([mobius.mobius_to_origin(a_s[i], x_s[i]) for i in range(n)])
    ty = np.array([mobius.mobius_to_origin(a_s[i], y_s[i]) for i in range(n)])

    # closed-form norm identity and the lower bound on |T_a(x)|
    na = np.linalg.norm(a_s, axis=1)
    nx = np.linalg.norm(x_s, axis=1)
    ident = np.array(
        [mobius.mobius_norm_identity(a_s[i], x_s[i]) for i in range(n)]
    )
    err = float(np.max(np.abs(np.linalg.norm(tx, axis=1) - ident)))
    out.append(
        _check("thm13/norm-identity", err <= 1e-10, 1e-10 - err, f"max |diff| {err:.2e}")
    )
    lower = np.abs(nx - na) / (1.0 - na * nx)
    worst = float(np.min(np.linalg.norm(tx, axis=1) - lower))
    out.append(
        _check(
            "thm13/norm-lower-bound",
            worst >= -1e-12,
            worst + 1e-12,
            "min(|T_a x| - ||x|-|a||/(1-|a||x|))",
        )
    )

    back = np.array([mobius.mobius_to_origin(-a_s[i], tx[i]) for i in range(n)])
    err = float(np.max(np.linalg.norm(back - x_s, axis=1)))
    out.append(
        _check("thm13/inverse-composition", err <= 1e-10, 1e-10 - err, f"max |diff| {err:.2e}")
    )

    kappa = mobius.plane_rotation(dim, 0, 1, 0.7)
    gi = mobius.BallMobius(a_s[0], kappa)
    rot_err = 0.0
    for i in range(min(n, 500)):
        g = mobius.BallMobius(a_s[i], kappa)
        rot_err = max(
            rot_err,
            abs(metrics.rho_ball(g(x_s[i]), g(y_s[i])) - metrics.rho_ball(x_s[i], y_s[i])),
        )
    out.append(
        _check(
            "thm13/rho-invariance",
            rot_err <= 1e-10,
            1e-10 - rot_err,
            f"max |rho drift| {rot_err:.2e} (g = rotation . T_a)",
        )
    )

    L = (1.0 + na) / (1.0 - na)
    dxy = np.linalg.norm(x_s - y_s, axis=1)
    dtt = np.linalg.norm(tx - ty, axis=1)
    worst = float(np.min(np.minimum(L * dxy - dtt, dtt - dxy / L)))
    out.append(
        _check(
            "thm13/bilipschitz-sandwich",
            worst >= -1e-12,
            worst + 1e-12,
            "|x-y|/L <= |T x - T y| <= L |x-y|",
        )
    )

    m = min(n, max(200, samples // 2))
    tol = TOL_REFINED
    base = qhball.k_ball_refined_many(x_s[:m], y_s[:m], tol)
    image = qhball.k_ball_refined_many(tx[:m], ty[:m], tol)
    fac = 1.0 + na[:m]
    hi_slack = np.array(
        [fac[i] * base[i].hi + 3 * tol - image[i].hi for i in range(m)]
    )
    lo_slack = np.array(
        [image[i].lo - (base[i].lo / fac[i] - 3 * tol) for i in range(m)]
    )
    worst = float(min(hi_slack.min(), lo_slack.min()))
    out.append(
        _check(
            "thm13/certified-bound",
            worst >= 0.0,
            worst,
            f"{m} random triples at tol {tol:g}",
        )
    )
    return out


def suite_lemma23(rng, samples):
    """Two-sided comparison of j, rho and the certified quasihyperbolic
    interval on the ball, plus the scalar alignment-ratio scans."""
    out = []
    n = max(1000, samples * 5)
    dim = 3
    x = _sample_ball(rng, n, dim, 1.0 - 1e-9)
    y = _sample_ball(rng, n, dim, 1.0 - 1e-9)
    jv = metrics.j_ball(x, y)
    rv = metrics.rho_ball(x, y)
    r = np.maximum(np.linalg.norm(x, axis=1), np.linalg.norm(y, axis=1))
    lo, hi = qhball.k_ball_bounds_many(x, y)
    slacks = np.stack(
        [
            jv - rv / 2,
            hi - jv,
            (1.0 + r) / 2.0 * rv + 1e-6 - hi,
            lo - rv / 2,
        ]
    )
    worst = float(np.min(slacks))
    out.append(
        _check(
            "lemma23/sandwich",
            worst >= 0.0,
            worst,
            f"{n} pairs: rho/2 <= j <= k_hi <= (1+r)/2 rho + 1e-6",
        )
    )

    m = max(100, samples // 10)
    rads = rng.random(m) * 0.97
    rads2 = rng.random(m) * 0.97
    dirs = rng.standard_normal((m, dim))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    xr = dirs * rads[:, None]
    yr = dirs * rads2[:, None]
    worst = math.inf
    for i in range(m):
        truth = qhball.k_ball_radial(xr[i], yr[i])
        cd = qhball.k_ball_refined(xr[i], yr[i], TOL_REFINED)
        worst = min(worst, TOL_REFINED - max(cd.lo - truth, truth - cd.hi))
    out.append(
        _check(
            "lemma23/radial-consistency",
            worst >= 0.0,
            worst,
            "refined interval brackets the radial closed form",
        )
    )

    xa = np.array([-0.3, 0.0])
    ya = np.array([0.3, 0.0])
    prev = None
    worst = math.inf
    for tol in (1e-2, 1e-3, 1e-4):
        cd = qhball.k_ball_refined(xa, ya, tol)
        if prev is not None:
            worst = min(
                worst,
                min(cd.lo - (prev.lo - 2 * prev_tol), (prev.hi + 2 * prev_tol) - cd.hi),
            )
        prev, prev_tol = cd, tol
    out.append(
        _check(
            "lemma23/interval-nesting",
            worst >= 0.0,
            worst,
            "finer tolerances nest within coarser intervals (2 tol slack)",
        )
    )

    worst = math.inf
    for rr in (0.1, 0.5, 0.9):
        mono, viol = search.monotone_scan(
            lambda t: special.j_rho_alignment_ratio(rr, t),
            1e-6,
            2 * rr - 1e-6,
            1000,
        )
        worst = min(worst, -viol if not mono else 0.0)
        e0 = abs(special.j_rho_alignment_ratio(rr, 1e-6) - (1.0 + rr))
        e1 = abs(special.j_rho_alignment_ratio(rr, 2 * rr - 1e-6) - 1.0)
        worst = min(worst, 1e-4 - e0, 1e-4 - e1)
    out.append(
        _check(
            "lemma23/alignment-ratio",
            worst >= 0.0,
            worst,
            "strict decrease and endpoint limits 1+r, 1",
        )
    )
    return out


def suite_thm31(rng, samples):
    """Chordal versus quasihyperbolic metric on punctured space."""
    out = []
    n = max(1000, samples * 5)
    dim = 3
    z = rng.standard_normal((n, dim))
    x = z + rng.standard_normal((n, dim)) * 2.0
    y = z + rng.standard_normal((n, dim)) * 2.0
    nz = np.linalg.norm(z, axis=1)
    cbound = (nz + np.sqrt(1.0 + nz * nz)) / 2.0
    q = np.linalg.norm(x - y, axis=1) / np.sqrt(
        (1.0 + np.sum(x * x, axis=1)) * (1.0 + np.sum(y * y, axis=1))
    )
    k = metrics.k_punctured(z, x, y)
    worst = float(np.min(cbound * k - q))
    out.append(
        _check(
            "thm31/bound-samples",
            worst >= -1e-12,
            worst + 1e-12,
            f"{n} random triples: q <= ((|z|+sqrt(1+|z|^2))/2) k",
        )
    )

    jv = metrics.j_punctured(z, x, y)
    worst = float(np.min(k - jv))
    out.append(
        _check("thm31/j-below-k", worst >= -1e-12, worst + 1e-12, "j <= k on punctured space")
    )

    xs = np.array([star(p) for p in x])
    ys = np.array([star(p) for p in y])
    zmask = np.linalg.norm(x, axis=1) > 1e-9
    js = metrics.j_punctured(np.zeros(dim), xs, ys)
    j0 = metrics.j_punctured(np.zeros(dim), x, y)
    worst = float(np.min(2.0 * j0[zmask] - js[zmask]))
    out.append(
        _check(
            "thm31/inversion-factor-2",
            worst >= -1e-12,
            worst + 1e-12,
            "j(x*, y*) <= 2 j(x, y) for the unit-sphere inversion",
        )
    )
    ks = metrics.k_punctured(np.zeros(dim), xs, ys)
    k0 = metrics.k_punctured(np.zeros(dim), x, y)
    err = float(np.max(np.abs(ks[zmask] - k0[zmask])))
    out.append(
        _check(
            "thm31/inversion-invariance",
            err <= 1e-12,
            1e-12 - err,
            "k(x*, y*) = k(x, y) around the origin",
        )
    )

    res0 = search.maximize(
        search.chordal_qh_problem(np.zeros(2)), seeds=32, budget=20000, rng_seed=1
    )
    out.append(
        _check(
            "thm31/search-origin",
            abs(res0.best_value - 0.5) <= 1e-3,
            1e-3 - abs(res0.best_value - 0.5),
            f"best {res0.best_value:.6f} (sup = 1/2)",
        )
    )
    z0 = np.array([0.75, 0.0])
    res1 = search.maximize(
        search.chordal_qh_problem(z0), seeds=32, budget=30000, rng_seed=1
    )
    extremal = -0.5 * z0 / np.linalg.norm(z0)
    argerr = max(
        float(np.linalg.norm(res1.best_args[0] - extremal)),
        float(np.linalg.norm(res1.best_args[1] - extremal)),
    )
    ok = abs(res1.best_value - 1.0) <= 1e-3 and argerr <= 0.05
    out.append(
        _check(
            "thm31/search-offset",
            ok,
            min(1e-3 - abs(res1.best_value - 1.0), 0.05 - argerr),
            f"best {res1.best_value:.6f} at distance {argerr:.3f} from the extremal point",
        )
    )
    return out


def suite_lemma33(rng, samples):
    """Closed-form maximum of the two-variable sum-ratio objective."""
    out = []
    worst = math.inf
    for a in (0.0, 0.5, 1.0, 2.0, 5.0):
        closed, argr = special.sum_ratio_max(a)
        grid = np.linspace(0.0, 3.0, 2000)
        vals = special.sum_ratio_objective(grid[:, None], grid[None, :], a)
        i, j = np.unravel_index(np.argmax(vals), vals.shape)
        from scipy import optimize as _opt

        loc = _opt.minimize(
            lambda u: -special.sum_ratio_objective(u[0], u[1], a),
            [grid[i], grid[j]],
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-14},
        )
        brute = -float(loc.fun)
        worst = min(worst, 1e-6 - abs(brute - closed))
    out.append(
        _check(
            "lemma33/grid-oracle",
            worst >= 0.0,
            worst,
            "closed form matches 2000^2 grid + local refinement to 1e-6",
        )
    )

    worst = math.inf
    for a in (0.0, 1.0, 2.0):
        closed, _ = special.sum_ratio_max(a)
        res = search.maximize(
            search.sum_ratio_problem(a), seeds=16, budget=8000, rng_seed=3
        )
        worst = min(worst, 1e-6 - abs(res.best_value - closed))
    out.append(
        _check(
            "lemma33/search-crosscheck",
            worst >= 0.0,
            worst,
            "multi-start search agrees with the closed form to 1e-6",
        )
    )

    a_grid = np.linspace(0.0, 5.0, 101)
    vals = np.array([special.sum_ratio_max(float(a))[0] for a in a_grid])
    worst = float(np.min(vals - (1.0 + a_grid**2)))
    out.append(
        _check(
            "lemma33/axis-lower-bound",
            worst >= -1e-12,
            worst + 1e-12,
            "max >= 1 + a^2 (value on the boundary axis)",
        )
    )
    return out


def suite_prop14(rng, samples):
    """Sharpness of the factor 4 for conformal maps, via the Koebe function."""
    out = []
    v = maps.koebe_k_ratio(1e-3, 0.1)
    out.append(
        _check(
            "prop14/ratio-near-limit",
            abs(v - 4.0) <= 0.08,
            0.08 - abs(v - 4.0),
            f"ratio {v:.6f} at (t, theta) = (1e-3, 0.1); limit 4, tolerance 2%",
        )
    )
    ts = [1e-2, 1e-3, 1e-4]
    vals = [maps.koebe_k_ratio(t, 0.1) for t in ts]
    ex = search.richardson_limit(ts, vals)
    out.append(
        _check(
            "prop14/richardson",
            abs(ex - 4.0) <= 1e-3,
            1e-3 - abs(ex - 4.0),
            f"extrapolated {ex:.9f}",
        )
    )
    out.append(
        _check(
            "prop14/monotone-approach",
            vals[0] < vals[1] < vals[2] < 4.0 + 0.05,
            min(vals[1] - vals[0], vals[2] - vals[1], 4.0 + 0.05 - vals[2]),
            "ratio increases as t decreases and never exceeds 4 + 0.05",
        )
    )

    n = max(1000, samples * 5)
    rr = np.sqrt(rng.random(n)) * (1.0 - 1e-9)
    th = rng.random(n) * 2.0 * math.pi
    worst = math.inf
    for i in range(n):
        ratio = maps.koebe_density_ratio(rr[i] * complex(math.cos(th[i]), math.sin(th[i])))
        worst = min(worst, ratio - 0.25, 4.0 + 1e-12 - ratio)
    out.append(
        _check(
            "prop14/density-ratio-range",
            worst >= 0.0,
            worst,
            f"{n} disk samples stay in [1/4, 4]",
        )
    )
    spot = max(
        abs(maps.koebe(-1.0) + 0.25),
        abs(maps.koebe(0.5) - 2.0),
        abs(maps.koebe_density_ratio(0.0) - 4.0),
    )
    out.append(
        _check("prop14/spot-values", spot <= 1e-14, 1e-14 - spot, "f(-1) = -1/4, f(1/2) = 2, ratio(0) = 4")
    )
    return out


def suite_thm16(rng, samples):
    """Distortion apparatus and the local quasiconformal growth bounds."""
    out = []
    grid = np.linspace(0.05, 0.95, 19)
    err = float(np.max(np.abs(special.phi_distortion(1.0, grid) - grid)))
    out.append(_check("thm16/phi-identity-at-1", err <= 1e-12, 1e-12 - err, "phi_1 = id"))

    rs = np.arange(0.1, 0.95, 0.1)
    err = float(
        np.max(
            np.abs(
                special.phi_distortion(2.0, rs) - 2.0 * np.sqrt(rs) / (1.0 + rs)
            )
        )
    )
    out.append(
        _check(
            "thm16/phi-K2-closed-form",
            err <= 1e-9,
            1e-9 - err,
            "phi_2(r) = 2 sqrt(r)/(1+r)",
        )
    )

    err = abs(special.grotzsch_mu(1.0 / math.sqrt(2.0)) - math.pi / 2.0)
    out.append(_check("thm16/mu-symmetry-point", err <= 1e-12, 1e-12 - err, "mu(1/sqrt 2) = pi/2"))

    errs = []
    for r in np.arange(0.1, 0.95, 0.1):
        errs.append(
            abs(
                special.grotzsch_mu(r) * special.grotzsch_mu(math.sqrt(1 - r * r))
                - math.pi**2 / 4.0
            )
        )
    err = max(errs)
    out.append(
        _check(
            "thm16/mu-functional-identity",
            err <= 1e-12,
            1e-12 - err,
            "mu(r) mu(r') = pi^2/4",
        )
    )

    b1 = special.DistortionParams(2, 1.0).b
    b3 = special.DistortionParams(5, 1.0).b
    out.append(
        _check(
            "thm16/b-at-K-1",
            b1 == 1.0 and b3 == 1.0,
            0.0 if (b1 == 1.0 and b3 == 1.0) else -1.0,
            "b(1, n) = 1 exactly",
        )
    )
    bseq = [special.DistortionParams(2, K).b for K in (1.05, 1.1, 1.2, 1.5, 2.0)]
    mono = all(u < v for u, v in zip(bseq, bseq[1:])) and bseq[0] > 1.0
    out.append(
        _check(
            "thm16/b-monotone",
            mono,
            min(v - u for u, v in zip(bseq, bseq[1:])),
            f"b(K, 2) increasing, b(1.1, 2) = {bseq[1]:.9f}",
        )
    )

    n = max(1000, samples * 5)
    worst = math.inf
    for K in (1.2, 2.0):
        stretch = maps.RadialStretch(2, K)
        x = _sample_ball(rng, n, 2, 1.0 - 1e-9)
        y = _sample_ball(rng, n, 2, 1.0 - 1e-9)
        fx = stretch.apply(x)
        fy = stretch.apply(y)
        lhs = np.tanh(metrics.rho_ball(fx, fy) / 2.0)
        rhs = special.phi_distortion(K, np.tanh(metrics.rho_ball(x, y) / 2.0))
        worst = min(worst, float(np.min(rhs + 1e-9 - lhs)))
    out.append(
        _check(
            "thm16/rho-distortion",
            worst >= 0.0,
            worst,
            "tanh(rho(fx,fy)/2) <= phi_K(tanh(rho/2)) for the radial stretch",
        )
    )

    K = 1.1
    r = 0.3
    params = special.DistortionParams(2, K)
    c = (1.0 + r) * params.b
    stretch = maps.RadialStretch(2, K)
    x = _sample_ball(rng, n, 2, r)
    y = _sample_ball(rng, n, 2, r)
    fx = stretch.apply(x)
    fy = stretch.apply(y)
    ok = (np.linalg.norm(fx, axis=1) < r) & (np.linalg.norm(fy, axis=1) < r)
    jq = metrics.j_ball(x[ok], y[ok])  # metric of the unit ball at points in B(r)
    jfq = metrics.j_ball(fx[ok], fy[ok])
    bound = c * np.maximum(jq, jq**params.alpha)
    worst = float(np.min(bound - jfq))
    out.append(
        _check(
            "thm16/local-j-growth",
            worst >= 0.0,
            worst,
            f"{int(ok.sum())} admissible pairs, c = (1+r) b = {c:.6f}",
        )
    )

    worst = math.inf
    stretch = maps.RadialStretch(2, 1.2)
    params12 = special.DistortionParams(2, 1.2)
    x = _sample_ball(rng, n, 2, 1.0 - 1e-6)
    y = _sample_ball(rng, n, 2, 1.0 - 1e-6)
    rv = metrics.rho_ball(x, y)
    rfv = metrics.rho_ball(stretch.apply(x), stretch.apply(y))
    bound = params12.b * np.maximum(rv, rv**params12.alpha)
    worst = float(np.min(bound + 1e-9 - rfv))
    out.append(
        _check(
            "thm16/rho-growth",
            worst >= 0.0,
            worst,
            "rho(fx,fy) <= b max(rho, rho^alpha) for the radial stretch",
        )
    )
    return out


def suite_conj17(rng, samples):
    """Exploration of the conjectured distance-ratio supremum 1 + |a|."""
    out = []
    budget = max(5000, samples * 10)
    for absa in (0.3, 0.6, 0.9):
        res = search.explore_j_quasiinvariance(absa, budget=budget, rng_seed=11)
        verdict = search.quasiinvariance_verdict(absa, res.best_value)
        near = res.best_value >= 1.0 + absa - 1e-2
        ok = verdict == "consistent" and near
        out.append(
            _check(
                f"conj17/explore-a{absa:g}",
                ok,
                (1.0 + absa + 1e-6) - res.best_value,
                f"best {res.best_value:.9f}, verdict {verdict} (evidence only)",
            )
        )

    worst = math.inf
    for absa in (0.3, 0.6, 0.9):
        v = special.diameter_family_ratio(absa, 1e-3)
        worst = min(worst, 1e-3 - abs(v - (1.0 + absa)))
        mono, viol = search.monotone_scan(
            lambda t: special.diameter_family_ratio(absa, t), 1e-6, 1.0 - 1e-6, 1000
        )
        worst = min(worst, 0.0 if mono else -viol)
        e_hi = abs(special.diameter_family_ratio(absa, 1e-6) - (1.0 + absa))
        e_lo = abs(special.diameter_family_ratio(absa, 1.0) - 1.0)
        worst = min(worst, 1e-4 - e_hi, 1e-4 - e_lo)
    out.append(
        _check(
            "conj17/diameter-family",
            worst >= 0.0,
            worst,
            "diameter-pair ratio decreasing with limits 1+|a| and 1",
        )
    )
    return out


def suite_conj28(rng, samples):
    """Distortion growth bound, plane case, plus semigroup sanity for phi."""
    out = []
    Ks = np.linspace(1.0, 4.0, 25)
    rs = np.linspace(0.01, 0.99, 50)
    ok, worst, worst_pt = special.distortion_growth_check(Ks, rs)
    out.append(
        _check(
            "conj28/plane-grid",
            ok,
            -worst if worst > 0 else -worst,
            f"worst margin {-worst:.3e} at (K, r) = {worst_pt}",
        )
    )

    worst = math.inf
    for K1, K2 in ((1.5, 2.0), (2.0, 3.0)):
        rs2 = np.linspace(0.1, 0.9, 9)
        lhs = special.phi_distortion(K1, special.phi_distortion(K2, rs2))
        rhs = special.phi_distortion(K1 * K2, rs2)
        worst = min(worst, 1e-9 - float(np.max(np.abs(lhs - rhs))))
    out.append(
        _check(
            "conj28/phi-semigroup",
            worst >= 0.0,
            worst,
            "phi_K . phi_K' = phi_KK' to 1e-9",
        )
    )

    worst = math.inf
    for K in (1.5, 3.0):
        r = 0.37
        worst = min(
            worst,
            1e-12
            - abs(
                special.phi_distortion(1.0 / K, special.phi_distortion(K, r)) - r
            ),
        )
    out.append(
        _check(
            "conj28/phi-inverse-pair",
            worst >= 0.0,
            worst,
            "phi_{1/K} inverts phi_K",
        )
    )
    return out


SUITES = {
    "thm13": suite_thm13,
    "lemma23": suite_lemma23,
    "thm31": suite_thm31,
    "lemma33": suite_lemma33,
    "prop14": suite_prop14,
    "thm16": suite_thm16,
    "conj17": suite_conj17,
    "conj28": suite_conj28,
}


def run_suites(names, seed: int = 0, samples: int = 200) -> list[CheckResult]:
    """Run the named suites (or all) and return canonically ordered results."""
    if names == "all" or names == ["all"]:
        names = list(SUITES)
    if isinstance(names, str):
        names = [names]
    results = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        rng = np.random.default_rng(
            np.random.SeedSequence([seed, sorted(SUITES).index(name)])
        )
        results.extend(SUITES[name](rng, samples))
    return sorted(results, key=lambda c: c.name)
