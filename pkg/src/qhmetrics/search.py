"""Multi-start maximization of metric ratios and the sharp-constant probes.

The suprema studied here live at degenerate limits (coalescing pairs, points
escaping to the boundary), so the searcher combines quasi-random starts with
derivative-free simplex refinement and, where a closed-form extremal family
is known, dedicated sequence evaluators with Richardson extrapolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import optimize
from scipy.stats import qmc

from .errors import DomainError
from .geometry import as_point
from .metrics import chordal, j_ball, k_punctured, rho_ball
from .mobius import mobius_to_origin
from .special import sum_ratio_objective

_REJECTED = None


@dataclass(frozen=True)
class RatioProblem:
    """A ratio-supremum problem over a box-sampled configuration space.

    ``evaluate`` maps a flat configuration vector to the objective ratio or
    ``None`` for configurations outside the domain (those are rejected, not
    errors).  ``proven_bound``, when set, is asserted on every reported
    value up to ``bound_slack``.
    """

    name: str
    lower: np.ndarray
    upper: np.ndarray
    evaluate: Callable[[np.ndarray], float | None]
    decode: Callable[[np.ndarray], tuple]
    proven_bound: float | None = None
    bound_slack: float = 1e-9

    @property
    def dim(self) -> int:
        return self.lower.size


@dataclass(frozen=True)
class SearchResult:
    best_value: float
    best_args: tuple
    trace: tuple  # (iteration, best-so-far) pairs
    trace_args: tuple  # flattened configuration at each trace entry
    status: str  # converged | budget-exhausted
    n_evals: int


def maximize(
    problem: RatioProblem, seeds: int, budget: int, rng_seed: int
) -> SearchResult:
    """Best ratio over ``seeds`` simplex refinements from quasi-random starts.

    Deterministic for a fixed ``rng_seed`` regardless of evaluation order;
    rejected configurations count against the budget but never raise.
    """
    if seeds < 1 or budget < 1:
        raise DomainError("seeds and budget must be >= 1")
    span = problem.upper - problem.lower
    if np.any(span <= 0.0):
        raise DomainError("empty search space")

    count = 0
    best_u = None
    best_v = -math.inf
    trace: list[tuple[int, float]] = []
    trace_args: list[tuple] = []

    def objective(u: np.ndarray) -> float:
        nonlocal count, best_u, best_v
        count += 1
        if np.any(u < problem.lower) or np.any(u > problem.upper):
            return 1e30
        v = problem.evaluate(u)
        if v is None or not math.isfinite(v):
            return 1e30
        if v > best_v:
            best_v = v
            best_u = u.copy()
            trace.append((count, v))
            trace_args.append(tuple(float(c) for c in u))
        return -v

    sob = qmc.Sobol(problem.dim, scramble=True, seed=rng_seed)
    draw = 1 << max(0, (seeds - 1).bit_length())  # power of 2 keeps Sobol balanced
    starts = problem.lower + sob.random(draw)[:seeds] * span
    per_seed = max(8, budget // seeds)
    exhausted = False
    for s in range(seeds):
        remaining = budget - count
        if remaining < 8:
            exhausted = True
            break
        optimize.minimize(
            objective,
            starts[s],
            method="Nelder-Mead",
            options={
                "maxfev": min(per_seed, remaining),
                "xatol": 1e-12,
                "fatol": 1e-14,
                "initial_simplex": _initial_simplex(starts[s], span, problem),
            },
        )
    if best_u is None:
        raise DomainError(
            f"search space of {problem.name} produced no admissible configuration"
        )
    args = problem.decode(best_u)
    final = problem.evaluate(best_u)
    if problem.proven_bound is not None and final > problem.proven_bound + problem.bound_slack:
        raise RuntimeError(
            f"{problem.name}: reported value {final} exceeds the proven bound "
            f"{problem.proven_bound} beyond slack; evaluator bug"
        )
    return SearchResult(
        best_value=float(final),
        best_args=args,
        trace=tuple(trace),
        trace_args=tuple(trace_args),
        status="budget-exhausted" if exhausted or count >= budget else "converged",
        n_evals=count,
    )


def _initial_simplex(x0, span, problem):
    d = x0.size
    simplex = np.tile(x0, (d + 1, 1))
    for i in range(d):
        step = 0.05 * span[i]
        if x0[i] + step > problem.upper[i]:
            step = -step
        simplex[i + 1, i] += step
    return simplex


# ---------------------------------------------------------------------------
# problem factories
# ---------------------------------------------------------------------------


def chordal_qh_problem(z, box: float | None = None, min_separation: float = 1e-6) -> RatioProblem:
    """sup of chordal over quasihyperbolic distance in space punctured at z.

    The proven bound is (|z| + sqrt(1 + |z|^2)) / 2.
    """
    z = as_point(z, "z")
    n = z.size
    if box is None:
        box = 4.0 * (1.0 + float(np.linalg.norm(z)))
    lower = np.concatenate([z - box, z - box])
    upper = np.concatenate([z + box, z + box])
    nz = float(np.linalg.norm(z))
    bound = (nz + math.sqrt(1.0 + nz * nz)) / 2.0

    def decode(u):
        return (u[:n].copy(), u[n:].copy())

    def evaluate(u):
        x, y = u[:n], u[n:]
        sep = np.linalg.norm(x - y)
        if sep < min_separation:
            return _REJECTED
        if np.array_equal(x, z) or np.array_equal(y, z):
            return _REJECTED
        return chordal(x, y) / k_punctured(z, x, y)

    return RatioProblem(
        name=f"chordal/qh around |z|={nz:g}",
        lower=lower,
        upper=upper,
        evaluate=evaluate,
        decode=decode,
        proven_bound=bound,
    )


def rho_invariance_problem(absa: float, dim: int = 2, min_separation: float = 1e-4) -> RatioProblem:
    """Hyperbolic-metric ratio under the ball automorphism: identically 1."""
    if not (0.0 <= absa < 1.0):
        raise DomainError("|a| must lie in [0, 1)")
    a = np.zeros(dim)
    a[0] = absa
    r = 0.95
    lower = np.full(2 * dim, -r)
    upper = np.full(2 * dim, r)

    def decode(u):
        return (u[:dim].copy(), u[dim:].copy())

    def evaluate(u):
        x, y = u[:dim], u[dim:]
        if np.linalg.norm(x) >= r or np.linalg.norm(y) >= r:
            return _REJECTED
        if np.linalg.norm(x - y) < min_separation:
            return _REJECTED
        return rho_ball(mobius_to_origin(a, x), mobius_to_origin(a, y)) / rho_ball(x, y)

    return RatioProblem(
        name=f"rho invariance |a|={absa:g}",
        lower=lower,
        upper=upper,
        evaluate=evaluate,
        decode=decode,
        proven_bound=1.0,
    )


def j_quasiinvariance_problem(absa: float, dim: int = 2, min_separation: float = 1e-9) -> RatioProblem:
    """Distance-ratio metric ratio under the ball automorphism centered at a.

    The supremum is conjectured (not proven) to equal 1 + |a|, so no proven
    bound is attached; the explorer only reports.
    """
    if not (0.0 < absa < 1.0):
        raise DomainError("|a| must lie in (0, 1)")
    a = np.zeros(dim)
    a[0] = absa
    cap = 1.0 - 1e-9
    lower = np.full(2 * dim, -cap)
    upper = np.full(2 * dim, cap)

    def decode(u):
        return (u[:dim].copy(), u[dim:].copy())

    def evaluate(u):
        x, y = u[:dim], u[dim:]
        if np.linalg.norm(x) >= cap or np.linalg.norm(y) >= cap:
            return _REJECTED
        if np.linalg.norm(x - y) < min_separation:
            return _REJECTED
        return j_ball(mobius_to_origin(a, x), mobius_to_origin(a, y)) / j_ball(x, y)

    return RatioProblem(
        name=f"j quasi-invariance |a|={absa:g}",
        lower=lower,
        upper=upper,
        evaluate=evaluate,
        decode=decode,
    )


def sum_ratio_problem(a: float, limit: float = 6.0) -> RatioProblem:
    """Direct 2-variable maximization of (r+s+a)^2/((1+r^2)(1+s^2))."""
    if a < 0.0:
        raise DomainError("offset a must be >= 0")
    lower = np.zeros(2)
    upper = np.full(2, limit)

    def decode(u):
        return (float(u[0]), float(u[1]))

    def evaluate(u):
        return sum_ratio_objective(u[0], u[1], a)

    return RatioProblem(
        name=f"sum-ratio a={a:g}",
        lower=lower,
        upper=upper,
        evaluate=evaluate,
        decode=decode,
    )


# ---------------------------------------------------------------------------
# closed-form sharpness sequences
# ---------------------------------------------------------------------------


def mobius_sharpness_table(absa: float, ts: Sequence[float]) -> list[tuple[float, float, float]]:
    """Quasihyperbolic ratios along the radial family x = a, y = (1+t) a.

    Both points map under the automorphism centered at a to a radial pair,
    so the ratio k(T x, T y)/k(x, y) has the closed form
    log(1 + t m / (1 - t m - (1+t) m^2)) / log(1 + t m / (1 - m - t m)),
    m = |a|; the inverse-direction ratio is its reciprocal.  The two tend to
    1/(1+|a|) and 1+|a| as t -> 0.
    """
    if not (0.0 < absa < 1.0):
        raise DomainError("|a| must lie in (0, 1)")
    out = []
    m = absa
    for t in ts:
        t = float(t)
        if t <= 0.0 or (1.0 + t) * m >= 1.0:
            raise DomainError(f"t = {t} pushes (1+t)a outside the ball")
        num = math.log1p(t * m / (1.0 - t * m - (1.0 + t) * m * m))
        den = math.log1p(t * m / (1.0 - m - t * m))
        fwd = num / den
        out.append((t, fwd, 1.0 / fwd))
    return out


def richardson_limit(ts: Sequence[float], values: Sequence[float]) -> float:
    """Polynomial extrapolation of values(t) to t = 0 (Neville scheme)."""
    ts = [float(t) for t in ts]
    vs = [float(v) for v in values]
    if len(ts) != len(vs) or len(ts) < 2:
        raise DomainError("need matching sequences of length >= 2")
    tab = vs[:]
    n = len(ts)
    for j in range(1, n):
        for i in range(n - j):
            tab[i] = (tab[i + 1] * ts[i] - tab[i] * ts[i + j]) / (ts[i] - ts[i + j])
    return tab[0]


def explore_j_quasiinvariance(
    absa: float, budget: int = 100_000, rng_seed: int = 0, dim: int = 2
) -> SearchResult:
    """Numerical exploration of the distance-ratio supremum under the ball
    automorphism.  Reports evidence, asserts nothing: the known diameter
    family (whose ratio tends to 1+|a| from below) seeds the search next to
    the quasi-random starts.
    """
    problem = j_quasiinvariance_problem(absa, dim=dim)
    seeds = max(8, min(64, budget // 2000))
    result = maximize(problem, seeds=seeds, budget=budget, rng_seed=rng_seed)
    # closed-form diameter family candidates
    best_value = result.best_value
    best_args = result.best_args
    a = np.zeros(dim)
    a[0] = absa
    for t in (1e-3, 1e-6):
        x = np.zeros(dim)
        y = np.zeros(dim)
        x[0] = -t
        y[0] = t
        v = j_ball(mobius_to_origin(a, x), mobius_to_origin(a, y)) / j_ball(x, y)
        if v > best_value:
            best_value = v
            best_args = (x, y)
    trace = result.trace + ((result.n_evals, best_value),)
    trace_args = result.trace_args + (
        tuple(float(c) for c in np.concatenate(best_args)),
    )
    return SearchResult(
        best_value=float(best_value),
        best_args=best_args,
        trace=trace,
        trace_args=trace_args,
        status=result.status,
        n_evals=result.n_evals,
    )


def quasiinvariance_verdict(absa: float, best_value: float, slack: float = 1e-6) -> str:
    """'exceeded' when the explorer output lies above 1 + |a| + slack."""
    return "exceeded" if best_value > 1.0 + absa + slack else "consistent"


def monotone_scan(
    fn: Callable[[float], float], lo: float, hi: float, gridpoints: int
) -> tuple[bool, float]:
    """Check strict decrease of ``fn`` on a uniform grid over [lo, hi].

    Returns (is_monotone_decreasing, max_violation) where the violation is
    the largest adjacent increase found (0 when strictly decreasing).
    """
    if gridpoints < 3:
        raise DomainError("need at least 3 grid points")
    if not (hi > lo):
        raise DomainError("empty scan interval")
    ts = np.linspace(lo, hi, gridpoints)
    vals = np.array([fn(float(t)) for t in ts])
    diffs = np.diff(vals)
    worst = float(np.max(diffs))
    return bool(np.all(diffs < 0.0)), max(worst, 0.0)
