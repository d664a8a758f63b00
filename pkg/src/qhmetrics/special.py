"""Special functions for quasiconformal distortion estimates.

Planar Grotzsch-ring modulus mu(r) = (pi/2) K(r') / K(r) through the
arithmetic-geometric mean, its inverse, the plane distortion function
phi_{K}(r) = mu^{-1}(mu(r)/K), the quasisymmetry value eta_K(1), and the
composite constant b(K, n) = lambda_n^(beta-1) * beta * eta that controls the
quasi-invariance of the boundary-sensitive metrics under K-quasiconformal
maps.  Also the scalar monotone comparison functions used by the ratio scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

GROTZSCH_LAMBDA_2 = 4.0


def grotzsch_lambda_bounds(n: int) -> tuple[float, float]:
    """Known enclosure [4, 2 e^{n-1}) of the Grotzsch ring constant."""
    if n < 2:
        raise DomainError("dimension must be >= 2")
    return 4.0, 2.0 * math.exp(n - 1)


def agm(a, b):
    """Arithmetic-geometric mean, elementwise."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a, b = np.broadcast_arrays(a, b)
    a = a.copy()
    b = b.copy()
    for _ in range(40):
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    out = 0.5 * (a + b)
    return float(out) if out.ndim == 0 else out


def grotzsch_mu(r):
    """Modulus of the plane ring between the unit circle and the segment
    [0, r]: (pi/2) K(r')/K(r).  Strictly decreasing from (0,1) onto (0,inf).
    """
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError("mu needs r in (0, 1)")
    rp = np.sqrt((1.0 - arr) * (1.0 + arr))
    out = (math.pi / 2.0) * agm(1.0, rp) / agm(1.0, arr)
    return float(out) if np.ndim(r) == 0 else out


def grotzsch_mu_inverse(y):
    """Inverse of :func:`grotzsch_mu` on (0, inf).

    Bracketed bisection to machine precision; the far tails use the
    classical asymptote mu(r) ~ log(4/r) (relative error O(r^2)).  For
    arguments below ~0.13 the root lies closer to 1 than the float spacing
    and the returned value saturates at 1.0.
    """
    arr = np.asarray(y, dtype=float)
    scalar = np.ndim(y) == 0
    arr = np.atleast_1d(arr).astype(float)
    if np.any(arr <= 0.0):
        raise DomainError("mu inverse needs a positive argument")
    out = np.empty_like(arr)

    big = arr >= 30.0
    out[big] = 4.0 * np.exp(-arr[big])
    # small arguments: the root hugs 1, where bisection in r cannot resolve
    # the target; invert the complementary modulus instead (the identity
    # mu(r) mu(r') = pi^2/4) and transfer back
    tiny = arr <= 0.5
    if np.any(tiny):
        rp = grotzsch_mu_inverse(math.pi**2 / (4.0 * arr[tiny]))
        out[tiny] = np.sqrt((1.0 - rp) * (1.0 + rp))

    mid_mask = ~(big | tiny)
    if np.any(mid_mask):
        target = arr[mid_mask]
        lo = np.full(target.shape, 1e-15)
        hi = np.full(target.shape, 1.0 - 1e-16)
        for it in range(200):
            mid = 0.5 * (lo + hi)
            f = grotzsch_mu(mid) - target
            gt = f > 0.0  # mu decreasing: f > 0 means mid below the root
            lo = np.where(gt, mid, lo)
            hi = np.where(gt, hi, mid)
            if np.all(hi - lo <= 4e-16 * hi):
                break
        else:
            raise ConvergenceError("mu inversion did not converge in 200 iterations")
        out[mid_mask] = 0.5 * (lo + hi)
    return float(out[0]) if scalar else out


def phi_distortion(K, r):
    """Plane distortion function mu^{-1}(mu(r)/K).

    Defined for K >= 1 and, for inverse use, any K > 0; the identity at
    K = 1.  Strictly increasing in r, values in (0, 1).
    """
    if K <= 0.0:
        raise DomainError("distortion parameter K must be positive")
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError("phi needs r in (0, 1)")
    if K == 1.0:
        return float(arr) if np.ndim(r) == 0 else arr.copy()
    return grotzsch_mu_inverse(grotzsch_mu(arr) / K)


def eta_quasisymmetry(K: float) -> float:
    """eta_K(1) for the plane: s^2/(1-s^2) with s = phi_K(1/sqrt(2)).

    Exactly 1 at K = 1 and strictly increasing in K.
    """
    if K <= 0.0:
        raise DomainError("distortion parameter K must be positive")
    if K == 1.0:
        return 1.0
    s = phi_distortion(K, 1.0 / math.sqrt(2.0))
    return s * s / ((1.0 - s) * (1.0 + s))


@dataclass(frozen=True)
class DistortionParams:
    """Parameter bundle (n, K, alpha, beta, lambda_n, eta1, b).

    For n = 2 everything is derived; for n >= 3 the Grotzsch constant is
    only known inside :func:`grotzsch_lambda_bounds` and eta has no planar
    formula, so both must be supplied by the caller (except at K = 1 where
    b = 1 exactly).
    """

    n: int
    K: float
    eta1: float | None = None
    lambda_n: float | None = None

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("dimension must be >= 2")
        if self.K < 1.0:
            raise DomainError("distortion parameter K must be >= 1")
        if self.n == 2:
            if self.lambda_n is None:
                object.__setattr__(self, "lambda_n", GROTZSCH_LAMBDA_2)
            if self.eta1 is None:
                object.__setattr__(self, "eta1", eta_quasisymmetry(self.K))
        elif self.K == 1.0:
            if self.lambda_n is None:
                object.__setattr__(self, "lambda_n", 4.0)
            if self.eta1 is None:
                object.__setattr__(self, "eta1", 1.0)
        else:
            if self.eta1 is None:
                raise DomainError(
                    f"eta_K(1) has no built-in formula for n = {self.n}; supply eta1"
                )
            lo, hi = grotzsch_lambda_bounds(self.n)
            if self.lambda_n is None:
                raise DomainError(
                    f"supply lambda_n inside the known enclosure [{lo}, {hi})"
                )
            if not (lo <= self.lambda_n < hi):
                raise DomainError(
                    f"lambda_n = {self.lambda_n} outside the known enclosure [{lo}, {hi})"
                )

    @property
    def alpha(self) -> float:
        return self.K ** (1.0 / (1.0 - self.n))

    @property
    def beta(self) -> float:
        return 1.0 / self.alpha

    @property
    def b(self) -> float:
        if self.K == 1.0:
            return 1.0
        return self.lambda_n ** (self.beta - 1.0) * self.beta * self.eta1


def seittenranta_b(params: DistortionParams) -> float:
    """The constant b = lambda_n^(beta-1) * beta * eta_K(1); b -> 1 as K -> 1."""
    return params.b


# ---------------------------------------------------------------------------
# scalar monotone comparison functions
# ---------------------------------------------------------------------------


def j_rho_alignment_ratio(r, t):
    """log(1 + t/(1-r)) / arsinh(t / sqrt((1-r^2)(1-(r-t)^2))).

    For r in (0,1) this is strictly decreasing in t on (0, 2r), with limits
    1+r at t -> 0 and 1 at t -> 2r; it controls the ratio of the
    distance-ratio to the hyperbolic metric along aligned configurations.
    Accepts the closed interval [0, 2r]: the endpoints return the limits.
    """
    if not (0.0 < r < 1.0):
        raise DomainError("alignment ratio needs r in (0, 1)")
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 2.0 * r):
        raise DomainError("alignment ratio needs t in [0, 2r]")
    num = np.log1p(arr / (1.0 - r))
    den = np.arcsinh(arr / np.sqrt((1.0 - r * r) * (1.0 - (r - arr) ** 2)))
    with np.errstate(invalid="ignore"):
        out = np.where(arr == 0.0, 1.0 + r, num / np.where(den == 0.0, 1.0, den))
    return float(out) if np.ndim(t) == 0 else out


def diameter_family_ratio(absa, t):
    """1 + artanh(|a| t)/artanh(t): the ratio of the distance-ratio metric
    after/before the ball automorphism centered at a, along the symmetric
    diameter pair (-t e, t e).

    Strictly decreasing on (0, 1) from 1+|a| down to 1; the closed interval
    [0, 1] is accepted, the endpoints returning those limits (the value at
    t = 1 follows from artanh(1) = inf).
    """
    if not (0.0 < absa < 1.0):
        raise DomainError("diameter ratio needs |a| in (0, 1)")
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("diameter ratio needs t in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore"):
        quot = np.arctanh(absa * arr) / np.arctanh(arr)
    out = 1.0 + np.where(arr == 0.0, absa, np.where(arr == 1.0, 0.0, quot))
    return float(out) if np.ndim(t) == 0 else out


def arctanh_quotient(absa, t):
    """artanh(|a| t)/artanh(t), strictly decreasing from |a| to 0 on (0, 1)."""
    return diameter_family_ratio(absa, t) - 1.0


def sum_ratio_objective(r, s, a):
    """(r + s + a)^2 / ((1 + r^2)(1 + s^2)) for r, s >= 0."""
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    out = (r + s + a) ** 2 / ((1.0 + r * r) * (1.0 + s * s))
    return float(out) if out.ndim == 0 else out


def sum_ratio_max(a: float) -> tuple[float, float]:
    """Closed-form maximum of :func:`sum_ratio_objective` over r, s >= 0.

    The maximum ((a + sqrt(4 + a^2))/2)^2 is attained at
    r = s = (-a + sqrt(4 + a^2))/2.
    """
    if a < 0.0:
        raise DomainError("offset a must be >= 0")
    root = math.sqrt(4.0 + a * a)
    return ((a + root) / 2.0) ** 2, (-a + root) / 2.0


def distortion_growth_check(Ks, rs, slack: float = 1e-12):
    """Grid check of arctanh(phi_K(tanh r)) <= 2 arctanh(phi_K(tanh 1/2)) * max(r, r^(1/K)).

    Returns (ok, max_violation, worst_point); equality holds at K = 1.
    """
    Ks = np.atleast_1d(np.asarray(Ks, dtype=float))
    rs = np.atleast_1d(np.asarray(rs, dtype=float))
    if np.any(Ks < 1.0):
        raise DomainError("grid check needs K >= 1")
    if np.any(rs <= 0.0) or np.any(rs >= 1.0):
        raise DomainError("grid check needs r in (0, 1)")
    worst = -np.inf
    worst_pt = (float(Ks[0]), float(rs[0]))
    tanh_r = np.tanh(rs)
    for K in Ks:
        lhs = np.arctanh(phi_distortion(float(K), tanh_r))
        coeff = 2.0 * math.atanh(phi_distortion(float(K), math.tanh(0.5)))
        rhs = coeff * np.maximum(rs, rs ** (1.0 / float(K)))
        viol = lhs - rhs
        i = int(np.argmax(viol))
        if viol[i] > worst:
            worst = float(viol[i])
            worst_pt = (float(K), float(rs[i]))
    return worst <= slack, worst, worst_pt
