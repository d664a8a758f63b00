"""Mobius self-maps of the unit ball.

The canonical automorphism sending ``a`` to the origin is the composition of
the inversion ``sigma_a`` in the sphere centered at ``a* = a/|a|^2`` of radius
``r`` with ``r^2 = |a|^{-2} - 1``, followed by the reflection in the
hyperplane through the origin orthogonal to ``a``.  Every Mobius self-map of
the ball is an orthogonal map composed with such an automorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .geometry import INFINITY, ExtendedPoint, as_point, check_same_dim, is_infinity

# points whose norm exceeds 1 by at most this much are snapped to the sphere
BOUNDARY_SLACK = 1e-9


def sphere_inversion(a, x: ExtendedPoint) -> ExtendedPoint:
    """Inversion sigma_a in the sphere S(a*, r), r^2 = |a|^{-2} - 1.

    Fixes that sphere pointwise, sends ``a`` to 0 and ``a*`` to INFINITY.
    Requires 0 < |a| < 1.
    """
    a = as_point(a, "a")
    na2 = float(a @ a)
    if na2 == 0.0 or na2 >= 1.0:
        raise DomainError("sphere inversion center must satisfy 0 < |a| < 1")
    astar = a / na2
    r2 = 1.0 / na2 - 1.0
    if is_infinity(x):
        return astar.copy()
    x = as_point(x, "x")
    check_same_dim(a, x)
    d = x - astar
    dd = float(d @ d)
    if dd == 0.0:
        return INFINITY
    return astar + (r2 / dd) * d


def hyperplane_reflection(a, x: ExtendedPoint) -> ExtendedPoint:
    """Reflection in the hyperplane through 0 orthogonal to ``a`` (normal a/|a|)."""
    a = as_point(a, "a")
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise DomainError("reflection needs a nonzero normal")
    if is_infinity(x):
        return INFINITY
    x = as_point(x, "x")
    check_same_dim(a, x)
    u = a / na
    return x - 2.0 * float(x @ u) * u


def _clamp_to_ball(x: np.ndarray, name: str) -> np.ndarray:
    nx = float(np.linalg.norm(x))
    if nx > 1.0 + BOUNDARY_SLACK:
        raise DomainError(f"{name} must lie in the closed unit ball, |{name}| = {nx}")
    if nx > 1.0:
        return x / nx
    return x


def mobius_to_origin(a, x) -> np.ndarray:
    """The ball automorphism T_a with T_a(a) = 0; T_0 is the identity.

    Maps the closed ball onto itself, satisfies |T_a(x)| = |x-a|/(|a| |x-a*|)
    for a != 0, and has inverse T_{-a}.
    """
    a = as_point(a, "a")
    if float(a @ a) >= 1.0:
        raise DomainError("automorphism center must satisfy |a| < 1")
    x = as_point(x, "x")
    check_same_dim(a, x)
    x = _clamp_to_ball(x, "x")
    if float(a @ a) == 0.0:
        return x.copy()
    y = sphere_inversion(a, x)
    if is_infinity(y):  # cannot happen for |x| <= 1 since |a*| > 1
        raise DomainError("image escaped to infinity; x outside the closed ball")
    return hyperplane_reflection(a, y)


@dataclass(frozen=True)
class BallMobius:
    """A Mobius self-map of the unit ball: ``x -> kappa @ T_a(x)``.

    ``a`` is the preimage of the origin; ``kappa`` an orthogonal matrix.
    """

    a: np.ndarray
    kappa: np.ndarray = None  # defaults to the identity

    def __post_init__(self):
        a = as_point(self.a, "a")
        if float(a @ a) >= 1.0:
            raise DomainError("BallMobius center must satisfy |a| < 1")
        object.__setattr__(self, "a", a)
        n = a.size
        kappa = np.eye(n) if self.kappa is None else np.asarray(self.kappa, dtype=float)
        if kappa.shape != (n, n):
            raise DomainError(f"kappa must be {n}x{n}, got {kappa.shape}")
        if not np.allclose(kappa.T @ kappa, np.eye(n), atol=1e-12):
            raise DomainError("kappa must be orthogonal (kappa^T kappa = I to 1e-12)")
        object.__setattr__(self, "kappa", kappa)

    def apply(self, x) -> np.ndarray:
        return self.kappa @ mobius_to_origin(self.a, x)

    def __call__(self, x) -> np.ndarray:
        return self.apply(x)

    @property
    def bilipschitz_constant(self) -> float:
        """The Lipschitz constant (1+|a|)/(1-|a|) of the map and its inverse."""
        na = float(np.linalg.norm(self.a))
        return (1.0 + na) / (1.0 - na)


def bilipschitz_constant(g: BallMobius) -> float:
    return g.bilipschitz_constant


def plane_rotation(n: int, i: int, j: int, theta: float) -> np.ndarray:
    """Orthogonal matrix rotating the (i, j) coordinate plane by theta."""
    if not (0 <= i < n and 0 <= j < n and i != j):
        raise DomainError("rotation plane indices must be distinct and < n")
    m = np.eye(n)
    c, s = math.cos(theta), math.sin(theta)
    m[i, i] = c
    m[j, j] = c
    m[i, j] = -s
    m[j, i] = s
    return m


def mobius_norm_identity(a, x) -> float:
    """|x-a| / (|a| |x-a*|): the norm of T_a(x) in closed form (a != 0)."""
    a = as_point(a, "a")
    x = as_point(x, "x")
    check_same_dim(a, x)
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise DomainError("closed-form norm needs a != 0")
    astar = a / (na * na)
    return float(np.linalg.norm(x - a) / (na * np.linalg.norm(x - astar)))
