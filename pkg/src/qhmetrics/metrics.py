"""Closed-form evaluators for the hyperbolic-type metrics.

All point arguments accept arrays of shape ``(..., n)`` and broadcast over
leading axes; the point dimension (last axis) must agree between arguments.
Scalar inputs give Python floats back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .geometry import (
    INFINITY,
    ExtendedPoint,
    as_point,
    check_same_dim,
    is_infinity,
)


@dataclass(frozen=True)
class PuncturedSpace:
    """The domain obtained by deleting one point from euclidean space."""

    z: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "z", as_point(self.z, "z"))


@dataclass(frozen=True)
class UnitBall:
    """The open unit ball of dimension ``dim``."""

    dim: int = 2

    def __post_init__(self):
        if self.dim < 2:
            raise DomainError("ball dimension must be >= 2")


def _as_batch(p, name):
    a = np.asarray(p, dtype=float)
    if a.ndim == 0 or a.shape[-1] < 2:
        raise DomainError(f"{name} must have dimension >= 2")
    if not np.all(np.isfinite(a)):
        raise DomainError(f"{name} has non-finite coordinates")
    return a


def _pair(x, y):
    x = _as_batch(x, "x")
    y = _as_batch(y, "y")
    if x.shape[-1] != y.shape[-1]:
        raise DomainError(
            f"mixed point dimensions {x.shape[-1]} and {y.shape[-1]}"
        )
    return x, y


def _ret(v):
    return float(v) if np.ndim(v) == 0 else v


def j_ball(x, y):
    """Distance-ratio metric of the unit ball:
    log(1 + |x-y| / min(1-|x|, 1-|y|))."""
    x, y = _pair(x, y)
    nx = np.linalg.norm(x, axis=-1)
    ny = np.linalg.norm(y, axis=-1)
    if np.any(nx >= 1.0) or np.any(ny >= 1.0):
        raise DomainError("j_ball needs |x| < 1 and |y| < 1")
    d = np.minimum(1.0 - nx, 1.0 - ny)
    return _ret(np.log1p(np.linalg.norm(x - y, axis=-1) / d))


def j_punctured(z, x, y):
    """Distance-ratio metric of space punctured at ``z``."""
    x, y = _pair(x, y)
    z = _as_batch(z, "z")
    if z.shape[-1] != x.shape[-1]:
        raise DomainError("puncture dimension differs from the points'")
    dx = np.linalg.norm(x - z, axis=-1)
    dy = np.linalg.norm(y - z, axis=-1)
    if np.any(dx == 0.0) or np.any(dy == 0.0):
        raise DomainError("j_punctured needs x != z and y != z")
    return _ret(np.log1p(np.linalg.norm(x - y, axis=-1) / np.minimum(dx, dy)))


def rho_ball(x, y):
    """Hyperbolic metric of the unit ball,
    2 arsinh( |x-y| / sqrt((1-|x|^2)(1-|y|^2)) )."""
    x, y = _pair(x, y)
    x2 = np.sum(x * x, axis=-1)
    y2 = np.sum(y * y, axis=-1)
    if np.any(x2 >= 1.0) or np.any(y2 >= 1.0):
        raise DomainError("rho_ball needs |x| < 1 and |y| < 1")
    d = np.linalg.norm(x - y, axis=-1)
    return _ret(2.0 * np.arcsinh(d / np.sqrt((1.0 - x2) * (1.0 - y2))))


def _angle_batch(u, v):
    # stable angle between row vectors: 2 atan2(|u^-v^|, |u^+v^|)
    nu = np.linalg.norm(u, axis=-1, keepdims=True)
    nv = np.linalg.norm(v, axis=-1, keepdims=True)
    uu = u / nu
    vv = v / nv
    return 2.0 * np.arctan2(
        np.linalg.norm(uu - vv, axis=-1), np.linalg.norm(uu + vv, axis=-1)
    )


def k_punctured(z, x, y):
    """Quasihyperbolic metric of space punctured at ``z``:
    sqrt(theta^2 + log^2(|x-z|/|y-z|)) with theta the angle at ``z``."""
    x, y = _pair(x, y)
    z = _as_batch(z, "z")
    if z.shape[-1] != x.shape[-1]:
        raise DomainError("puncture dimension differs from the points'")
    u = x - z
    v = y - z
    du = np.linalg.norm(u, axis=-1)
    dv = np.linalg.norm(v, axis=-1)
    if np.any(du == 0.0) or np.any(dv == 0.0):
        raise DomainError("k_punctured needs x != z and y != z")
    theta = _angle_batch(u, v)
    return _ret(np.hypot(theta, np.log(du / dv)))


def chordal(x: ExtendedPoint, y: ExtendedPoint) -> float:
    """Chordal metric on compactified space; values in [0, 1]."""
    xi, yi = is_infinity(x), is_infinity(y)
    if xi and yi:
        return 0.0
    if xi or yi:
        p = as_point(y if xi else x)
        return 1.0 / math.sqrt(1.0 + float(p @ p))
    x = as_point(x, "x")
    y = as_point(y, "y")
    check_same_dim(x, y)
    return float(
        np.linalg.norm(x - y)
        / math.sqrt((1.0 + float(x @ x)) * (1.0 + float(y @ y)))
    )


def cross_ratio(a: ExtendedPoint, x: ExtendedPoint, b: ExtendedPoint, y: ExtendedPoint) -> float:
    """Absolute cross ratio q(a,b) q(x,y) / (q(a,x) q(b,y)).

    Degenerate (division by zero) when a = x or b = y.
    """
    qax = chordal(a, x)
    qby = chordal(b, y)
    if qax == 0.0 or qby == 0.0:
        raise DomainError("cross ratio degenerate: a = x or b = y")
    return chordal(a, b) * chordal(x, y) / (qax * qby)


def seittenranta_delta(boundary, x, y) -> float:
    """sup over ordered boundary pairs (a, b), a != b, of log(1 + |a,x,b,y|).

    ``boundary`` is either a :class:`UnitBall` (the supremum then equals the
    hyperbolic metric of the ball and is returned in closed form) or an
    explicit sequence of at least two extended points sampling the boundary.
    """
    if isinstance(boundary, UnitBall):
        return rho_ball(x, y)
    pts: Sequence[ExtendedPoint] = list(boundary)
    if len(pts) < 2:
        raise DomainError("boundary sample must contain at least 2 points")
    x = as_point(x, "x")
    y = as_point(y, "y")
    best = 0.0
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            if i == j:
                continue
            try:
                cr = cross_ratio(a, x, b, y)
            except DomainError:
                raise DomainError(
                    "delta undefined: x or y coincides with a boundary point"
                )
            best = max(best, math.log1p(cr))
    return best
