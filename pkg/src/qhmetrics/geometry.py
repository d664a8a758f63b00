"""Dimension-generic points, the point at infinity, angles and inversion.

Points are plain float ndarrays of shape ``(n,)`` with ``n >= 2``.  The
one-point compactification adds the :data:`INFINITY` sentinel; functions that
accept either kind take an "extended point".  Dimension is a runtime value:
mixing points of different dimension raises, it never broadcasts.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from .errors import DimensionMismatchError, DomainError


class _Infinity:
    """Singleton for the point at infinity of the compactified space."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

ExtendedPoint = Union[np.ndarray, _Infinity]


def is_infinity(p) -> bool:
    return p is INFINITY


def as_point(p, name: str = "point") -> np.ndarray:
    """Validate and convert to a float vector of dimension >= 2."""
    a = np.asarray(p, dtype=float)
    if a.ndim != 1:
        raise DomainError(f"{name} must be a 1-d coordinate vector, got shape {a.shape}")
    if a.size < 2:
        raise DomainError(f"{name} must have dimension >= 2, got {a.size}")
    if not np.all(np.isfinite(a)):
        raise DomainError(f"{name} has non-finite coordinates: {a}")
    return a


def check_same_dim(*points: np.ndarray) -> int:
    dims = {p.shape[-1] for p in points}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed point dimensions {sorted(dims)}")
    return dims.pop()


def star(p: ExtendedPoint, dim: int | None = None) -> ExtendedPoint:
    """Inversion in the unit sphere, x -> x/|x|^2, with 0 <-> INFINITY.

    ``dim`` is only needed to produce the origin from INFINITY.
    """
    if is_infinity(p):
        if dim is None:
            raise DomainError("star(INFINITY) needs an explicit dim to return the origin")
        return np.zeros(dim)
    x = as_point(p)
    n2 = float(x @ x)
    if n2 == 0.0:
        return INFINITY
    return x / n2


def angle(x, vertex, y) -> float:
    """Angle at ``vertex`` between the rays toward ``x`` and ``y``, in [0, pi].

    Equals the arccos of the clamped normalized inner product of
    ``x - vertex`` and ``y - vertex``; computed in the half-chord form
    ``2*atan2(|u^ - v^|, |u^ + v^|)`` which keeps full accuracy near 0 and pi.
    """
    x = as_point(x, "x")
    v = as_point(vertex, "vertex")
    y = as_point(y, "y")
    check_same_dim(x, v, y)
    u = x - v
    w = y - v
    nu = float(np.linalg.norm(u))
    nw = float(np.linalg.norm(w))
    if nu == 0.0 or nw == 0.0:
        raise DomainError("angle vertex coincides with an endpoint")
    u = u / nu
    w = w / nw
    return 2.0 * math.atan2(float(np.linalg.norm(u - w)), float(np.linalg.norm(u + w)))
