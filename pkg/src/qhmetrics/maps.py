"""Canonical analytic test mappings.

The radial stretch x -> |x|^(alpha-1) x is the standard K-quasiconformal
self-map of the ball (maximal dilatation K = alpha^(1-n)); the Koebe map
z -> z/(1-z)^2 is the extremal normalized univalent function of the disk,
whose image omits exactly the ray (-inf, -1/4].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import as_point
from .qhball import k_ball_refined


@dataclass(frozen=True)
class RadialStretch:
    """K-quasiconformal self-map of the n-ball fixing 0 and the boundary."""

    n: int
    K: float

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("dimension must be >= 2")
        if self.K < 1.0:
            raise DomainError("distortion parameter K must be >= 1")

    @property
    def alpha(self) -> float:
        return self.K ** (1.0 / (1.0 - self.n))

    def apply(self, x):
        x = np.asarray(x, dtype=float)
        r = np.linalg.norm(x, axis=-1, keepdims=True)
        if np.any(r > 1.0 + 1e-12):
            raise DomainError("radial stretch is defined on the closed unit ball")
        with np.errstate(divide="ignore", invalid="ignore"):
            scale = np.where(r > 0.0, r ** (self.alpha - 1.0), 0.0)
        return scale * x

    def __call__(self, x):
        return self.apply(x)


def radial_stretch(m: RadialStretch, x):
    return m.apply(x)


def koebe(z: complex) -> complex:
    """z / (1 - z)^2; pole at z = 1."""
    z = complex(z)
    if z == 1.0:
        raise DomainError("the map has a pole at z = 1")
    w = 1.0 - z
    return z / (w * w)


def koebe_derivative(z: complex) -> complex:
    """(1 + z) / (1 - z)^3."""
    z = complex(z)
    if z == 1.0:
        raise DomainError("the map has a pole at z = 1")
    w = 1.0 - z
    return (1.0 + z) / (w * w * w)


def slit_plane_distance(w: complex) -> float:
    """Distance from w to the ray (-inf, -1/4] on the real axis."""
    w = complex(w)
    if w.real >= -0.25:
        return abs(w + 0.25)
    return abs(w.imag)


def koebe_density_ratio(z: complex) -> float:
    """|f'(z)| * d(z, unit circle) / d(f(z), boundary ray) for the Koebe f.

    The distortion bound for conformal maps of plane domains forces this
    into [1/4, 4]; the value 4 is attained at z = 0.
    """
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DomainError("density ratio needs |z| < 1")
    return abs(koebe_derivative(z)) * (1.0 - r) / slit_plane_distance(koebe(z))


def koebe_k_ratio(t: float, theta: float, tol: float | None = None) -> float:
    """Quasihyperbolic expansion ratio of the Koebe map along reflected pairs.

    For z = t e^(i theta) with Re z > 0 and Re f(z) > 0, returns
    k(f(z), conj(f(z))) in the plane punctured at -1/4 (closed form
    2 arctan(Im f / (Re f + 1/4))) divided by the certified ball
    quasihyperbolic distance k(z, conj z).  Tends to 4 as t -> 0.
    """
    if not (0.0 < t < 1.0):
        raise DomainError("radius t must lie in (0, 1)")
    z = t * cmath.exp(1j * theta)
    if z.real <= 0.0:
        raise DomainError("need Re z > 0: pick a smaller angle")
    w = koebe(z)
    if w.real <= 0.0:
        raise DomainError("need Re f(z) > 0: pick a smaller angle or radius")
    if w.imag == 0.0 or z.imag == 0.0:
        raise DomainError("the reflected pair degenerates on the real axis")
    num = 2.0 * math.atan2(abs(w.imag), w.real + 0.25)
    x = np.array([z.real, z.imag])
    y = np.array([z.real, -z.imag])
    rho_scale = 2.0 * abs(z.imag) / (1.0 - t * t)
    if tol is None:
        tol = max(1e-13, 1e-8 * rho_scale)
    den = k_ball_refined(x, y, tol=tol)
    return num / den.mid
