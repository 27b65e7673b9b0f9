"""Lie-Darboux Riccati equation and its clothoid-helix solutions.

The equation is

    dw/ds = -i kappa(s) w + i (tau(s)/2) w**2 - i tau(s)/2

and for the clothoid profile kappa = k (s + delta)/c**2, tau = (s + delta)/c**2
it has the rational solution

    w(s) = (w1 E + w2) / (E + 1),   E = exp(i theta(s)),
    w1, w2 = k +/- sqrt(k**2 + 1).

Note on orientation: the rational solution above satisfies the equation
with *both* coefficients negated (equivalently, its complex conjugate
satisfies the equation as written). ``riccati_rhs`` therefore takes an
``orientation`` argument; ``CLOTHOID_ORIENTATION`` is the one the closed
forms actually solve.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, PoleError, UnsupportedParametersError

__all__ = [
    "HelixParams",
    "RiccatiConstants",
    "CurvatureTorsionProfile",
    "RiccatiTrajectory",
    "CLOTHOID_ORIENTATION",
    "riccati_constants",
    "riccati_rhs",
    "clothoid_profile",
    "clothoid_phase",
    "clothoid_phase_rate",
    "clothoid_riccati_solution",
    "clothoid_riccati_derivative",
    "riccati_residual",
    "riccati_integrate",
]

CLOTHOID_ORIENTATION = -1
DEFAULT_POLE_TOL = 1e-10
DEFAULT_BLOWUP = 1e8


@dataclass(frozen=True)
class HelixParams:
    """Parameters (k, c, delta) of a clothoid helix family.

    k is the ratio curvature/torsion, c a dilation length and delta the
    arclength shift. A nonzero shift is only defined for k = 1.
    """

    k: float = 1.0
    c: float = 1.0
    delta: float = 0.0

    def __post_init__(self):
        for name in ("k", "c", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.c <= 0:
            raise DomainError(f"c must be positive, got {self.c!r}")
        if self.delta != 0 and self.k != 1:
            raise UnsupportedParametersError(
                f"delta != 0 is only supported with k = 1 (got k={self.k!r}, delta={self.delta!r})")

    @property
    def shifted(self) -> bool:
        return self.delta != 0


@dataclass(frozen=True)
class RiccatiConstants:
    w1: float
    w2: float


def riccati_constants(k: float) -> RiccatiConstants:
    """Fixed points w1 = k + sqrt(k^2+1), w2 = k - sqrt(k^2+1).

    w2 is evaluated as -1/w1 (w1 for k < 0) to avoid cancellation, so that
    w1*w2 = -1 holds to rounding.
    """
    r = math.hypot(k, 1.0)
    if k >= 0:
        w1 = k + r
        return RiccatiConstants(w1, -1.0 / w1)
    w2 = k - r
    return RiccatiConstants(-1.0 / w2, w2)


@dataclass(frozen=True)
class CurvatureTorsionProfile:
    kappa: Callable[[float], float]
    tau: Callable[[float], float]


def clothoid_profile(p: HelixParams) -> CurvatureTorsionProfile:
    """kappa = k (s+delta)/c^2, tau = (s+delta)/c^2."""
    c2 = p.c * p.c
    return CurvatureTorsionProfile(
        kappa=lambda s: p.k * (s + p.delta) / c2,
        tau=lambda s: (s + p.delta) / c2,
    )


def riccati_rhs(w: complex, kappa: float, tau: float, orientation: int = 1) -> complex:
    """Right-hand side -i kappa w + i (tau/2)(w^2 - 1), times ``orientation`` (+1 or -1)."""
    return orientation * (-1j * kappa * w + 0.5j * tau * (w * w - 1.0))


def clothoid_phase(s, p: HelixParams):
    """theta(s) = sqrt(k^2+1) * ((s+delta)^2 - delta^2) / (2 c^2).

    For delta = 0 this is sqrt(k^2+1) s^2/(2c^2); for k = 1 and delta != 0 it
    expands to s^2/(sqrt2 c^2) + sqrt2 delta s/c^2. Accepts arrays.
    """
    if p.delta != 0 and p.k != 1:
        raise UnsupportedParametersError("delta != 0 requires k = 1")
    r = math.hypot(p.k, 1.0)
    s = np.asarray(s, dtype=float)
    out = r * s * (s + 2.0 * p.delta) / (2.0 * p.c * p.c)
    return float(out) if out.ndim == 0 else out


def clothoid_phase_rate(s, p: HelixParams):
    """d theta/ds = sqrt(k^2+1) (s+delta)/c^2."""
    r = math.hypot(p.k, 1.0)
    s = np.asarray(s, dtype=float)
    out = r * (s + p.delta) / (p.c * p.c)
    return float(out) if out.ndim == 0 else out


def _pole_distance(theta: float) -> float:
    return abs(math.remainder(theta - math.pi, 2.0 * math.pi))


def clothoid_riccati_solution(s: float, p: HelixParams, pole_tol: float = DEFAULT_POLE_TOL) -> complex:
    """Closed-form rational solution (w1 E + w2)/(E + 1), E = exp(i theta(s)).

    Evaluated in the equivalent form k + i sqrt(k^2+1) tan(theta/2), which
    is exactly k at s = 0. Raises PoleError when theta(s) is within
    ``pole_tol`` rad of an odd multiple of pi. Satisfies
    ``riccati_rhs(..., orientation=CLOTHOID_ORIENTATION)``.
    """
    theta = clothoid_phase(s, p)
    dist = _pole_distance(theta)
    if dist < pole_tol:
        raise PoleError(s, dist)
    return complex(p.k, math.hypot(p.k, 1.0) * math.tan(0.5 * theta))


def clothoid_riccati_derivative(s: float, p: HelixParams, pole_tol: float = DEFAULT_POLE_TOL) -> complex:
    """Analytic dw/ds = (w1 - w2) i theta' E/(E+1)^2 = i sqrt(k^2+1) theta' / (2 cos^2(theta/2))."""
    theta = clothoid_phase(s, p)
    dist = _pole_distance(theta)
    if dist < pole_tol:
        raise PoleError(s, dist)
    half = math.cos(0.5 * theta)
    return 1j * math.hypot(p.k, 1.0) * clothoid_phase_rate(s, p) / (2.0 * half * half)


def riccati_residual(s: float, p: HelixParams, orientation: int = 1,
                     pole_tol: float = DEFAULT_POLE_TOL) -> float:
    """|dw/ds - rhs(w)| for the closed form under the clothoid profile."""
    prof = clothoid_profile(p)
    w = clothoid_riccati_solution(s, p, pole_tol)
    dw = clothoid_riccati_derivative(s, p, pole_tol)
    return abs(dw - riccati_rhs(w, prof.kappa(s), prof.tau(s), orientation))


@dataclass
class RiccatiTrajectory:
    """Output of :func:`riccati_integrate`.

    ``blew_up`` is set when |w| crossed the threshold; ``s``/``w`` then end at
    the last valid point (``last_valid_s``).
    """

    s: np.ndarray
    w: np.ndarray
    blew_up: bool = False

    @property
    def last_valid_s(self) -> float:
        return float(self.s[-1])

    def __iter__(self):
        return iter(zip(self.s.tolist(), self.w.tolist()))

    def __len__(self):
        return len(self.s)


def riccati_integrate(profile: CurvatureTorsionProfile, w0: complex, s0: float, s1: float,
                      step: float, orientation: int = 1,
                      blowup: float = DEFAULT_BLOWUP) -> RiccatiTrajectory:
    """Classical RK4 integration of the Riccati equation from s0 to s1.

    Integrates backwards when s1 < s0. The final step is shortened to land
    on s1 exactly. Movable poles are not an error: the trajectory stops at
    the last point with |w| <= ``blowup`` and ``blew_up`` is set.
    """
    if not step > 0:
        raise DomainError("step must be positive")
    kappa, tau = profile.kappa, profile.tau

    def f(s, w):
        return riccati_rhs(w, kappa(s), tau(s), orientation)

    direction = 1.0 if s1 >= s0 else -1.0
    n = max(1, math.ceil(abs(s1 - s0) / step - 1e-9))
    h = direction * step
    ss = [float(s0)]
    ws = [complex(w0)]
    s, w = float(s0), complex(w0)
    blew_up = False
    for i in range(n):
        if i == n - 1:
            h = s1 - s
        k1 = f(s, w)
        k2 = f(s + 0.5 * h, w + 0.5 * h * k1)
        k3 = f(s + 0.5 * h, w + 0.5 * h * k2)
        k4 = f(s + h, w + h * k3)
        w_new = w + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        s_new = s0 + (i + 1) * direction * step if i < n - 1 else s1
        if not cmath.isfinite(w_new) or abs(w_new) > blowup:
            blew_up = True
            break
        s, w = s_new, w_new
        ss.append(s)
        ws.append(w)
    return RiccatiTrajectory(np.array(ss), np.array(ws, dtype=complex), blew_up)
