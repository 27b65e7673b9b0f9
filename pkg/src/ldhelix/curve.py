"""Curve coordinates of the clothoid helices, their foci and the delta_n shifts.

Positions are complex 3-vectors. The real part is the clothoid helix and the
imaginary part a planar clothoid spiral.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np
from scipy import integrate

from .errors import DegenerateHelixError, DomainError, QuadratureError, UnsupportedParametersError
from .riccati import HelixParams
from .scheffers import CASES, alpha_from_f, f_set
from .special_functions import fresnel_scaled

__all__ = [
    "ComplexTriple",
    "CurveSample",
    "Curve",
    "Bisectrix",
    "Foci",
    "position_closed_form",
    "position_quadrature",
    "sample_curve",
    "uniform_grid",
    "foci",
    "delta_sequence",
    "split_parts",
    "fresnel_argument",
]

MIRROR = np.array([1.0, -1.0, -1.0])


class ComplexTriple(NamedTuple):
    x: complex | np.ndarray
    y: complex | np.ndarray
    z: complex | np.ndarray

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(*(np.asarray(v, dtype=complex) for v in self)), axis=-1)


class CurveSample(NamedTuple):
    s: float
    position: ComplexTriple


@dataclass
class Curve:
    """Samples of one curve on a strictly increasing grid.

    ``points`` has shape (n, 3) and complex dtype.
    """

    params: HelixParams
    case_id: int
    s: np.ndarray
    points: np.ndarray

    def __post_init__(self):
        self.s = np.asarray(self.s, dtype=float)
        self.points = np.asarray(self.points, dtype=complex)
        if self.points.shape != (len(self.s), 3):
            raise ValueError("points must have shape (len(s), 3)")
        if np.any(np.diff(self.s) <= 0):
            raise ValueError("samples must be strictly increasing in s")

    def __len__(self):
        return len(self.s)

    def __iter__(self) -> Iterator[CurveSample]:
        for s, p in zip(self.s, self.points):
            yield CurveSample(float(s), ComplexTriple(*p))

    @property
    def real(self) -> np.ndarray:
        return self.points.real

    @property
    def imag(self) -> np.ndarray:
        return self.points.imag


class Bisectrix(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    NEITHER = "neither"


@dataclass(frozen=True)
class Foci:
    """Limit points of the real (x, y) projection for s -> +inf and s -> -inf."""

    plus: np.ndarray
    minus: np.ndarray
    bisectrix: Bisectrix


def _require_helix(case_id, p: HelixParams, allowed=(1, 2)):
    if case_id not in allowed:
        raise DomainError(f"case_id must be one of {allowed}, got {case_id!r}")
    if p.k == 0:
        raise DegenerateHelixError("k = 0 degenerates the helix into a planar curve")
    if p.shifted and case_id not in (1, 2):
        raise UnsupportedParametersError("shifted helices are only defined for cases 1 and 2")


def fresnel_argument(s, p: HelixParams):
    """Argument u of the normalized Fresnel functions at arclength s."""
    return (p.k * p.k + 1.0) ** 0.25 * (np.asarray(s, dtype=float) + p.delta) / (math.sqrt(math.pi) * p.c)


def _closed_form(case_id, s, p: HelixParams):
    r = math.hypot(p.k, 1.0)
    a = r / (2.0 * p.c * p.c)
    phi = a * p.delta * p.delta
    cs, ss = fresnel_scaled(s + p.delta, a)
    # rotate the Fresnel pair by the phase offset of the shifted helix
    big_x = math.cos(phi) * cs + math.sin(phi) * ss
    big_y = -math.sin(phi) * cs + math.cos(phi) * ss
    q = p.k / r
    x = p.k * big_x + 1j * p.k * q * big_y
    y = -p.k * big_y + 1j * p.k * q * big_x
    z = (s / r) * np.ones_like(x)
    pos = np.stack([x, y, z], axis=-1)
    if case_id == 2:
        pos = pos * MIRROR
    return pos


def position_closed_form(case_id: int, s, p: HelixParams, rezero: bool = False):
    """Closed-form complex position on the case-1 or case-2 helix.

    For delta != 0 the x, y components use Fresnel functions of s + delta
    from zero, so the curve does not pass through the origin at s = 0;
    ``rezero=True`` subtracts the value at s = 0. Returns a ComplexTriple
    (of arrays when ``s`` is an array).
    """
    _require_helix(case_id, p)
    s_arr = np.asarray(s, dtype=float)
    pos = _closed_form(case_id, s_arr, p)
    if rezero and p.shifted:
        pos = pos - _closed_form(case_id, np.asarray(0.0), p)
    if s_arr.ndim == 0:
        return ComplexTriple(*(complex(v) for v in pos))
    return ComplexTriple(pos[..., 0], pos[..., 1], pos[..., 2])


def _tangent(case_id, p):
    def alpha(sigma):
        return alpha_from_f(f_set(case_id, sigma, p)).as_array()
    return alpha


def _integrate_alpha(alpha, a, b, tol):
    def stacked(t):
        v = alpha(t)
        return np.concatenate([v.real, v.imag])

    val, err, info = integrate.quad_vec(stacked, a, b, epsabs=tol, epsrel=0.0, norm="max",
                                        limit=2000, full_output=True)
    if info.status != 0 or err > tol:
        raise QuadratureError(f"quadrature on [{a}, {b}] did not converge", err)
    return val[:3] + 1j * val[3:]


def position_quadrature(case_id: int, s, p: HelixParams, tol: float = 1e-10):
    """Position from adaptive quadrature of the Scheffers tangent, from 0 to s.

    Works for all four cases. For an array of ``s`` the integrals are
    accumulated piecewise between consecutive nodes.
    """
    _require_helix(case_id, p, CASES)
    alpha = _tangent(case_id, p)
    s_arr = np.asarray(s, dtype=float)
    if s_arr.ndim == 0:
        return ComplexTriple(*_integrate_alpha(alpha, 0.0, float(s_arr), tol))
    flat = s_arr.ravel()
    nodes = np.unique(np.concatenate([flat, [0.0]]))
    zero = int(np.searchsorted(nodes, 0.0))
    seg_tol = tol / max(1, len(nodes))
    values = np.zeros((len(nodes), 3), dtype=complex)
    for i in range(zero + 1, len(nodes)):
        values[i] = values[i - 1] + _integrate_alpha(alpha, nodes[i - 1], nodes[i], seg_tol)
    for i in range(zero - 1, -1, -1):
        values[i] = values[i + 1] - _integrate_alpha(alpha, nodes[i], nodes[i + 1], seg_tol)
    pos = values[np.searchsorted(nodes, flat)].reshape(s_arr.shape + (3,))
    return ComplexTriple(pos[..., 0], pos[..., 1], pos[..., 2])


def uniform_grid(s_min: float, s_max: float, n: int, endpoint: bool = True) -> np.ndarray:
    """n uniformly spaced values; ``endpoint=False`` drops s_max (half-open).

    Computed as convex combinations so that a symmetric range hits 0.0
    exactly whenever the midpoint is a grid node.
    """
    if not s_min < s_max:
        raise DomainError("need s_min < s_max")
    if n < 2:
        raise DomainError("need at least two samples")
    denom = n - 1 if endpoint else n
    t = np.arange(n) / denom
    return s_min * (1.0 - t) + s_max * t


def sample_curve(case_id: int, p: HelixParams, s_min: float, s_max: float, n: int,
                 endpoint: bool = True, rezero: bool = False) -> Curve:
    """Sample a curve on a uniform grid.

    Cases 1 and 2 use the closed forms, cases 3 and 4 quadrature.
    """
    s = uniform_grid(s_min, s_max, n, endpoint)
    if case_id in (1, 2):
        pos = position_closed_form(case_id, s, p, rezero=rezero)
    else:
        pos = position_quadrature(case_id, s, p)
    # + 0.0 folds signed zeros from the case-2 mirror into +0.0
    return Curve(p, case_id, s, np.stack(pos, axis=-1) + 0.0)


def _classify(x: float, y: float, tol: float = 1e-12) -> Bisectrix:
    scale = max(1.0, abs(x), abs(y))
    if abs(x - y) <= tol * scale:
        return Bisectrix.FIRST
    if abs(x + y) <= tol * scale:
        return Bisectrix.SECOND
    return Bisectrix.NEITHER


def foci(case_id: int, p: HelixParams) -> Foci:
    """Foci of the real part, from the asymptotic limits C, S -> +/- 1/2.

    Unshifted case 1: (+/-a, -/+a) with a = c k sqrt(pi) / (2 (k^2+1)^(1/4)).
    Shifted (k = 1): x = +/-(c sqrt(pi)/2^(5/4)) (cos phi + sin phi),
    y = +/-(c sqrt(pi)/2^(5/4)) (sin phi - cos phi), phi = delta^2/(sqrt2 c^2).
    Case 2 negates y.
    """
    _require_helix(case_id, p)
    if p.shifted:
        phi = p.delta ** 2 / (math.sqrt(2.0) * p.c ** 2)
        amp = p.c * math.sqrt(math.pi) / 2.0 ** 1.25
        x = amp * (math.cos(phi) + math.sin(phi))
        y = amp * (math.sin(phi) - math.cos(phi))
    else:
        a = p.c * p.k * math.sqrt(math.pi) / (2.0 * (p.k ** 2 + 1.0) ** 0.25)
        x, y = a, -a
    if case_id == 2:
        y = -y
    plus = np.array([x, y])
    return Foci(plus=plus, minus=-plus, bisectrix=_classify(x, y))


def delta_sequence(n_max: int, c: float = 1.0) -> list[float]:
    """Positive shifts 2^(1/4) c sqrt((2n+1) pi / 2), n = 0..n_max, that put the foci on a bisectrix."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    if not c > 0:
        raise DomainError("c must be positive")
    return [2.0 ** 0.25 * c * math.sqrt((2 * n + 1) * math.pi / 2.0) for n in range(n_max + 1)]


def split_parts(t) -> tuple[np.ndarray, np.ndarray]:
    """Real (helix) and imaginary (spiral) parts of a position or array of positions."""
    arr = t.as_array() if isinstance(t, ComplexTriple) else np.asarray(t, dtype=complex)
    return arr.real.copy(), arr.imag.copy()
