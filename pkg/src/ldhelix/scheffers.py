"""Fundamental-function quadruples and the Scheffers tangent map."""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateQuadrupleError, DomainError, UnsupportedParametersError
from .riccati import HelixParams, clothoid_phase, riccati_constants

__all__ = ["FQuadruple", "TangentTriple", "alpha_from_f", "f_set", "alpha_closed_form", "CASES"]

CASES = (1, 2, 3, 4)
DEGENERACY_RTOL = 1e-12


class FQuadruple(NamedTuple):
    """(f1, f2, f3, f4) with w = (C f1 + f2)/(C f3 + f4). Fields may be arrays."""

    f1: complex | np.ndarray
    f2: complex | np.ndarray
    f3: complex | np.ndarray
    f4: complex | np.ndarray

    @property
    def discriminant(self):
        return self.f1 * self.f4 - self.f2 * self.f3

    def ratio(self, const: complex = 1.0):
        return (const * self.f1 + self.f2) / (const * self.f3 + self.f4)


class TangentTriple(NamedTuple):
    """Complex unit-tangent components; a1^2 + a2^2 + a3^2 = 1 (bilinear)."""

    a1: complex | np.ndarray
    a2: complex | np.ndarray
    a3: complex | np.ndarray

    def bilinear_norm(self):
        return self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3

    def as_array(self) -> np.ndarray:
        """Components stacked on the last axis."""
        return np.stack(np.broadcast_arrays(*(np.asarray(a, dtype=complex) for a in self)), axis=-1)


def alpha_from_f(q: FQuadruple, rtol: float = DEGENERACY_RTOL) -> TangentTriple:
    """Scheffers formulas for the tangent of the curve generated by ``q``.

    The degeneracy test is relative, |d| <= rtol * max|f_i|^2, so it is
    invariant under a common rescaling of the quadruple.
    """
    f1, f2, f3, f4 = (np.asarray(f, dtype=complex) for f in q)
    d = f1 * f4 - f2 * f3
    scale = np.max(np.abs(np.stack(np.broadcast_arrays(f1, f2, f3, f4))), axis=0) ** 2
    if np.any(np.abs(d) <= rtol * scale):
        raise DegenerateQuadrupleError("f1*f4 - f2*f3 vanishes; quadruple does not define a tangent")
    a1 = (f1 * f1 - f2 * f2 - f3 * f3 + f4 * f4) / (2.0 * d)
    a2 = 1j * (f1 * f1 + f2 * f2 - f3 * f3 - f4 * f4) / (2.0 * d)
    a3 = (f3 * f4 - f1 * f2) / d
    if d.ndim == 0:
        return TangentTriple(complex(a1), complex(a2), complex(a3))
    return TangentTriple(a1, a2, a3)


def _check_case(case_id, allowed=CASES):
    if case_id not in allowed:
        raise DomainError(f"case_id must be one of {allowed}, got {case_id!r}")


def f_set(case_id: int, s, p: HelixParams) -> FQuadruple:
    """Quadruple for one of the four ways of splitting the clothoid solution.

    With E = exp(i theta(s)):
    case 1 (w1 E, w2, E, 1); case 2 (w2, w1 E, 1, E);
    case 3 (w1 E, w2, 1, E); case 4 (w2, w1 E, E, 1).
    """
    _check_case(case_id)
    if p.shifted and case_id not in (1, 2):
        raise UnsupportedParametersError("shifted helices are only defined for cases 1 and 2")
    wc = riccati_constants(p.k)
    e = np.exp(1j * np.asarray(clothoid_phase(s, p)))
    one = np.ones_like(e)
    w2 = wc.w2 * one
    if case_id == 1:
        q = (wc.w1 * e, w2, e, one)
    elif case_id == 2:
        q = (w2, wc.w1 * e, one, e)
    elif case_id == 3:
        q = (wc.w1 * e, w2, one, e)
    else:
        q = (w2, wc.w1 * e, e, one)
    if e.ndim == 0:
        q = tuple(complex(v) for v in q)
    return FQuadruple(*q)


def alpha_closed_form(case_id: int, s, p: HelixParams) -> TangentTriple:
    """Closed-form tangent for cases 1 and 2 (shifted or not).

    Case 1: k[cos t + i q sin t], k[-sin t + i q cos t], 1/sqrt(k^2+1) with
    q = k/sqrt(k^2+1), t = theta(s). Case 2 negates the last two components.
    """
    _check_case(case_id, (1, 2))
    theta = np.asarray(clothoid_phase(s, p))
    r = math.hypot(p.k, 1.0)
    q = p.k / r
    cos, sin = np.cos(theta), np.sin(theta)
    a1 = p.k * (cos + 1j * q * sin)
    a2 = p.k * (-sin + 1j * q * cos)
    a3 = np.full_like(a1, 1.0 / r)
    if case_id == 2:
        a2, a3 = -a2, -a3
    if theta.ndim == 0:
        return TangentTriple(complex(a1), complex(a2), complex(a3))
    return TangentTriple(a1, a2, a3)
