"""Normalized Fresnel integrals.

    C(x) = int_0^x cos(pi t^2 / 2) dt,    S(x) = int_0^x sin(pi t^2 / 2) dt

Two regimes: the Taylor series of ``int_0^x exp(i pi t^2 / 2) dt`` below
``SERIES_CUTOFF`` and, above it, a continued fraction for the complementary
error function evaluated with the modified Lentz algorithm.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError

__all__ = ["FresnelPair", "fresnel", "fresnel_scaled", "SERIES_CUTOFF"]

# Chosen by scanning both regimes against mpmath on [0.8, 3.2]; both are ~1e-16 at 1.6.
SERIES_CUTOFF = 1.6

_EPS = 1e-16
_TINY = 1e-300
_MAXIT = 2000
_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant


class FresnelPair(NamedTuple):
    """(C(x), S(x)); the fields are arrays when the argument is an array."""

    c_val: float | np.ndarray
    s_val: float | np.ndarray


def _square_mod4(x):
    """x**2 reduced modulo 4, carrying the rounding error of the square."""
    p = x * x
    t = _SPLIT * x
    hi = t - (t - x)
    lo = x - hi
    err = ((hi * hi - p) + 2.0 * hi * lo) + lo * lo
    return np.fmod(p, 4.0) + err


def _series(x):
    # int_0^x exp(i pi t^2/2) dt = x * sum_m (i t)^m / (m! (2m+1)),  t = pi x^2 / 2
    t = 0.5 * math.pi * x * x
    term = np.ones_like(x, dtype=complex)
    total = np.ones_like(x, dtype=complex)
    it = 1j * t
    for m in range(1, 60):
        term = term * it / m
        total = total + term / (2 * m + 1)
        if np.all(np.abs(term) < _EPS * 1e-3):
            break
    z = x * total
    return z.real, z.imag


def _continued_fraction(x):
    pix2 = math.pi * x * x
    b = 1.0 - 1j * pix2
    cc = np.full(x.shape, 1.0 / _TINY, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    done = np.zeros(x.shape, dtype=bool)
    n = -1
    for _ in range(_MAXIT):
        n += 2
        a = -n * (n + 1.0)
        b = b + 4.0
        d = 1.0 / (a * d + b)
        cc = b + a / cc
        delta = cc * d
        h = np.where(done, h, h * delta)
        done |= np.abs(delta.real - 1.0) + np.abs(delta.imag) < _EPS
        if done.all():
            break
    h = (x - 1j * x) * h
    phase = 0.5 * math.pi * _square_mod4(x)
    cs = (0.5 + 0.5j) * (1.0 - np.exp(1j * phase) * h)
    return cs.real, cs.imag


def fresnel(x) -> FresnelPair:
    """Normalized Fresnel integrals at ``x`` (scalar or array).

    Accurate to about 1e-15 absolute over the real line. Odd symmetry is
    exact because both regimes work on ``|x|``.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("fresnel requires finite arguments")
    ax = np.abs(np.atleast_1d(arr))
    c = np.empty_like(ax)
    s = np.empty_like(ax)
    small = ax < SERIES_CUTOFF
    if small.any():
        c[small], s[small] = _series(ax[small])
    if (~small).any():
        c[~small], s[~small] = _continued_fraction(ax[~small])
    sign = np.sign(np.atleast_1d(arr))
    c, s = sign * c, sign * s
    if arr.ndim == 0:
        return FresnelPair(float(c[0]), float(s[0]))
    return FresnelPair(c.reshape(arr.shape), s.reshape(arr.shape))


def fresnel_scaled(s, a) -> FresnelPair:
    """Return (int_0^s cos(a u^2) du, int_0^s sin(a u^2) du) for ``a > 0``."""
    if not (np.isfinite(a) and a > 0):
        raise DomainError(f"fresnel_scaled needs a finite a > 0, got {a!r}")
    scale = math.sqrt(2.0 * a / math.pi)
    c, sv = fresnel(np.asarray(s, dtype=float) * scale)
    return FresnelPair(c / scale, sv / scale)
