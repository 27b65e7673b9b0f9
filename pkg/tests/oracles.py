"""Slow, independent reference computations used only by the tests."""
import math

import numpy as np

_NODES = {n: np.polynomial.legendre.leggauss(n) for n in (20, 40)}


def _gauss(f, a, b, n):
    x, w = _NODES[n]
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return half * np.tensordot(w, f(mid + half * x), axes=(0, 0))


def adaptive_gauss(f, a, b, tol=1e-14, depth=0):
    """Adaptive Gauss-Legendre: accept when the 20- and 40-point rules agree.

    ``f`` must accept an array of nodes and may return extra trailing axes.
    """
    if a == b:
        return _gauss(f, a, a + 1.0, 20) * 0.0
    lo, hi = _gauss(f, a, b, 20), _gauss(f, a, b, 40)
    if np.max(np.abs(hi - lo)) <= tol or depth > 40:
        return hi
    m = 0.5 * (a + b)
    return adaptive_gauss(f, a, m, tol / 2, depth + 1) + adaptive_gauss(f, m, b, tol / 2, depth + 1)


def fresnel_quad(x, tol=1e-14):
    """C(x), S(x) from the defining integrals, on unit sub-intervals."""
    def integrand(t):
        ph = 0.5 * math.pi * t * t
        return np.stack([np.cos(ph), np.sin(ph)], axis=-1)

    ax = abs(x)
    edges = np.append(np.arange(0.0, ax, 1.0), ax)
    total = np.zeros(2)
    for a, b in zip(edges[:-1], edges[1:]):
        total = total + adaptive_gauss(integrand, a, b, tol)
    return math.copysign(total[0], x), math.copysign(total[1], x)


def scaled_fresnel_quad(s, a, tol=1e-14):
    def integrand(t):
        return np.stack([np.cos(a * t * t), np.sin(a * t * t)], axis=-1)
    lo, hi = (0.0, s) if s >= 0 else (s, 0.0)
    val = adaptive_gauss(integrand, lo, hi, tol)
    return tuple(val if s >= 0 else -val)


def central_difference(f, s, h):
    return (np.asarray(f(s + h)) - np.asarray(f(s - h))) / (2.0 * h)
