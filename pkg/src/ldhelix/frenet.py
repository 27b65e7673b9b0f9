"""Independent checks of the Lie-Darboux curves.

Three tools live here:

* complex (bilinear) Frenet quantities of the closed-form curves,
* a Frenet-Serret integrator that keeps its frame orthonormal,
* curvature/torsion recovery from samples plus rigid alignment, used to
  show that the real part of a curve is itself a clothoid helix.

The integrator re-orthonormalizes after every RK4 step. A Lie-group
(exponential map) stepper would preserve the frame exactly and could be
dropped in behind ``frenet_integrate``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import AlignmentError, DomainError
from .riccati import CurvatureTorsionProfile, HelixParams, clothoid_phase, clothoid_phase_rate

__all__ = [
    "FrenetState",
    "FrenetTrajectory",
    "ComplexFrenet",
    "KappaTauEstimate",
    "KappaTauProfile",
    "Alignment",
    "frenet_integrate",
    "complex_frenet_check",
    "curvature_torsion_from_samples",
    "rigid_align",
    "orthonormalize",
]


@dataclass
class FrenetState:
    position: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray

    @classmethod
    def standard(cls, position=(0.0, 0.0, 0.0)) -> "FrenetState":
        """Frame aligned with the coordinate axes."""
        return cls(np.asarray(position, dtype=float), *np.eye(3))

    @property
    def frame(self) -> np.ndarray:
        """Rows T, N, B."""
        return np.stack([self.T, self.N, self.B])

    def gram_deviation(self) -> float:
        f = self.frame
        return float(np.max(np.abs(f @ f.T - np.eye(3))))


def orthonormalize(frame: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt on the rows of a 3x3 frame, in T, N, B order."""
    t, n, b = frame
    t = t / np.linalg.norm(t)
    n = n - (n @ t) * t
    n = n / np.linalg.norm(n)
    b = b - (b @ t) * t
    b = b - (b @ n) * n
    b = b / np.linalg.norm(b)
    return np.stack([t, n, b])


@dataclass
class FrenetTrajectory:
    s: np.ndarray
    positions: np.ndarray  # (m, 3)
    frames: np.ndarray  # (m, 3, 3), rows T, N, B

    def __len__(self):
        return len(self.s)

    def __iter__(self) -> Iterator[tuple[float, FrenetState]]:
        for s, r, f in zip(self.s, self.positions, self.frames):
            yield float(s), FrenetState(r, *f)

    def max_gram_deviation(self) -> float:
        g = np.einsum("mij,mkj->mik", self.frames, self.frames) - np.eye(3)
        return float(np.max(np.abs(g)))

    def determinants(self) -> np.ndarray:
        return np.linalg.det(self.frames)


def frenet_integrate(profile: CurvatureTorsionProfile, init: FrenetState, s0: float, s1: float,
                     step: float) -> FrenetTrajectory:
    """Integrate r' = T, T' = k N, N' = -k T + t B, B' = -t N with RK4.

    The frame is re-orthonormalized after every step. ``s1 < s0`` integrates
    backwards; the last step is shortened to end on ``s1``.
    """
    if not step > 0:
        raise DomainError("step must be positive")
    kappa, tau = profile.kappa, profile.tau

    def rhs(s, x):
        k, t = kappa(s), tau(s)
        if not (math.isfinite(k) and math.isfinite(t)):
            raise DomainError(f"profile is not finite at s={s!r}")
        return np.array([x[1], k * x[2], -k * x[1] + t * x[3], -t * x[2]])

    direction = 1.0 if s1 >= s0 else -1.0
    n = max(1, math.ceil(abs(s1 - s0) / step - 1e-9))
    x = np.stack([init.position, init.T, init.N, init.B]).astype(float)
    x[1:] = orthonormalize(x[1:])
    ss = np.empty(n + 1)
    out = np.empty((n + 1, 4, 3))
    ss[0], out[0] = s0, x
    s = float(s0)
    for i in range(n):
        s_next = s0 + (i + 1) * direction * step if i < n - 1 else s1
        h = s_next - s
        k1 = rhs(s, x)
        k2 = rhs(s + 0.5 * h, x + 0.5 * h * k1)
        k3 = rhs(s + 0.5 * h, x + 0.5 * h * k2)
        k4 = rhs(s + h, x + h * k3)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        x[1:] = orthonormalize(x[1:])
        s = s_next
        ss[i + 1], out[i + 1] = s, x
    return FrenetTrajectory(ss, out[:, 0].copy(), out[:, 1:].copy())


class ComplexFrenet(NamedTuple):
    kappa_sq: complex
    tau: complex


def _bdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _bdet(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def complex_frenet_check(case_id: int, s: float, p: HelixParams) -> ComplexFrenet:
    """Bilinear curvature^2 and torsion of a closed-form curve at ``s``.

    kappa^2 = C''.C'' and tau = det(C', C'', C''')/(C''.C''), with the
    non-conjugating dot product and analytic derivatives of the tangent.
    At s + delta = 0 the curvature vanishes and tau is returned as NaN.
    """
    if case_id not in (1, 2):
        raise DomainError("complex_frenet_check supports cases 1 and 2")
    th = clothoid_phase(s, p)
    d1 = clothoid_phase_rate(s, p)
    d2 = math.hypot(p.k, 1.0) / p.c ** 2
    q = p.k / math.hypot(p.k, 1.0)
    g1 = math.cos(th) + 1j * q * math.sin(th)
    g2 = -math.sin(th) + 1j * q * math.cos(th)
    k = p.k
    t0 = np.array([k * g1, k * g2, 1.0 / math.hypot(k, 1.0)])
    t1 = np.array([k * d1 * g2, -k * d1 * g1, 0.0])
    t2 = np.array([k * (d2 * g2 - d1 * d1 * g1), k * (-d2 * g1 - d1 * d1 * g2), 0.0])
    if case_id == 2:
        m = np.array([1.0, -1.0, -1.0])
        t0, t1, t2 = t0 * m, t1 * m, t2 * m
    ksq = complex(_bdot(t1, t1))
    if ksq == 0:
        return ComplexFrenet(ksq, complex(math.nan, math.nan))
    return ComplexFrenet(ksq, complex(_bdet(t0, t1, t2) / ksq))


class KappaTauEstimate(NamedTuple):
    sigma: float
    kappa: float
    tau: float


@dataclass
class KappaTauProfile:
    """Curvature and torsion recovered at interior sample points.

    ``tau`` is NaN where ``reliable`` is False (the curve is locally
    straight and the torsion formula is ill-conditioned).
    """

    t: np.ndarray
    sigma: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    reliable: np.ndarray

    def __iter__(self) -> Iterator[KappaTauEstimate]:
        for s, k, t in zip(self.sigma, self.kappa, self.tau):
            yield KappaTauEstimate(float(s), float(k), float(t))

    def __len__(self):
        return len(self.sigma)


def curvature_torsion_from_samples(points, t=None, origin: float | None = None,
                                   straight_rtol: float = 1e-8) -> KappaTauProfile:
    """Finite-difference curvature and torsion of a uniformly sampled curve.

    kappa = |r' x r''| / |r'|^3 and tau = det(r', r'', r''') / |r' x r''|^2 with
    second-order central differences. The arclength sigma is the trapezoid
    integral of |r'|, zero at parameter ``origin`` (default: the first sample).
    """
    r = np.asarray(points, dtype=float)
    n = len(r)
    if n < 7:
        raise DomainError("need at least 7 samples")
    t = np.arange(n, dtype=float) if t is None else np.asarray(t, dtype=float)
    h = t[1] - t[0]
    if not np.allclose(np.diff(t), h, rtol=1e-9, atol=0.0):
        raise DomainError("samples must be uniformly spaced")
    d1 = (r[3:-1] - r[1:-3]) / (2 * h)
    d2 = (r[3:-1] - 2 * r[2:-2] + r[1:-3]) / h ** 2
    d3 = (r[4:] - 2 * r[3:-1] + 2 * r[1:-3] - r[:-4]) / (2 * h ** 3)
    cross = np.cross(d1, d2)
    cross_n = np.linalg.norm(cross, axis=1)
    speed = np.linalg.norm(d1, axis=1)
    if np.any(speed == 0):
        raise DomainError("curve is not regular (zero velocity)")
    kappa = cross_n / speed ** 3
    reliable = cross_n > straight_rtol * max(cross_n.max(), np.finfo(float).tiny)
    with np.errstate(divide="ignore", invalid="ignore"):
        tau = np.where(reliable, np.einsum("ij,ij->i", cross, d3) / cross_n ** 2, np.nan)

    full_speed = np.linalg.norm(np.gradient(r, h, axis=0, edge_order=2), axis=1)
    sigma = np.concatenate([[0.0], np.cumsum(0.5 * (full_speed[1:] + full_speed[:-1]) * np.diff(t))])
    if origin is not None:
        sigma = sigma - np.interp(origin, t, sigma)
    return KappaTauProfile(t[2:-2], sigma[2:-2], kappa, tau, reliable)


class Alignment(NamedTuple):
    rotation: np.ndarray
    translation: np.ndarray
    rms: float


def rigid_align(a, b) -> Alignment:
    """Least-squares proper rigid motion taking point set ``a`` onto ``b``.

    Returns R, t with b ~ a @ R.T + t and the RMS residual afterwards.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[1] != 3:
        raise DomainError("point sets must both have shape (n, 3)")
    ca, cb = a.mean(axis=0), b.mean(axis=0)
    pa, pb = a - ca, b - cb
    for pts in (pa, pb):
        sv = np.linalg.svd(pts, compute_uv=False)
        if sv[0] == 0 or sv[1] <= 1e-10 * sv[0]:
            raise AlignmentError("point set is (nearly) collinear; rotation is not unique")
    u, _, vt = np.linalg.svd(pa.T @ pb)
    d = np.sign(np.linalg.det(vt.T @ u.T))
    rot = vt.T @ np.diag([1.0, 1.0, d]) @ u.T
    trans = cb - rot @ ca
    resid = b - (a @ rot.T + trans)
    return Alignment(rot, trans, float(np.sqrt(np.mean(np.sum(resid ** 2, axis=1)))))
