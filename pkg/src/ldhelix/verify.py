"""Verification suites run by ``ldhelix verify``.

Each suite returns a list of :class:`Check` records; a check passes when its
observed deviation is within tolerance. Oracles here (scipy quadrature,
closed forms, RK4) are independent of the path they check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from . import curve as cv
from .frenet import (FrenetState, complex_frenet_check, curvature_torsion_from_samples,
                     frenet_integrate)
from .riccati import (CLOTHOID_ORIENTATION, CurvatureTorsionProfile, HelixParams, clothoid_phase,
                      clothoid_profile, clothoid_riccati_solution, riccati_constants,
                      riccati_integrate, riccati_residual)
from .scheffers import alpha_closed_form, alpha_from_f, f_set
from .special_functions import fresnel

SUITES = ("fresnel", "riccati", "tangent", "curve", "frenet")
DELTA0 = cv.delta_sequence(0)[0]
RESIDUAL_PARAMS = (HelixParams(1, 1, 0), HelixParams(2, 1, 0), HelixParams(1, 0.5, 0),
                   HelixParams(1, 1, 1.49))
POLE_MARGIN = 0.05  # rad; residual checks skip this neighbourhood of each pole


@dataclass
class Check:
    suite: str
    name: str
    value: float
    tol: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.value) and self.value <= self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.suite}/{self.name}  max={self.value:.3e}  tol={self.tol:.1e}"
        return f"{text}  ({self.detail})" if self.detail else text


def quad_fresnel(x: float) -> tuple[float, float]:
    """C(x), S(x) by adaptive Gauss-Kronrod on unit sub-intervals."""
    edges = np.append(np.arange(0.0, abs(x), 1.0), abs(x))
    c = s = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        c += integrate.quad(lambda t: math.cos(0.5 * math.pi * t * t), a, b, epsabs=1e-14, epsrel=0, limit=200)[0]
        s += integrate.quad(lambda t: math.sin(0.5 * math.pi * t * t), a, b, epsabs=1e-14, epsrel=0, limit=200)[0]
    return math.copysign(c, x), math.copysign(s, x)


def away_from_poles(s: np.ndarray, p: HelixParams, margin: float = POLE_MARGIN) -> np.ndarray:
    theta = np.asarray(clothoid_phase(s, p))
    return np.abs(np.remainder(theta - math.pi + math.pi, 2 * math.pi) - math.pi) >= margin


def fresnel_suite() -> list[Check]:
    xs = np.linspace(-10.0, 10.0, 201)
    c, s = fresnel(xs)
    ref = np.array([quad_fresnel(x) for x in xs])
    err = max(np.max(np.abs(c - ref[:, 0])), np.max(np.abs(s - ref[:, 1])))
    probe = np.array([0.37, 1.9, 5.2, 7.7])
    cp, sp = fresnel(probe)
    cm, sm = fresnel(-probe)
    odd = max(np.max(np.abs(cp + cm)), np.max(np.abs(sp + sm)))
    big = np.linspace(8.0, 60.0, 400)
    cb, sb = fresnel(big)
    env = np.max(np.maximum(np.abs(cb - 0.5), np.abs(sb - 0.5)) * math.pi * big)
    return [
        Check("fresnel", "quadrature_agreement", err, 1e-12, "201 points in [-10, 10]"),
        Check("fresnel", "odd_symmetry", odd, 0.0),
        Check("fresnel", "asymptotic_envelope", env, 1.0, "|C-1/2|*pi*x, x >= 8"),
    ]


def _max_residual(orientation: int) -> float:
    worst = 0.0
    for p in RESIDUAL_PARAMS:
        s = np.linspace(-10.0, 10.0, 2001)
        for si in s[away_from_poles(s, p)]:
            worst = max(worst, riccati_residual(float(si), p, orientation))
    return worst


def riccati_suite() -> list[Check]:
    rng = np.random.default_rng(7)
    prod = max(abs(riccati_constants(k).w1 * riccati_constants(k).w2 + 1.0) for k in rng.uniform(-10, 10, 50))
    p = HelixParams(1, 1, 0)
    traj = riccati_integrate(clothoid_profile(p), 1.0, 0.0, 1.0, 1e-3, orientation=CLOTHOID_ORIENTATION)
    integ = abs(traj.w[-1] - clothoid_riccati_solution(1.0, p))
    return [
        Check("riccati", "residual_printed_equation", _max_residual(1), 1e-9,
              "closed form vs the equation with +kappa, +tau"),
        Check("riccati", "residual_negated_coefficients", _max_residual(-1), 1e-9,
              "closed form vs the equation with -kappa, -tau"),
        Check("riccati", "w1_w2_product", prod, 1e-13),
        Check("riccati", "rk4_vs_closed_form", integ, 1e-8, "k=1, c=1, s in [0, 1], step 1e-3"),
    ]


def _tangent_params():
    for k in (1.0, -1.0, 2.0, -2.0, 0.5):
        for c in (0.5, 1.0, 2.0):
            yield HelixParams(k, c, 0.0)
    yield HelixParams(1.0, 1.0, DELTA0)


def tangent_suite() -> list[Check]:
    norm_err = agree = 0.0
    for p in _tangent_params():
        s = np.linspace(-5 * p.c, 5 * p.c, 501)
        for case in (1, 2, 3, 4):
            if p.shifted and case > 2:
                continue
            a = alpha_from_f(f_set(case, s, p))
            norm_err = max(norm_err, np.max(np.abs(a.bilinear_norm() - 1.0)))
            if case <= 2:
                agree = max(agree, np.max(np.abs(a.as_array() - alpha_closed_form(case, s, p).as_array())))
    return [
        Check("tangent", "bilinear_normalization", norm_err, 1e-12, "cases 1-4"),
        Check("tangent", "closed_form_vs_scheffers", agree, 1e-12, "cases 1-2"),
    ]


def curve_suite() -> list[Check]:
    quad_err = fd_err = mirror = 0.0
    for p in (HelixParams(1, 1, 0), HelixParams(2, 1, 0), HelixParams(-1, 0.5, 0), HelixParams(1, 1, DELTA0)):
        s = np.linspace(-5 * p.c, 5 * p.c, 21)
        h = 1e-4 * p.c
        for case in (1, 2):
            closed = cv.position_closed_form(case, s, p, rezero=True).as_array()
            quad = cv.position_quadrature(case, s, p).as_array()
            quad_err = max(quad_err, np.max(np.abs(closed - quad)))
            fine = np.linspace(-5 * p.c, 5 * p.c, 201)
            fd = (cv.position_closed_form(case, fine + h, p).as_array()
                  - cv.position_closed_form(case, fine - h, p).as_array()) / (2 * h)
            fd_err = max(fd_err, np.max(np.abs(fd - alpha_closed_form(case, fine, p).as_array())))
        one = cv.position_closed_form(1, s, p).as_array()
        two = cv.position_closed_form(2, s, p).as_array()
        mirror = max(mirror, np.max(np.abs(two - one * cv.MIRROR)))
    cos_err = max(abs(math.cos(d * d / math.sqrt(2.0))) for d in cv.delta_sequence(10))
    f1, f2 = cv.foci(1, HelixParams()), cv.foci(2, HelixParams())
    bis = max(abs(f1.plus[0] + f1.plus[1]), abs(f2.plus[0] - f2.plus[1]))
    return [
        Check("curve", "closed_form_vs_quadrature", quad_err, 1e-8, "|s| <= 5c"),
        Check("curve", "derivative_vs_tangent", fd_err, 1e-6, "central difference, h = 1e-4 c"),
        Check("curve", "mirror_identity", mirror, 0.0, "case 2 = diag(1,-1,-1) case 1"),
        Check("curve", "foci_bisectrix", bis, 1e-12),
        Check("curve", "delta_n_bisectrix", cos_err, 1e-12, "cos(delta_n^2/sqrt2) for n <= 10"),
    ]


def _line_fit(x, y):
    a = np.vstack([x, np.ones_like(x)]).T
    coef = np.linalg.lstsq(a, y, rcond=None)[0]
    fit = a @ coef
    r2 = 1.0 - np.sum((y - fit) ** 2) / np.sum((y - y.mean()) ** 2)
    return coef, abs(coef[1]) / np.max(np.abs(fit)), r2


def real_part_fits(p: HelixParams, spacing: float = 2.5e-4, half_width: float = 3.0, skip: float = 0.25):
    """Linear fits of recovered kappa(sigma), tau(sigma) on each side of sigma = 0.

    Returns a list of dicts with slopes, normalized intercepts and R^2.
    Lengths are in units of c.
    """
    c = p.c
    n = int(round(2 * half_width / spacing)) + 1
    curve = cv.sample_curve(1, p, -half_width * c, half_width * c, n)
    kt = curvature_torsion_from_samples(curve.real, curve.s, origin=0.0)
    out = []
    for side in (1, -1):
        m = side * kt.t > skip * c
        (ka, _), k_icpt, k_r2 = _line_fit(kt.sigma[m], kt.kappa[m])
        (ta, _), t_icpt, t_r2 = _line_fit(kt.sigma[m], kt.tau[m])
        out.append(dict(side=side, kappa_slope=ka, tau_slope=ta, kappa_intercept=k_icpt,
                        tau_intercept=t_icpt, kappa_r2=k_r2, tau_r2=t_r2,
                        ratio_spread=float(np.ptp(kt.kappa[m] / kt.tau[m]) / abs(ka / ta))))
    return out


def frenet_suite() -> list[Check]:
    ksq_err = tau_err = 0.0
    signs = set()
    for p in (HelixParams(1, 1, 0), HelixParams(2, 1, 0), HelixParams(1, 1, DELTA0)):
        for case in (1, 2):
            for s in np.linspace(-4.0, 4.0, 41):
                st = s + p.delta
                if abs(st) < 1e-6:
                    continue
                kf = complex_frenet_check(case, float(s), p)
                expect = (p.k * st / p.c ** 2) ** 2
                ksq_err = max(ksq_err, abs(kf.kappa_sq - expect) / expect)
                tau_err = max(tau_err, abs(abs(kf.tau) - abs(st) / p.c ** 2))
                signs.add(int(np.sign(kf.tau.real * st)))
    circle = frenet_integrate(CurvatureTorsionProfile(lambda s: 1.0, lambda s: 0.0),
                              FrenetState.standard(), 0.0, 2 * math.pi, 1e-4)
    fits = real_part_fits(HelixParams(1, 1, 0))
    icpt = max(max(f["kappa_intercept"], f["tau_intercept"]) for f in fits)
    r2 = max(max(1 - f["kappa_r2"], 1 - f["tau_r2"]) for f in fits)
    ratio = max(abs(abs(f["kappa_slope"] / f["tau_slope"]) / math.sqrt(2.0) - 1.0) for f in fits)
    return [
        Check("frenet", "complex_kappa_sq", ksq_err, 1e-10, "relative, cases 1-2"),
        Check("frenet", "complex_abs_tau", tau_err, 1e-10),
        Check("frenet", "complex_tau_sign_consistency", float(len(signs) - 1), 0.0,
              f"sign(tau/s~) = {sorted(signs)}"),
        Check("frenet", "circle_closure", float(np.linalg.norm(circle.positions[-1])), 1e-8, "step 1e-4"),
        Check("frenet", "frame_orthonormality", circle.max_gram_deviation(), 1e-10),
        Check("frenet", "real_part_intercept", icpt, 1e-6, "k=1, c=1"),
        Check("frenet", "real_part_r2_deficit", r2, 1e-6, "k=1, c=1"),
        Check("frenet", "real_part_slope_ratio", ratio, 1e-6, "kappa/tau slopes vs k*sqrt(k^2+1), relative"),
    ]


SUITE_FUNCS: dict[str, Callable[[], list[Check]]] = {
    "fresnel": fresnel_suite,
    "riccati": riccati_suite,
    "tangent": tangent_suite,
    "curve": curve_suite,
    "frenet": frenet_suite,
}


def run(suite: str = "all") -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITE_FUNCS[name]())
    return checks
