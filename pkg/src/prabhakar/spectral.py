"""Spectral distribution K(r) of e(t) and its Laplace-integral evaluation.

For 0 < alpha < 1 the response e(t) = t^(beta-1) E^gamma_{alpha,beta}(-t^alpha)
is the Laplace transform of

    K(r) = r^(alpha*gamma - beta) / pi
           * sin(gamma*theta(r) + (beta - alpha*gamma)*pi) / xi(r)^(gamma/2),

    xi(r) = r^(2 alpha) + 2 r^alpha cos(alpha pi) + 1,

where theta(r) in [0, alpha*pi] is the angle of r^alpha e^(i alpha pi) + 1.
K is non-negative exactly when the sine argument stays inside [0, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import EvalResult, Method, ParameterTriple
from .errors import DomainError
from .quadrature import gauss_kronrod
from .special import sinpi

DEGENERACY_TOL = 1e-14
SCAN_POINTS = 2000
SCAN_RANGE = (1e-3, 1e3)


def _cospi(x: float) -> float:
    n = round(x)
    c = math.cos(math.pi * (x - n))
    return -c if n % 2 else c


def theta(alpha: float, r):
    """Phase of r^alpha e^(i alpha pi) + 1, in [0, alpha*pi].

    Accepts a scalar or an array ``r``.  The two-argument arctangent places
    the angle on the correct branch: the imaginary part is never negative
    for alpha in (0, 1].
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"theta needs 0 < alpha <= 1, got {alpha!r}")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0.0):
        raise DomainError("theta needs r >= 0")
    x = r_arr ** alpha
    out = np.arctan2(x * math.sin(math.pi * alpha), x * math.cos(math.pi * alpha) + 1.0)
    return float(out) if out.ndim == 0 else out


class LicmReport(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def is_licm(params: ParameterTriple) -> LicmReport:
    """Check 0 < alpha <= 1 and 0 < alpha*gamma <= beta <= 1.

    The comparison alpha*gamma <= beta allows 1e-14 of rounding slack so
    decimal input such as (0.75, 0.975, 1.3) lands on the boundary.
    """
    a, b, g = params.alpha, params.beta, params.gamma
    if a > 1.0:
        return LicmReport(False, f"alpha > 1 ({a:g} > 1)")
    if b < a * g - DEGENERACY_TOL:
        return LicmReport(False, f"beta < alpha*gamma ({b:g} < {a * g:.4f})")
    if b > 1.0:
        return LicmReport(False, f"beta > 1 ({b:g} > 1)")
    return LicmReport(True, "0 < alpha <= 1 and 0 < alpha*gamma <= beta <= 1")


@dataclass(frozen=True)
class SpectralPoint:
    r: float
    k_value: float
    theta: float


@dataclass(frozen=True)
class SpectralCurve:
    triple: ParameterTriple
    points: tuple
    min_value: float

    @property
    def r(self) -> np.ndarray:
        return np.array([p.r for p in self.points])

    @property
    def k_values(self) -> np.ndarray:
        return np.array([p.k_value for p in self.points])


def _check_density_domain(params: ParameterTriple):
    if not 0.0 < params.alpha < 1.0:
        raise DomainError(
            f"spectral density needs 0 < alpha < 1, got alpha={params.alpha:g}"
        )
    if params.beta <= 0.0:
        raise DomainError(f"spectral density needs beta > 0, got beta={params.beta:g}")


class _Density:
    """Vectorised pieces of K(r) for one parameter triple.

    Below r = 1 the density is assembled from theta(r); above it from
    delta = alpha*pi - theta(r), the phase of 1 + v e^(-i alpha pi) with
    v = r^-alpha, so neither the sine argument nor xi loses digits.
    """

    def __init__(self, params: ParameterTriple):
        self.p = params
        a, b, g = params.alpha, params.beta, params.gamma
        self.s_a = math.sin(math.pi * a)
        self.c_a = math.cos(math.pi * a)
        d = b - a * g
        self.sin_d, self.cos_d = sinpi(d), _cospi(d)
        self.sin_b, self.cos_b = sinpi(b), _cospi(b)

    def low(self, r):
        """K(r) / r^(alpha*gamma - beta) for 0 < r <= 1."""
        g = self.p.gamma
        x = r ** self.p.alpha
        re, im = x * self.c_a + 1.0, x * self.s_a
        th = np.arctan2(im, re)
        rho = np.hypot(re, im)
        num = np.sin(g * th) * self.cos_d + np.cos(g * th) * self.sin_d
        return num / (math.pi * rho ** g)

    def high_v(self, v):
        """K(r) / r^-beta as a function of v = r^-alpha in (0, 1]."""
        g = self.p.gamma
        re, im = v * self.c_a + 1.0, v * self.s_a
        de = np.arctan2(im, re)
        rho = np.hypot(re, im)
        num = self.sin_b * np.cos(g * de) - self.cos_b * np.sin(g * de)
        return num / (math.pi * rho ** g)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        a, b, g = self.p.alpha, self.p.beta, self.p.gamma
        out = np.empty_like(r)
        lo = r <= 1.0
        rl = r[lo]
        out[lo] = rl ** (a * g - b) * self.low(rl)
        rh = r[~lo]
        out[~lo] = rh ** (-b) * self.high_v(rh ** (-a))
        return out


def spectral_density(params: ParameterTriple, r: float) -> SpectralPoint:
    """K(r) at a single positive r, with the phase theta(r)."""
    _check_density_domain(params)
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    k = float(_Density(params)(np.array([r]))[0])
    return SpectralPoint(float(r), k, theta(params.alpha, r))


def spectral_values(params: ParameterTriple, r) -> np.ndarray:
    """Vectorised K(r) for an array of positive r."""
    _check_density_domain(params)
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be positive")
    return _Density(params)(r)


def spectral_curve(params: ParameterTriple, r) -> SpectralCurve:
    r = np.asarray(r, dtype=float)
    if r.ndim != 1 or len(r) < 1 or np.any(np.diff(r) <= 0.0):
        raise DomainError("r grid must be a strictly increasing 1-d array")
    k = spectral_values(params, r)
    th = theta(params.alpha, r)
    points = tuple(SpectralPoint(float(ri), float(ki), float(ti)) for ri, ki, ti in zip(r, k, th))
    return SpectralCurve(params, points, float(np.min(k)))


def scan_sign(params: ParameterTriple, r_min: float = SCAN_RANGE[0], r_max: float = SCAN_RANGE[1],
              n: int = SCAN_POINTS) -> SpectralCurve:
    """Density on ``n`` log-spaced points; ``min_value`` exposes negativity."""
    return spectral_curve(params, np.geomspace(r_min, r_max, n))


def _check_integral_domain(params: ParameterTriple):
    _check_density_domain(params)
    if params.beta - params.alpha * params.gamma >= 1.0:
        raise DomainError("beta - alpha*gamma >= 1: K is not integrable at r = 0")


def _head(dens: _Density, t: float, tol: float) -> tuple[float, float]:
    # int_0^1 e^{-rt} K(r) dr with r = u^p, p = 1/(1 + alpha*gamma - beta);
    # the Jacobian p u^(p-1) cancels r^(alpha*gamma - beta) exactly.
    a, b, g = dens.p.alpha, dens.p.beta, dens.p.gamma
    p = 1.0 / (1.0 + a * g - b)

    def f(u):
        r = u ** p
        return p * np.exp(-r * t) * dens.low(r)

    return gauss_kronrod(f, [0.0, 0.125, 0.5, 1.0], tol)


def _tail_radius(params: ParameterTriple, t: float, tol: float) -> tuple[float, float]:
    # |K(r)| <= r^-beta (1 - r^-alpha)^-gamma / pi for r > 1, so the tail
    # beyond R is at most 2^gamma R^-beta e^(-R t) / (pi t) once R^alpha >= 2.
    a, b, g = params.alpha, params.beta, params.gamma
    radius = max(2.0 ** (1.0 / a), 2.0)

    def bound(rad):
        return 2.0 ** g * rad ** (-b) * math.exp(-rad * t) / (math.pi * t)

    while bound(radius) > tol:
        radius *= 1.25
    return radius, bound(radius)


def eval_e_spectral(params: ParameterTriple, t: float, tol: float = 1e-10,
                    max_panels: int = 4000) -> EvalResult:
    """e(t) as the Laplace integral of the spectral density.

    The integral is split at r = 1.  The head removes the r^(alpha*gamma -
    beta) endpoint singularity by a power substitution; the tail is cut at a
    radius where a certified envelope drops below tol/10 and the remainder is
    integrated on geometrically graded panels.

    Raises
    ------
    QuadratureFailure
        If either adaptive integral exhausts ``max_panels``.
    """
    _check_integral_domain(params)
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    dens = _Density(params)
    head, head_err = _head(dens, t, 0.45 * tol)
    radius, tail_bound = _tail_radius(params, t, 0.1 * tol)
    edges = np.geomspace(1.0, radius, max(2, math.ceil(math.log2(radius)) + 1))
    body, body_err = gauss_kronrod(lambda r: np.exp(-r * t) * dens(r), edges, 0.45 * tol,
                                   max_panels=max_panels)
    return EvalResult(head + body, Method.SPECTRAL, head_err + body_err + tail_bound)


def spectral_normalization(params: ParameterTriple, tol: float = 1e-10) -> float:
    """Total mass of K for beta = 1, which must equal e(0+) = 1.

    The unbounded tail is mapped onto (0, 1] with v = r^-alpha; K decays
    like r^(-1-alpha) there, so the mapped integrand stays bounded.
    """
    _check_integral_domain(params)
    if abs(params.beta - 1.0) > DEGENERACY_TOL:
        raise DomainError(f"normalisation check needs beta = 1, got {params.beta:g}")
    if not is_licm(params):
        raise DomainError(f"normalisation check needs an LICM triple, got {params}")
    a = params.alpha
    dens = _Density(params)
    head, _ = _head(dens, 0.0, 0.5 * tol)

    def f(v):
        # r^-beta dr = v^(1/alpha) * v^(-1/alpha - 1) / alpha dv  (beta = 1)
        return dens.high_v(v) / (a * v)

    tail, _ = gauss_kronrod(f, [0.0, 0.125, 0.5, 1.0], 0.5 * tol)
    return head + tail
