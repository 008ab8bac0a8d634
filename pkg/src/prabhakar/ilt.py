"""Laplace inversion on a parabolic contour with the trapezoidal rule.

The Bromwich line is replaced by s(u) = mu (1 + i u)^2, a parabola with its
vertex at s = mu that opens to the left around the branch cut of the
transform on the negative real axis.  Node spacing h and scale mu follow the
error-balancing rule h = 3/N, mu = pi N / (12 t), under which discretisation
and truncation errors both decay like exp(-2 pi N / 3).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EPS, EvalResult, Method, ParameterTriple, log_transform
from .errors import DomainError

# Convergence rate of the balanced parabola, per one-sided node.
_RATE = 2.0 * math.pi / 3.0
# Nodes added on top of the rate estimate; covers the algebraic prefactors.
_EXTRA_NODES = 2


@dataclass(frozen=True)
class ContourParams:
    mu: float
    h: float
    n_nodes: int
    t_target: float

    def nodes(self) -> np.ndarray:
        """Parameter values u_k = k h, k = 0..N (the u >= 0 half)."""
        return self.h * np.arange(self.n_nodes + 1)

    def points(self) -> np.ndarray:
        u = self.nodes()
        return self.mu * (1.0 + 1j * u) ** 2


def select_contour(t: float, tol: float = 1e-14, growth: float = 0.0) -> ContourParams:
    """Balanced parabola for target time ``t`` and relative accuracy ``tol``.

    ``growth`` is the exponent m of a transform growing like |s|^m along the
    contour; each two units of m add one node.  Roundoff grows with N as
    exp(pi N / 12), so more nodes than this only hurt.  N does not depend on
    ``t``, hence mu scales exactly as 1/t.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    if not 1e-15 <= tol <= 1e-2:
        raise DomainError(f"tol must lie in [1e-15, 1e-2], got {tol!r}")
    n = math.ceil(-math.log(tol) / _RATE) + _EXTRA_NODES + math.ceil(max(growth, 0.0) / 2.0)
    return ContourParams(mu=math.pi * n / (12.0 * t), h=3.0 / n, n_nodes=n, t_target=float(t))


def _check_params(params: ParameterTriple):
    if params.alpha > 1.0:
        # s^alpha = -1 then has solutions off the negative real axis that
        # the parabola would have to avoid.
        raise DomainError(
            f"contour inversion is implemented for 0 < alpha <= 1, got alpha={params.alpha:g}"
        )


def _shift(params: ParameterTriple) -> float:
    """Abscissa shift that moves the only branch point to the origin.

    For alpha = 1 and gamma - beta a non-negative integer m the transform is
    s^m / (s + 1)^gamma, singular only at s = -1.  Inverting
    F(s - 1) = (s - 1)^m / s^gamma and multiplying by e^-t keeps relative
    accuracy where e(t) itself decays exponentially.
    """
    m = params.gamma - params.beta
    if params.alpha == 1.0 and m >= -1e-14 and abs(m - round(m)) < 1e-14:
        return 1.0
    return 0.0


def _log_kernel(params: ParameterTriple, s: np.ndarray, shift: float) -> np.ndarray:
    if shift == 0.0:
        return log_transform(params, s)
    m = round(params.gamma - params.beta)
    out = -params.gamma * np.log(s)
    if m:
        # integer power, so the branch of log(s - 1) does not matter
        out = out + m * np.log(s - shift)
    return out


def _invert(params: ParameterTriple, t: float, contour: ContourParams) -> tuple[float, float]:
    u = contour.nodes()
    s = contour.mu * (1.0 + 1j * u) ** 2
    assert np.all(np.abs(np.angle(s)) < math.pi)
    shift = _shift(params)
    # e^{st} F(s) s'(u) / (2 pi i) with s'(u) = 2 i mu (1 + i u)
    g = np.exp((s - shift) * t + _log_kernel(params, s, shift)) * (1.0 + 1j * u)
    terms = g.real
    terms[1:] *= 2.0
    scale = contour.h * contour.mu / math.pi
    value = scale * math.fsum(terms)
    if not math.isfinite(value):
        raise ArithmeticError(f"non-finite contour sum for {params} at t={t:g}")
    magnitude = scale * float(np.max(np.abs(g)))
    err = magnitude * (math.exp(-_RATE * contour.n_nodes) + EPS * contour.n_nodes)
    return value, err


def eval_e_ilt(params: ParameterTriple, t: float, tol: float = 1e-14) -> EvalResult:
    """t^(beta-1) E^gamma_{alpha,beta}(-t^alpha) by numerical Laplace inversion.

    ``beta`` is unrestricted; ``alpha`` must not exceed 1.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    _check_params(params)
    value, err = _invert(params, float(t), select_contour(t, tol, -params.beta))
    return EvalResult(value, Method.ILT, err)


def eval_e_ilt_many(params: ParameterTriple, ts, tol: float = 1e-14) -> np.ndarray:
    """Vectorised values of :func:`eval_e_ilt` on an array of times."""
    ts = np.asarray(ts, dtype=float)
    if np.any(ts <= 0.0):
        raise DomainError("all t must be positive")
    _check_params(params)
    n = select_contour(1.0, tol, -params.beta).n_nodes
    u = (3.0 / n) * np.arange(n + 1)
    mu = math.pi * n / (12.0 * ts.ravel())
    s = mu[:, None] * ((1.0 + 1j * u) ** 2)[None, :]
    shift = _shift(params)
    g = np.exp((s - shift) * ts.ravel()[:, None] + _log_kernel(params, s, shift)) \
        * (1.0 + 1j * u)[None, :]
    terms = g.real
    terms[:, 1:] *= 2.0
    out = (3.0 / n) * mu / math.pi * terms.sum(axis=1)
    return out.reshape(ts.shape)
