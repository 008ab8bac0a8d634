"""Method-dispatching front door for e(t) = t^(beta-1) E^gamma_{alpha,beta}(-t^alpha)."""
from __future__ import annotations

from .asymptotics import DEFAULT_TERMS, build_expansion, eval_expansion, truncation_error
from .core import EvalResult, Method, ParameterTriple, ml3_series
from .errors import DomainError, NonConvergenceError
from .ilt import eval_e_ilt
from .spectral import eval_e_spectral

T_SWITCH = 1.0


def _series_e(params: ParameterTriple, t: float) -> EvalResult:
    res = ml3_series(params, -(t ** params.alpha))
    scale = t ** (params.beta - 1.0)
    return EvalResult(scale * res.value, Method.SERIES, scale * res.err_estimate)


def eval_e(params: ParameterTriple, t: float, method: Method | str = Method.AUTO,
           tol: float = 1e-14) -> EvalResult:
    """Evaluate e(t) for t > 0.

    ``Method.AUTO`` sums the power series for t <= 1 and inverts the Laplace
    transform otherwise, also falling back to inversion when the series
    fails to converge.  For alpha > 1 the inversion is unavailable and the
    series is used throughout.  ``tol`` is passed to the inversion and
    spectral backends; the spectral quadrature is never asked for less than
    1e-12, which is about what it resolves.
    """
    method = Method(method)
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")

    if method is Method.SERIES:
        return _series_e(params, t)
    if method is Method.ILT:
        return eval_e_ilt(params, t, tol)
    if method is Method.SPECTRAL:
        return eval_e_spectral(params, t, max(tol, 1e-12))
    if method is Method.ASYMPTOTIC:
        value = eval_expansion(build_expansion(params, DEFAULT_TERMS), t)
        return EvalResult(value, Method.ASYMPTOTIC, truncation_error(params, DEFAULT_TERMS, t))

    if params.alpha > 1.0:
        return _series_e(params, t)
    if t <= T_SWITCH:
        try:
            return _series_e(params, t)
        except NonConvergenceError:
            pass
    return eval_e_ilt(params, t, tol)


def derivative(params: ParameterTriple, t: float, k: int, method: Method | str = Method.AUTO,
               tol: float = 1e-14) -> EvalResult:
    """k-th derivative of e(t), which is e(t) with beta lowered by k."""
    if k < 0 or int(k) != k:
        raise DomainError(f"derivative order must be a non-negative integer, got {k!r}")
    return eval_e(params.shifted(int(k)), t, method, tol)
