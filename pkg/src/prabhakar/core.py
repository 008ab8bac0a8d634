"""Parameter triple, result record, power-series evaluator and Laplace transform."""
from __future__ import annotations

import cmath
import enum
import math
import os
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, NonConvergenceError
from .special import lgamma_abs, rgamma

EPS = float(np.finfo(float).eps)
DEFAULT_MAX_TERMS = 5000


class Method(str, enum.Enum):
    AUTO = "auto"
    SERIES = "series"
    SPECTRAL = "spectral"
    ILT = "ilt"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class ParameterTriple:
    """Order parameters (alpha, beta, gamma) of the Prabhakar function.

    ``alpha`` and ``gamma`` must be positive.  ``beta`` may be any real,
    since derivatives shift it down by integers.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.alpha <= 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if self.gamma <= 0.0:
            raise DomainError(f"gamma must be positive, got {self.gamma!r}")

    @property
    def is_licm(self) -> bool:
        """True when 0 < alpha <= 1 and 0 < alpha*gamma <= beta <= 1."""
        return self.alpha <= 1.0 and self.alpha * self.gamma - 1e-14 <= self.beta <= 1.0

    def shifted(self, k: int) -> "ParameterTriple":
        """The triple with beta replaced by beta - k."""
        return replace(self, beta=self.beta - k)

    def __str__(self):
        return f"(alpha={self.alpha:g}, beta={self.beta:g}, gamma={self.gamma:g})"


@dataclass(frozen=True)
class EvalResult:
    """A function value with the method that produced it.

    ``err_estimate`` is an a-posteriori estimate of the absolute error, not a
    guaranteed bound.
    """

    value: float
    method: Method
    err_estimate: float

    def __float__(self):
        return float(self.value)


def max_series_terms() -> int:
    env = os.environ.get("PRABHAKAR_MAX_TERMS")
    if env:
        return int(env)
    return DEFAULT_MAX_TERMS


def ml3_series(params: ParameterTriple, z: float, max_terms: int | None = None) -> EvalResult:
    """Evaluate E^gamma_{alpha,beta}(z) by truncating its power series.

    Terms (gamma)_k z^k / (k! Gamma(alpha k + beta)) are summed until two
    consecutive terms fall below machine epsilon relative to the partial sum;
    the returned value is the exactly rounded sum of the computed terms.
    The prefactor (gamma)_k z^k / k! is carried by a multiplicative
    recurrence; once it or Gamma(alpha k + beta) leaves the double range the
    term is assembled from logarithms instead.

    Raises
    ------
    NonConvergenceError
        If ``max_terms`` terms are summed without meeting the stopping rule.
    """
    a, b, g = params.alpha, params.beta, params.gamma
    z = float(z)
    cap = max_series_terms() if max_terms is None else int(max_terms)

    coef = 1.0          # (g)_k z^k / k!
    log_coef = 0.0      # log|coef|, kept in step for the overflow path
    coef_sign = 1.0
    total = 0.0
    terms = []
    biggest = 0.0
    quiet = 0
    log_z = math.log(abs(z)) if z != 0.0 else -math.inf
    z_sign = math.copysign(1.0, z)

    for k in range(cap + 1):
        arg = a * k + b
        if math.isfinite(coef) and arg < 170.0:
            term = coef * rgamma(arg)
        else:
            lg, sg = lgamma_abs(arg)
            term = 0.0 if sg == 0.0 or coef_sign == 0.0 else coef_sign * sg * math.exp(log_coef - lg)

        if k > 0 and arg > 1.0 and abs(term) <= EPS * abs(total):
            quiet += 1
            if quiet == 2:
                err = abs(term) + EPS * biggest
                return EvalResult(math.fsum(terms), Method.SERIES, err)
        else:
            quiet = 0
        total += term
        terms.append(term)
        biggest = max(biggest, abs(term))

        # advance (g)_k z^k / k! to k + 1
        ratio = (g + k) / (k + 1)
        coef *= ratio * z
        if z == 0.0:
            coef_sign = 0.0
        else:
            log_coef += math.log(ratio) + log_z
            coef_sign *= z_sign

    raise NonConvergenceError(
        f"series for {params} at z={z:g} not converged after {cap} terms"
    )


def laplace_transform(params: ParameterTriple, s: complex) -> complex:
    """s^(alpha*gamma - beta) / (s^alpha + 1)^gamma on principal branches.

    Raises
    ------
    DomainError
        If Re(s) <= 0.
    """
    s = complex(s)
    if s.real <= 0.0:
        raise DomainError(f"laplace_transform requires Re(s) > 0, got {s!r}")
    a, b, g = params.alpha, params.beta, params.gamma
    log_s = cmath.log(s)
    base = cmath.exp(a * log_s) + 1.0
    if base == 0:
        raise DomainError("s^alpha = -1 is a singular point of the transform")
    return cmath.exp((a * g - b) * log_s - g * cmath.log(base))


def log_transform(params: ParameterTriple, s: np.ndarray) -> np.ndarray:
    """Elementwise principal log of the Laplace transform; no domain checks."""
    a, b, g = params.alpha, params.beta, params.gamma
    log_s = np.log(s)
    return (a * g - b) * log_s - g * np.log1p(np.exp(a * log_s))


def eval_e_at_zero(params: ParameterTriple) -> float:
    """Limit of t^(beta-1) E(-t^alpha) as t -> 0+.

    Returns 0.0, a finite value, or a signed ``math.inf``.  For beta > 0 the
    k = 0 term dominates; for beta <= 0 leading terms may sit on Gamma poles
    and the first surviving term decides.
    """
    a, b, g = params.alpha, params.beta, params.gamma
    coef = 1.0
    for k in range(64):
        r = rgamma(a * k + b)
        if r != 0.0:
            power = a * k + b - 1.0
            lead = coef * r
            if abs(power) < 1e-14:
                return lead
            if power > 0.0:
                return 0.0
            return math.copysign(math.inf, lead)
        coef *= -(g + k) / (k + 1)
    return 0.0
