"""Large-t power-law expansion of e(t).

Expanding (s^alpha + 1)^-gamma in powers of s^alpha near s = 0 and inverting
term by term with s^nu <-> t^(-nu-1) / Gamma(-nu) gives

    e(t) ~ sum_k C(-gamma, k) t^(beta - alpha*gamma - alpha*k - 1) / Gamma(beta - alpha*gamma - alpha*k)

When alpha*gamma = beta the k = 0 term inverts to a delta at t = 0 and is
dropped, so the sum starts at k = 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import ParameterTriple
from .errors import DomainError
from .special import binom_neg_gamma, rgamma

DEGENERACY_TOL = 1e-14
DEFAULT_TERMS = 3


class Regime(str, enum.Enum):
    GENERAL = "general"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class AsymptoticExpansion:
    triple: ParameterTriple
    coefficients: tuple  # ((power, coeff), ...) with strictly decreasing powers
    regime: Regime

    @property
    def leading_power(self) -> float:
        return self.coefficients[0][0]


def regime_of(params: ParameterTriple) -> Regime:
    if abs(params.alpha * params.gamma - params.beta) < DEGENERACY_TOL:
        return Regime.DEGENERATE
    return Regime.GENERAL


def build_expansion(params: ParameterTriple, n_terms: int = DEFAULT_TERMS) -> AsymptoticExpansion:
    """First ``n_terms`` terms of the expansion; Gamma-pole terms are kept as 0.0."""
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    a, b, g = params.alpha, params.beta, params.gamma
    regime = regime_of(params)
    if regime is Regime.DEGENERATE:
        ks = range(1, n_terms + 1)
        shift = 0.0
    else:
        ks = range(n_terms)
        shift = b - a * g
    coeffs = []
    for k in ks:
        nu = shift - a * k
        coeffs.append((nu - 1.0, binom_neg_gamma(g, k) * rgamma(nu)))
    return AsymptoticExpansion(params, tuple(coeffs), regime)


def eval_expansion(expansion: AsymptoticExpansion, t: float) -> float:
    """Partial sum of the stored terms at t > 0."""
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    return math.fsum(c * t ** p for p, c in expansion.coefficients)


def truncation_error(params: ParameterTriple, n_terms: int, t: float) -> float:
    """Magnitude of the first omitted term, a rough error indicator."""
    p, c = build_expansion(params, n_terms + 1).coefficients[-1]
    return abs(c) * t ** p


def leading_term(params: ParameterTriple, t: float) -> float:
    """Dominant large-t behaviour.

    t^(beta - alpha*gamma - 1) / Gamma(beta - alpha*gamma) for alpha*gamma < beta,
    -gamma t^(-alpha - 1) / Gamma(-alpha) for alpha*gamma = beta.

    Raises
    ------
    DomainError
        For alpha*gamma > beta, where no single closed form is given; the
        full expansion from :func:`build_expansion` still applies.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    a, b, g = params.alpha, params.beta, params.gamma
    if regime_of(params) is Regime.DEGENERATE:
        return -g * t ** (-a - 1.0) * rgamma(-a)
    if a * g > b:
        raise DomainError(f"no leading-term formula for alpha*gamma > beta {params}")
    return t ** (b - a * g - 1.0) * rgamma(b - a * g)
