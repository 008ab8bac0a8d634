"""Cole-Cole, Davidson-Cole and Havriliak-Negami relaxation models.

All four kinds share the constraint beta = alpha*gamma, so the Laplace
transform of the response reduces to 1 / (1 + (s tau)^alpha)^gamma.  The
extended Havriliak-Negami kind admits 1 <= gamma < 1/alpha, where the
spectral density is still non-negative.
"""
from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .core import Method, ParameterTriple
from .errors import DomainError, InvalidModelError
from .evaluate import eval_e


class ModelKind(str, enum.Enum):
    COLE_COLE = "cole-cole"
    DAVIDSON_COLE = "davidson-cole"
    HAVRILIAK_NEGAMI = "havriliak-negami"
    EXTENDED_HN = "extended-hn"


def _admissible(kind: ModelKind, a: float, g: float) -> bool:
    if kind is ModelKind.COLE_COLE:
        return 0.0 < a < 1.0 and g == 1.0
    if kind is ModelKind.DAVIDSON_COLE:
        return a == 1.0 and 0.0 < g < 1.0
    if kind is ModelKind.HAVRILIAK_NEGAMI:
        return 0.0 < a < 1.0 and 0.0 < g < 1.0
    return 0.0 < a < 1.0 and 1.0 <= g < 1.0 / a


@dataclass(frozen=True)
class RelaxationModel:
    kind: ModelKind
    alpha: float
    gamma: float = 1.0
    tau: float = 1.0

    def __post_init__(self):
        kind = ModelKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if not self.tau > 0.0:
            raise InvalidModelError(f"tau must be positive, got {self.tau!r}")
        if not _admissible(kind, float(self.alpha), float(self.gamma)):
            raise InvalidModelError(
                f"{kind.value} does not admit alpha={self.alpha!r}, gamma={self.gamma!r}"
            )

    @classmethod
    def cole_cole(cls, alpha, tau=1.0):
        return cls(ModelKind.COLE_COLE, alpha, 1.0, tau)

    @classmethod
    def davidson_cole(cls, gamma, tau=1.0):
        return cls(ModelKind.DAVIDSON_COLE, 1.0, gamma, tau)

    @classmethod
    def havriliak_negami(cls, alpha, gamma, tau=1.0):
        return cls(ModelKind.HAVRILIAK_NEGAMI, alpha, gamma, tau)

    @classmethod
    def extended_hn(cls, alpha, gamma, tau=1.0):
        return cls(ModelKind.EXTENDED_HN, alpha, gamma, tau)


def to_triple(model: RelaxationModel) -> ParameterTriple:
    """The Prabhakar triple (alpha, alpha*gamma, gamma) of a model."""
    return ParameterTriple(model.alpha, model.alpha * model.gamma, model.gamma)


def response_function(model: RelaxationModel, t: float, method=Method.AUTO) -> float:
    """Relaxation response at time t, (1/tau) e(t/tau)."""
    return eval_e(to_triple(model), t / model.tau, method).value / model.tau


def hn_susceptibility(alpha: float, gamma: float, omega: float, tau: float = 1.0) -> complex:
    """1 / (1 + (-i omega tau)^alpha)^gamma on principal branches, any real omega."""
    if omega == 0.0:
        return complex(1.0, 0.0)
    w = cmath.exp(alpha * cmath.log(complex(0.0, -omega * tau)))
    return cmath.exp(-gamma * cmath.log(1.0 + w))


def susceptibility(model: RelaxationModel, omega: float) -> complex:
    """Complex susceptibility at angular frequency omega >= 0 with s = -i omega.

    With this sign convention the imaginary part is non-negative for
    omega > 0; the Debye case gives 1 / (1 - i omega tau).
    """
    if omega < 0.0:
        raise DomainError(f"omega must be non-negative, got {omega!r}")
    return hn_susceptibility(model.alpha, model.gamma, omega, model.tau)
