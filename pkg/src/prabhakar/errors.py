"""Exception hierarchy shared by all evaluators."""


class PrabhakarError(Exception):
    """Base class for errors raised by this package."""


class DomainError(PrabhakarError, ValueError):
    """Argument or parameter outside the domain of an operation."""


class PoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class NonConvergenceError(PrabhakarError, ArithmeticError):
    """Series truncation did not meet its stopping rule within the term cap."""


class QuadratureFailure(PrabhakarError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance."""


class InvalidModelError(PrabhakarError, ValueError):
    """Relaxation model parameters outside the admissible ranges of its kind."""
