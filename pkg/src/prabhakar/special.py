"""Gamma-family primitives in double precision.

Gamma uses a g=7, n=9 Lanczos approximation on [1/2, 10), a Stirling series
above, and the reflection formula below 1/2.  The reciprocal Gamma is total and vanishes exactly at the poles.
"""
from __future__ import annotations

import math

from .errors import PoleError

__all__ = ["gamma", "rgamma", "lgamma_abs", "pochhammer", "binom_neg_gamma", "sinpi"]

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
# B_{2k} / (2k (2k - 1)), k = 1..8
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
# Largest argument with a finite double Gamma value.
_GAMMA_XMAX = 171.61447887182298


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def sinpi(x: float) -> float:
    """sin(pi*x) with exact argument reduction; exactly 0 at integers."""
    n = round(x)
    r = x - n  # exact in binary floating point
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def _lanczos_series(x: float) -> float:
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    return acc


def _stirling(x: float) -> float:
    # x >= 10; the correction series is below 1e-17 after these terms.
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING_COEF):
        corr = corr * inv2 + c
    half = x ** (0.5 * (x - 0.5))
    return _SQRT_2PI * half * (half * math.exp(-x)) * math.exp(corr * inv)


def _gamma_right(x: float) -> float:
    # x >= 0.5.  Powers are split in halves so that base**(x - 0.5) never
    # overflows before the exp(-base) factor is applied.
    if x >= 10.0:
        return _stirling(x)
    z = x - 1.0
    base = z + _LANCZOS_G + 0.5
    half = base ** (0.5 * (z + 0.5))
    return _SQRT_2PI * _lanczos_series(x) * half * (half * math.exp(-base))


def _gamma_reflected(x: float) -> float:
    # Gamma(1 - x) for x < 0.5.  Below -1/2, 1 - x would round; -x is exact.
    if x < -0.5:
        return -x * _gamma_right(-x)
    return _gamma_right(1.0 - x)


def gamma(x: float) -> float:
    """Real Gamma function.

    Raises
    ------
    PoleError
        At non-positive integers.
    OverflowError
        When the result exceeds the double range.
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    if x > _GAMMA_XMAX:
        raise OverflowError(f"Gamma({x!r}) overflows")
    if x == math.floor(x) and x <= 23.0:
        return float(math.factorial(int(x) - 1))
    if x >= 0.5:
        return _gamma_right(x)
    s = sinpi(x)
    y = 1.0 - x
    if y > _GAMMA_XMAX:
        # Gamma(1 - x) overflows; the quotient underflows towards zero.
        return math.copysign(math.exp(math.log(math.pi) - math.log(abs(s)) - math.lgamma(y)), s)
    return math.pi / (s * _gamma_reflected(x))


def rgamma(x: float) -> float:
    """Reciprocal Gamma 1/Gamma(x), exactly 0.0 at non-positive integers."""
    x = float(x)
    if math.isnan(x):
        return math.nan
    if _is_nonpositive_integer(x):
        return 0.0
    if x >= 0.5:
        if x > _GAMMA_XMAX:
            return math.exp(-math.lgamma(x))
        return 1.0 / gamma(x)
    y = 1.0 - x
    s = sinpi(x)
    if y > _GAMMA_XMAX:
        log_mag = math.lgamma(y) + math.log(abs(s)) - math.log(math.pi)
        try:
            return math.copysign(math.exp(log_mag), s)
        except OverflowError:
            return math.copysign(math.inf, s)
    return s * _gamma_reflected(x) / math.pi


def lgamma_abs(x: float) -> tuple[float, float]:
    """Return (log|Gamma(x)|, sign(Gamma(x))); sign is 0.0 at the poles."""
    x = float(x)
    if _is_nonpositive_integer(x):
        return math.inf, 0.0
    if x > 0.0:
        return math.lgamma(x), 1.0
    # Gamma(x) = pi / (sin(pi x) Gamma(1 - x)) with Gamma(1 - x) > 0.
    return math.lgamma(x), math.copysign(1.0, sinpi(x))


def pochhammer(g: float, k: int) -> float:
    """Rising factorial (g)_k = g (g+1) ... (g+k-1) by forward recurrence."""
    if k < 0:
        raise ValueError("k must be non-negative")
    acc = 1.0
    for j in range(k):
        acc *= g + j
        if math.isinf(acc):
            raise OverflowError(f"pochhammer({g}, {k}) overflows")
    return acc


def binom_neg_gamma(g: float, k: int) -> float:
    """Binomial coefficient C(-g, k) = (-1)^k (g)_k / k!.

    Built by c_{j+1} = c_j (-g - j) / (j + 1), which keeps the magnitudes
    moderate long after (g)_k or k! alone would overflow.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    c = 1.0
    for j in range(k):
        c *= (-g - j) / (j + 1)
        if math.isinf(c):
            raise OverflowError(f"binomial(-{g}, {k}) overflows")
    return c
