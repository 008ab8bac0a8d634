import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from prabhakar.errors import PoleError
from prabhakar.special import binom_neg_gamma, gamma, pochhammer, rgamma

SQRT_PI = math.sqrt(math.pi)


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (0.5, SQRT_PI), (-0.5, -2 * SQRT_PI), (5.0, 24.0)])
def test_gamma_values(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(172.0)


def test_gamma_accuracy_against_mpmath():
    xs = np.concatenate([np.linspace(0.013, 170.0, 3001), -np.linspace(0.017, 169.9, 1501)])
    worst = 0.0
    with mp.workdps(30):
        for x in xs:
            ref = mp.gamma(mp.mpf(float(x)))
            worst = max(worst, float(abs((gamma(x) - ref) / ref)))
    assert worst <= 1e-13


def test_recurrence_on_grid():
    for x in np.linspace(0.1, 50.0, 500):
        assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-13)


@pytest.mark.parametrize("x, expected", [(-1.0, 0.0), (1.0, 1.0), (-0.5, -0.28209479177387814)])
def test_rgamma_values(x, expected):
    assert rgamma(x) == pytest.approx(expected, rel=1e-14, abs=0.0)


def test_rgamma_exact_zero_at_poles():
    for n in range(0, 60):
        assert rgamma(-float(n)) == 0.0


def test_rgamma_total_at_extremes():
    assert 0.0 <= rgamma(200.0) < 1e-300
    assert math.isinf(rgamma(-200.5))


@pytest.mark.parametrize("g, k, expected", [(1.3, 0, 1.0), (2.0, 3, 24.0), (0.5, 2, 0.75)])
def test_pochhammer(g, k, expected):
    assert pochhammer(g, k) == expected


def test_pochhammer_overflow():
    with pytest.raises(OverflowError):
        pochhammer(10.0, 400)


@pytest.mark.parametrize("g, k, expected", [(1.0, 2, 1.0), (1.6, 1, -1.6), (0.5, 2, 0.375)])
def test_binom_neg_gamma(g, k, expected):
    assert binom_neg_gamma(g, k) == pytest.approx(expected, rel=1e-15)


@given(st.floats(0.05, 20.0), st.integers(0, 120))
def test_pochhammer_gamma_identity(g, k):
    if g + k >= 170:
        return
    assert pochhammer(g, k) * rgamma(g + k) * gamma(g) == pytest.approx(1.0, rel=1e-12)


@given(st.floats(0.05, 5.0), st.integers(0, 50))
def test_binomial_sign_and_pochhammer(g, k):
    c = binom_neg_gamma(g, k)
    assert math.copysign(1.0, c) == (-1.0) ** k
    assert c == pytest.approx((-1) ** k * pochhammer(g, k) / math.factorial(k), rel=1e-13)
