"""Acceptance criteria, each run at its stated tolerance and runtime budget.

Every test prints one line ``PASS``/``FAIL`` with the measured quantity, so
``pytest -s tests/test_acceptance.py`` doubles as a report.
"""
import math
import time

import numpy as np
from scipy import integrate

from prabhakar import (InvalidModelError, Method, ParameterTriple, RelaxationModel, build_expansion,
                       derivative, eval_e, eval_e_at_zero, eval_e_ilt, eval_e_spectral,
                       eval_expansion, laplace_transform, leading_term, spectral_normalization,
                       theta, to_triple)
from prabhakar.spectral import scan_sign

P = ParameterTriple


def report(number, title, ok, detail, elapsed, budget):
    ok = ok and elapsed < budget
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} | {detail} | "
          f"{elapsed:.2f} s (budget {budget:g} s)")
    assert ok, detail


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_01_exponential_reduction():
    p = P(1, 1, 1)
    ts = np.geomspace(1e-3, 30, 200)
    with Timer() as clock:
        worst = {}
        for method in (Method.SERIES, Method.ILT):
            worst[method] = max(abs(eval_e(p, t, method).value - math.exp(-t)) for t in ts)
    ok = all(v <= 1e-13 for v in worst.values())
    detail = ", ".join(f"max|{m.value} - e^-t| = {v:.2e}" for m, v in worst.items())
    report(1, "exponential reduction", ok, detail, clock.elapsed, 1.0)


def test_criterion_02_cross_method_agreement():
    with Timer() as clock:
        series_gap, spectral_gap = 0.0, 0.0
        for triple in [(0.5, 0.9, 1.6), (0.7, 0.9, 1.1)]:
            p = P(*triple)
            for t in np.linspace(0.1, 2, 50):
                ilt = eval_e(p, t, Method.ILT).value
                series_gap = max(series_gap, abs(eval_e(p, t, Method.SERIES).value - ilt))
            for t in np.linspace(0.1, 10, 50):
                ilt = eval_e(p, t, Method.ILT).value
                spectral_gap = max(spectral_gap, abs(eval_e_spectral(p, t, 1e-10).value - ilt))
    ok = series_gap <= 1e-11 and spectral_gap <= 1e-10
    report(2, "cross-method agreement", ok,
           f"max|series - ilt| = {series_gap:.2e}, max|spectral - ilt| = {spectral_gap:.2e}",
           clock.elapsed, 30.0)


def test_criterion_03_hard_singularity():
    p = P(0.5, 0.97, 1.6)
    with Timer() as clock:
        gap = max(abs(eval_e_spectral(p, t, 1e-8).value - eval_e_ilt(p, t).value) for t in (0.5, 1.0, 5.0))
    report(3, "singularity strength 0.17", gap <= 1e-7, f"max|spectral - ilt| = {gap:.2e}",
           clock.elapsed, 10.0)


def test_criterion_04_cm_sign_suite():
    p = P(0.70, 0.91, 1.30)
    ts = np.geomspace(1e-2, 1e3, 100)
    with Timer() as clock:
        worst = min((-1) ** k * derivative(p, t, k).value for k in range(6) for t in ts)
    report(4, "CM sign pattern k = 0..5", worst >= -1e-12, f"min (-1)^k e^(k) = {worst:.3e}",
           clock.elapsed, 60.0)


def test_criterion_05_cm_violation_detection():
    with Timer() as clock:
        below = P(0.70, 0.89, 1.30)
        neg_below = min(eval_e(below, t).value for t in np.geomspace(1, 100, 400))
        near = P(0.700, 0.905, 1.300)
        start = eval_e_at_zero(near)
        early = min(eval_e(near, t).value for t in np.geomspace(1e-3, 10, 400))
        late = [(t, eval_e(near, t).value) for t in np.geomspace(10, 1e4, 400)]
        t_neg = next((t for t, v in late if v < 0.0), None)
    ok = neg_below < 0.0 and start > 0.0 and early > 0.0 and t_neg is not None
    report(5, "CM violation detection", ok,
           f"beta=0.89 min on [1,100] = {neg_below:.3e}; beta=0.905 min on (0,10] = {early:.3e}, "
           f"first negative t = {t_neg}", clock.elapsed, 30.0)


def test_criterion_06_spectral_non_negativity():
    with Timer() as clock:
        worst = math.inf
        for alpha in (0.5, 0.75):
            gammas = [0.25, 0.5, 0.75, 1.0] + list(np.arange(1.25, 0.99 / alpha, 0.25)) + [0.99 / alpha]
            for g in gammas:
                worst = min(worst, scan_sign(P(alpha, alpha * g, g), 1e-3, 1e3, 2000).min_value)
    report(6, "spectral non-negativity", worst >= -1e-14, f"min K = {worst:.3e}", clock.elapsed, 10.0)


def test_criterion_07_theta_bounds():
    with Timer() as clock:
        ok = True
        gaps = []
        for alpha in (0.25, 0.5, 0.75):
            th = theta(alpha, np.geomspace(1e-4, 1e4, 2000))
            ok &= bool(np.all(np.diff(th) >= 0.0) and np.all(th >= 0.0)
                       and np.all(th <= alpha * math.pi + 1e-12))
            gaps.append(abs(theta(alpha, 1e8) - alpha * math.pi))
    detail = (f"monotone and bounded: {ok}; |theta(1e8) - alpha pi| for alpha 0.25, 0.5, 0.75 = "
              f"{[f'{g:.1e}' for g in gaps]}")
    report(7, "theta bounds", ok and max(gaps) <= 1e-3, detail, clock.elapsed, 1.0)


def test_criterion_08_asymptotics():
    triples = [(0.5, 0.9, 1.6), (0.75, 0.9, 1.2), (0.7, 0.89, 1.3)]
    with Timer() as clock:
        rel100, rel1000, lead = [], [], []
        for triple in triples:
            p = P(*triple)
            exp3 = build_expansion(p, 3)
            for t, sink in ((100.0, rel100), (1e3, rel1000)):
                v = eval_e_ilt(p, t).value
                sink.append(abs(eval_expansion(exp3, t) - v) / abs(v))
            v = eval_e_ilt(p, 1e3).value
            if p.alpha * p.gamma <= p.beta + 1e-14:
                dominant = leading_term(p, 1e3)
            else:
                dominant = eval_expansion(build_expansion(p, 1), 1e3)
            lead.append(abs(dominant / v - 1.0))
    ok = max(rel100) <= 1e-6 and max(rel1000) <= 1e-8 and max(lead) <= 2e-2
    detail = (f"3-term rel err at t=100 {[f'{x:.1e}' for x in rel100]}, at t=1e3 "
              f"{[f'{x:.1e}' for x in rel1000]}, |lead/ilt - 1| at 1e3 {[f'{x:.1e}' for x in lead]}")
    report(8, "asymptotic expansion", ok, detail, clock.elapsed, 10.0)


def test_criterion_09_spectral_normalization():
    with Timer() as clock:
        gaps = [abs(spectral_normalization(P(*tr)) - 1.0) for tr in [(0.5, 1, 1), (0.75, 1, 1.2), (0.5, 1, 1.9)]]
    report(9, "spectral normalization", max(gaps) <= 1e-9, f"max|mass - 1| = {max(gaps):.2e}",
           clock.elapsed, 10.0)


def _forward(p, s):
    # independent adaptive quadrature; t = u^(1/beta) absorbs t^(beta-1) on [0, 1]
    b = p.beta

    def head(u, part):
        t = u ** (1.0 / b)
        return getattr(eval_e(p, t).value * t ** (1.0 - b) / b * np.exp(-s * t), part)

    def tail(t, part):
        return getattr(eval_e(p, t).value * np.exp(-s * t), part)

    parts = []
    for part in ("real", "imag"):
        h = integrate.quad(head, 0.0, 1.0, args=(part,), epsabs=1e-12, epsrel=1e-12, limit=200)[0]
        tl = integrate.quad(tail, 1.0, 40.0, args=(part,), epsabs=1e-12, epsrel=1e-12, limit=200)[0]
        parts.append(h + tl)
    return complex(*parts)


def test_criterion_10_forward_laplace():
    p = P(0.7, 0.9, 1.1)
    with Timer() as clock:
        gap = max(abs(_forward(p, s) - laplace_transform(p, s)) for s in (2.0, 3 + 1j))
    report(10, "forward Laplace consistency", gap <= 1e-8, f"max|quad - F(s)| = {gap:.2e}",
           clock.elapsed, 30.0)


def _constructs(kind, alpha, gamma):
    try:
        to_triple(RelaxationModel(kind, alpha, gamma))
        return True
    except InvalidModelError:
        return False


def _declared(kind, a, g):
    return {
        "cole-cole": 0 < a < 1 and g == 1,
        "davidson-cole": a == 1 and 0 < g < 1,
        "havriliak-negami": 0 < a < 1 and 0 < g < 1,
        "extended-hn": 0 < a < 1 and 1 <= g < 1 / a,
    }[kind]


def test_criterion_11_scheme_validity():
    alphas = [-0.1, 0.0, 0.25, 0.5, 0.75, 0.999, 1.0, 1.2]
    gammas = [-0.5, 0.0, 0.3, 0.999, 1.0, 1.3, 4 / 3 - 1e-12, 4 / 3, 1.4, 1.99, 2.0, 4.0]
    with Timer() as clock:
        mismatches = [(k, a, g) for k in ("cole-cole", "davidson-cole", "havriliak-negami", "extended-hn")
                      for a in alphas for g in gammas if _constructs(k, a, g) != _declared(k, a, g)]
        boundary = _constructs("extended-hn", 0.75, 4 / 3 - 1e-12) and not _constructs("extended-hn", 0.75, 4 / 3)
    report(11, "scheme validity", not mismatches and boundary,
           f"{len(mismatches)} mismatches, extended-hn 0.75 accepts gamma < 4/3 and rejects 4/3: {boundary}",
           clock.elapsed, 1.0)
