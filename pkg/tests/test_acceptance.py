"""Acceptance criteria, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import math
import time

import numpy as np
import pytest

from substar import criteria, presets
from substar.power_series import PowerSeries, ps_div, ps_mul, ps_pow
from substar.regions import Region, car_margin
from substar.special_functions import (
    BesselParams,
    KummerParams,
    bessel_u_eval,
    kummer_eval,
    ode_residual_bessel,
    ode_residual_kummer,
    phi_2_6_closed,
    phi_5_10_closed,
    u_2_2_6_closed,
)
from substar.subordination import RationalMap, check_subordination, min_real_part
from substar.regions import polar_grid

RNG_SEED = 20240611


def _disc_points(n, rmax, seed):
    rng = np.random.default_rng(seed)
    r = rmax * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, n))


def _rel(a, b):
    return np.max(np.abs(a - b) / np.abs(b))


def test_criterion_01_special_function_oracles(criterion):
    criterion(1, "Kummer/Bessel evaluators match closed forms at 100 points, < 1 s")
    z = _disc_points(100, 0.95, RNG_SEED)
    # the closed forms are the oracle; only the evaluators are timed
    ref1, ref2, ref3 = phi_2_6_closed(z), phi_5_10_closed(z), u_2_2_6_closed(z)
    start = time.perf_counter()
    v1 = kummer_eval(KummerParams(2, 6), z)
    v2 = kummer_eval(KummerParams(5, 10), z)
    v3 = bessel_u_eval(BesselParams(2, 2, 6), z)
    elapsed = time.perf_counter() - start
    assert _rel(v1, ref1) <= 1e-9
    assert _rel(v2, ref2) <= 1e-9
    assert _rel(v3, ref3) <= 1e-8
    assert elapsed < 1.0


def test_criterion_02_ode_residuals(criterion):
    criterion(2, "ODE residuals <= 1e-12 at order 50")
    assert ode_residual_kummer(KummerParams(2, 6), 50) <= 1e-12
    assert ode_residual_kummer(KummerParams(5, 10), 50) <= 1e-12
    assert ode_residual_bessel(BesselParams(2, 2, 6), 50) <= 1e-12
    assert ode_residual_bessel(BesselParams(7, 6, 10), 50) <= 1e-12


def test_criterion_03_alpha_thresholds(criterion):
    criterion(3, "closed-form alpha thresholds 1/sqrt6, sqrt5/4, 3/5, 5/19")
    assert criteria.kummer_alpha_min(2, 6) == pytest.approx(1 / math.sqrt(6), abs=1e-12)
    assert criteria.kummer_alpha_min(5, 10) == pytest.approx(math.sqrt(5) / 4, abs=1e-12)
    assert criteria.bessel_alpha_min(2, 2, 6) == pytest.approx(3 / 5, abs=1e-12)
    assert criteria.bessel_alpha_min(7, 6, 10) == pytest.approx(5 / 19, abs=1e-12)


@pytest.mark.parametrize("name", ["phi1", "phi2", "u2", "u7"])
def test_criterion_04_sector_images(criterion, name):
    criterion(4, "sup |arg| on |z| = 0.999 within alpha_min * pi/2 (figures 2, 3)")
    make, alpha = presets.NAMED_INSTANCES[name]
    z = polar_grid([0.999], 2048)[0]
    sup_arg = float(np.max(np.abs(np.angle(make()(z)))))
    assert sup_arg <= alpha * math.pi / 2


def test_criterion_05_cardioid_images(criterion):
    criterion(5, "q1, q2 images of |z| = 0.999 inside the cardioid (figure 1)")
    z = polar_grid([0.999], 2048)[0]
    for q in (presets.q1(), presets.q2()):
        assert np.all(car_margin(q(z)) > 0)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.0])
def test_criterion_06_thm31_threshold(criterion, alpha):
    criterion(6, "cardioid threshold: brute bisection vs radical, 1.6947 at alpha = 1")
    res = criteria.thm31_min_beta(alpha)
    assert abs(res.brute - criteria.THM31_CONST / alpha) <= 1e-4
    if alpha == 1.0:
        assert abs(res.brute - 1.6947) <= 3e-4


def test_criterion_07_thm32a_sharpness(criterion):
    criterion(7, "alpha = 1 boundaries beta = 4 and -4/3 hold, 3.99 and -1.33 fail")
    assert criteria.thm32_check(1, 4)["holds_a"] is True
    assert criteria.thm32_check(1, -4 / 3)["holds_a"] is True
    assert criteria.thm32_check(1, 3.99)["holds_a"] is False
    assert criteria.thm32_check(1, -1.33)["holds_a"] is False


def test_criterion_08_algebraic_identities(criterion):
    criterion(8, "f(1) identity, closed form at x*, g >= 0 with g(1) = 0")
    for beta in (0, 0.5, 1, 5):
        assert abs(criteria.thm35_fx(1.0, beta) - 3 * (6 + beta) * (2 + 3 * beta) ** 3) <= 1e-9
    for alpha in (0.25, 0.5, 0.75):
        for beta in (0.5, 1, 2):
            xs = math.sqrt((1 + alpha) / 2)
            assert abs(criteria.thm32b_fx(xs, alpha, beta) - criteria.thm32b_closed_at_xstar(alpha, beta)) <= 1e-9
    x = np.linspace(0, 1, 1000)
    assert np.all(criteria.thm33_gx(x) >= 0)
    assert criteria.thm33_gx(1.0) == 0


def test_criterion_09_q_starlikeness(criterion):
    criterion(9, "Re of the Q-maps and of z Q'/Q positive for r <= 0.99")
    radii = np.linspace(0.05, 0.99, 20)
    for alpha in (0.3, 0.7, 1.0):
        zq = criteria.thm32_zQ_over_Q(alpha)
        assert min(min_real_part(zq, r, 1024) for r in radii) > 0
    for Q in (RationalMap([0, 1], [1, 0, -1]), criteria.thm33_Q(0.8)):
        assert min(min_real_part(Q, r, 1024, starlike=True) for r in radii) > 0


def _random_series(rng, order=16, c0=None):
    c = rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)
    c /= np.arange(1, order + 2)
    if c0 is not None:
        c[0] = c0
    return PowerSeries(c)


def _random_divisor(rng, order=16):
    """|b(0)| in [0.5, 2] and tail mass sum |b_k| <= |b(0)|/2, so b has no zeros in the disc."""
    b = _random_series(rng, order)
    b0 = rng.uniform(0.5, 2) * np.exp(2j * np.pi * rng.uniform())
    tail = b.coeffs[1:] * (abs(b0) / 2) * rng.uniform() / np.sum(np.abs(b.coeffs[1:]))
    return PowerSeries(np.concatenate([[b0], tail]))


def _random_p(rng):
    """A real-coefficient p with p(0) = 1 and small higher coefficients."""
    c = rng.uniform(-1, 1, 9) * 0.4 ** np.arange(9)
    c[0] = 1.0
    return RationalMap(c, name="random p")


def test_criterion_10_property_suites(criterion):
    criterion(10, "randomized property suites, >= 100 instances each")
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(100):
        a, b, c = (_random_series(rng) for _ in range(3))
        assert np.max(np.abs((ps_mul(ps_mul(a, b), c) - ps_mul(a, ps_mul(b, c))).coeffs)) <= 1e-12
        assert np.max(np.abs((ps_mul(a, b) - ps_mul(b, a)).coeffs)) <= 1e-12
        assert np.max(np.abs((ps_mul(a, b + c) - (ps_mul(a, b) + ps_mul(a, c))).coeffs)) <= 1e-12

        d = _random_divisor(rng)
        assert np.max(np.abs((ps_mul(ps_div(a, d), d) - a).coeffs)) <= 1e-12

        u = _random_series(rng, c0=1.0)
        s, t = rng.uniform(-2, 2, 2)
        lhs = ps_pow(u, s + t)
        assert np.max(np.abs((lhs - ps_mul(ps_pow(u, s), ps_pow(u, t))).coeffs)) <= 1e-10 * max(1, np.max(np.abs(lhs.coeffs)))

    targets = [Region.half_plane(), Region.sector(0.9), Region.cardioid()]
    for i in range(100):
        p = _random_p(rng)
        rep = check_subordination(p, targets[i % 3], radii=(0.5, 0.7, 0.9, 0.99), m=256)
        assert all(b <= a + 1e-9 for a, b in zip(rep.per_radius, rep.per_radius[1:]))
        z = polar_grid([0.95], 256)[0]
        margins = np.asarray(targets[i % 3].margin(p(z)))
        upper, lower = margins[1:128], margins[:128:-1]
        assert np.max(np.abs(upper - lower)) <= 1e-12

    for _ in range(1000):
        a = rng.uniform(-5, 5)
        c = rng.choice([-1, 1]) * rng.uniform(2.05, 12) + 1
        alpha = rng.uniform(0.01, 1)
        assert criteria.discriminant_check_kummer(a, c, alpha) == (alpha > criteria.kummer_alpha_min(a, c))
        p, b = rng.uniform(0, 8), rng.uniform(-1, 6)
        cb = rng.uniform(-10, 10)
        if p + (b + 1) / 2 > 1:
            assert criteria.discriminant_check_bessel(p, b, cb, alpha) == (alpha > criteria.bessel_alpha_min(p, b, cb))
