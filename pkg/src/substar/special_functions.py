"""Kummer's confluent hypergeometric function and the generalized Bessel u_p.

Both are 1F1-type series sum_n t_n z^n with a two-term ratio, so evaluation
shares one adaptive summation loop.  Parameters are real only.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import EvaluationFailure, PoleParameter
from .power_series import DEFAULT_ORDER, PowerSeries, ps_deriv, ps_mulz

POLE_TOL = 1e-12
SUM_RTOL = 1e-15
MAX_TERMS = 100_000


def _real(name, value):
    if isinstance(value, numbers.Complex) and not isinstance(value, numbers.Real):
        raise TypeError(f"{name} must be real, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite")
    return v


def _on_pole(x):
    return x <= POLE_TOL and abs(x - round(x)) <= POLE_TOL


@dataclass(frozen=True)
class KummerParams:
    a: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", _real("a", self.a))
        object.__setattr__(self, "c", _real("c", self.c))
        if _on_pole(self.c):
            raise PoleParameter(f"c = {self.c} is a nonpositive integer")

    def shifted(self, n: int = 1) -> "KummerParams":
        return KummerParams(self.a + n, self.c + n)


@dataclass(frozen=True)
class BesselParams:
    p: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("p", "b", "c"):
            object.__setattr__(self, name, _real(name, getattr(self, name)))
        if _on_pole(self.k):
            raise PoleParameter(f"k = p + (b+1)/2 = {self.k} is a nonpositive integer")

    @property
    def k(self) -> float:
        return self.p + (self.b + 1) / 2

    def shifted(self, n: int = 1) -> "BesselParams":
        return BesselParams(self.p + n, self.b, self.c)


def pochhammer(lam: float, n: int) -> float:
    """Rising factorial (lam)_n = lam (lam+1) ... (lam+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1.0
    for j in range(n):
        out *= lam + j
    return out


def _ratio_series(ratio, order):
    coeffs = np.empty(order + 1)
    coeffs[0] = 1.0
    for n in range(order):
        coeffs[n + 1] = coeffs[n] * ratio(n)
    return PowerSeries(coeffs)


def _adaptive_sum(ratio, z):
    """Sum 1 + sum_n t_n with t_{n+1} = t_n * ratio(n) * z.

    Stops once two consecutive terms fall below SUM_RTOL relative to the
    partial sum (two, because the Bessel series alternates).
    """
    z = np.asarray(z, dtype=complex)
    total = np.ones(z.shape, dtype=complex)
    term = np.ones(z.shape, dtype=complex)
    small_prev = np.zeros(z.shape, dtype=bool)
    n = 0
    while True:
        term = term * (ratio(n) * z)
        total = total + term
        n += 1
        small = np.abs(term) <= SUM_RTOL * np.abs(total)
        if np.all(small & small_prev):
            break
        small_prev = small
        if n >= MAX_TERMS:
            raise EvaluationFailure(f"series did not converge in {MAX_TERMS} terms")
    if not np.all(np.isfinite(total)):
        raise EvaluationFailure("non-finite series value")
    return total, n + 1


def _unwrap(value):
    return complex(value) if np.ndim(value) == 0 else value


def _kummer_ratio(params):
    a, c = params.a, params.c
    return lambda n: (a + n) / ((c + n) * (n + 1))


def _bessel_ratio(params):
    q, k = -params.c / 4, params.k
    return lambda n: q / ((k + n) * (n + 1))


def kummer_series(params: KummerParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficients (a)_n / ((c)_n n!)."""
    return _ratio_series(_kummer_ratio(params), order)


def kummer_sum(params: KummerParams, z):
    """Return (value, terms_used) of Phi(a; c; z)."""
    value, terms = _adaptive_sum(_kummer_ratio(params), z)
    return _unwrap(value), terms


def kummer_eval(params: KummerParams, z):
    return kummer_sum(params, z)[0]


def bessel_u_series(params: BesselParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Coefficients (-c/4)^n / ((k)_n n!)."""
    return _ratio_series(_bessel_ratio(params), order)


def bessel_u_sum(params: BesselParams, z):
    value, terms = _adaptive_sum(_bessel_ratio(params), z)
    return _unwrap(value), terms


def bessel_u_eval(params: BesselParams, z):
    return bessel_u_sum(params, z)[0]


def ode_residual_kummer(params: KummerParams, order: int = 50, series: PowerSeries | None = None) -> float:
    """max |coeff| of z y'' + (c - z) y' - a y over coefficients 0..N-2.

    ``series`` defaults to the Kummer series for ``params``; pass another
    one to test it against this parameter set's equation.
    """
    y = kummer_series(params, order) if series is None else series
    d1 = ps_deriv(y)
    d2 = ps_deriv(d1)
    lhs = ps_mulz(d2) + params.c * d1 - ps_mulz(d1) - params.a * y
    n = y.order - 1
    return float(np.max(np.abs(lhs.coeffs[:n])))


def ode_residual_bessel(params: BesselParams, order: int = 50, series: PowerSeries | None = None) -> float:
    """max |coeff| of 4 z^2 u'' + 4 k z u' + c z u over coefficients 0..N-2."""
    u = bessel_u_series(params, order) if series is None else series
    d1 = ps_deriv(u)
    d2 = ps_deriv(d1)
    lhs = 4 * ps_mulz(ps_mulz(d2)) + 4 * params.k * ps_mulz(d1) + params.c * ps_mulz(u)
    n = u.order - 1
    return float(np.max(np.abs(lhs.coeffs[:n])))


# -- closed forms of the worked examples, evaluated at high precision --------
# The expressions cancel catastrophically near z = 0 (z^-5 .. z^-19/2 prefactors),
# so they are evaluated with mpmath rather than in double precision.

def _mp_vectorize(fn, z, dps):
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape, dtype=complex)
    with mpmath.workdps(dps):
        for idx, zz in np.ndenumerate(z):
            if zz == 0:
                out[idx] = 1.0
                continue
            out[idx] = complex(fn(mpmath.mpc(zz.real, zz.imag)))
    return _unwrap(out)


def phi_2_6_closed(z, dps: int = 40):
    """Phi(2; 6; z) = 20 (z^3 + 6 z^2 + 18 z + 6 e^z (z - 4) + 24) / z^5."""
    def f(w):
        return 20 * (w**3 + 6 * w**2 + 18 * w + 6 * mpmath.exp(w) * (w - 4) + 24) / w**5
    return _mp_vectorize(f, z, dps)


def phi_5_10_closed(z, dps: int = 40):
    def f(w):
        poly = w**4 - 20 * w**3 + 180 * w**2 - 840 * w + 1680
        return 15120 / w**9 * (-w**4 - 20 * w**3 - 180 * w**2 + mpmath.exp(w) * poly - 840 * w - 1680)
    return _mp_vectorize(f, z, dps)


def u_2_2_6_closed(z, dps: int = 40):
    def f(w):
        s = mpmath.sqrt(6 * w)
        return -5 / (4 * mpmath.sqrt(6)) * ((2 * w - 1) * mpmath.sin(s) / w**2.5 + mpmath.sqrt(6) * mpmath.cos(s) / w**2)
    return _mp_vectorize(f, z, dps)


def u_7_6_10_closed(z, dps: int = 40):
    """u_{7,6,10}; the prefactor is the 8-digit decimal 26.189163/16."""
    def f(w):
        s = mpmath.sqrt(10 * w)
        p1 = 2000 * w**4 - 61600 * w**3 + 420420 * w**2 - 720720 * w + 153153
        p2 = 400 * w**4 - 39600 * w**3 + 540540 * w**2 - 1891890 * w + 1378377
        return mpmath.mpf("26.189163") / 16 * (
            9 * mpmath.sqrt(10) * mpmath.sin(s) / w**9.5 * p1 - 10 * mpmath.cos(s) / w**9 * p2
        )
    return _mp_vectorize(f, z, dps)
