"""Truncated Taylor series about 0 with complex double coefficients.

A series of order N stores c_0..c_N.  Binary operations truncate to the
smaller order.  The array kernels (names starting with an underscore) work
along axis 0 and broadcast over trailing axes, so the same code handles a
single global series and a batch of local jets at many sample points.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NonUnitBase, ZeroConstantTerm

DEFAULT_ORDER = 64
ZERO_EPS = 1e-13


# -- array kernels -----------------------------------------------------------

def _mul(a, b):
    n = min(len(a), len(b))
    out = np.zeros((n,) + np.broadcast_shapes(a.shape[1:], b.shape[1:]), dtype=complex)
    for k in range(n):
        out[k] = np.sum(a[: k + 1] * b[k::-1], axis=0)
    return out


def _check_const(b, what):
    if np.any(np.abs(b[0]) < ZERO_EPS):
        raise ZeroConstantTerm(f"{what}: constant term below {ZERO_EPS:g}")


def _div(a, b, what="divisor"):
    _check_const(b, what)
    n = min(len(a), len(b))
    q = np.zeros((n,) + np.broadcast_shapes(a.shape[1:], b.shape[1:]), dtype=complex)
    b0 = b[0]
    for k in range(n):
        acc = a[k] - np.sum(b[1 : k + 1] * q[k - 1 :: -1][:k], axis=0) if k else a[0]
        q[k] = acc / b0
    return q


def _deriv(a):
    if len(a) == 1:
        return np.zeros_like(a)
    k = np.arange(1, len(a)).reshape((-1,) + (1,) * (a.ndim - 1))
    return a[1:] * k


def _exp(a):
    n = len(a)
    da = _deriv(a)
    e = np.zeros_like(a, dtype=complex)
    e[0] = np.exp(a[0])
    # k e_k = sum_{j=1..k} j a_j e_{k-j}
    for k in range(1, n):
        e[k] = np.sum(da[:k] * e[k - 1 :: -1][:k], axis=0) / k
    return e


def _log(a, what="argument of log"):
    _check_const(a, what)
    n = len(a)
    # (log a)' = a'/a, integrated termwise
    ratio = _div(_deriv(a), a[: n - 1] if n > 1 else a, what)
    out = np.zeros_like(a, dtype=complex)
    out[0] = np.log(a[0])
    if n > 1:
        k = np.arange(1, n).reshape((-1,) + (1,) * (a.ndim - 1))
        out[1:] = ratio[: n - 1] / k
    return out


def _pow_unit(a, alpha):
    """a**alpha for a with a_0 == 1 by the recurrence a b' = alpha a' b."""
    n = len(a)
    b = np.zeros_like(a, dtype=complex)
    b[0] = 1.0
    for k in range(1, n):
        j = np.arange(1, k + 1).reshape((-1,) + (1,) * (a.ndim - 1))
        b[k] = np.sum(((alpha + 1) * j - k) * a[1 : k + 1] * b[k - 1 :: -1][:k], axis=0) / k
    return b


def _pow(a, alpha, what="base of power"):
    """Principal power for an arbitrary nonzero constant term."""
    _check_const(a, what)
    a0 = a[0]
    return _pow_unit(a / a0, alpha) * a0**alpha


def _horner(a, z):
    z = np.asarray(z, dtype=complex)
    acc = np.zeros(z.shape, dtype=complex)
    for c in a[::-1]:
        acc = acc * z + c
    return acc


def _taylor_shift(a, z0, order):
    """Local Taylor coefficients of the polynomial ``a`` at the points z0.

    Row k of the result is f^(k)(z0)/k! for k = 0..order.
    """
    z0 = np.asarray(z0, dtype=complex)
    n = len(a)
    out = np.zeros((order + 1,) + z0.shape, dtype=complex)
    d = np.asarray(a, dtype=complex)
    for k in range(order + 1):
        if k >= n:
            break
        out[k] = _horner(d, z0)
        # next row: (d/dz) / (k+1)
        d = d[1:] * np.arange(1, len(d)) / (k + 1)
    return out


# -- PowerSeries -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Immutable truncated series c_0 + c_1 z + ... + c_N z^N."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> "PowerSeries":
        c = np.array(list(coeffs), dtype=complex)
        if order is not None:
            c = np.concatenate([c, np.zeros(max(0, order + 1 - len(c)), dtype=complex)])[: order + 1]
        return cls(c)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """The series of z."""
        c = np.zeros(order + 1, dtype=complex)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1])

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={np.array2string(self.coeffs[:6], precision=4)}...)"

    # arithmetic sugar; each maps onto the ps_* functions
    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other):
        return ps_add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ps_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return ps_add(self._coerce(other), -self)

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return PowerSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return ps_div(self, other)
        return PowerSeries(self.coeffs / other)

    def __rtruediv__(self, other):
        return ps_div(self._coerce(other), self)

    def __pow__(self, alpha):
        return ps_pow(self, alpha)

    def __call__(self, z):
        return ps_eval(self, z)

    def to_json(self) -> str:
        return json.dumps(series_to_pairs(self))


def series_to_pairs(a: PowerSeries) -> list[list[float]]:
    return [[float(c.real), float(c.imag)] for c in a.coeffs]


def series_from_pairs(data) -> PowerSeries:
    """Parse the JSON layout: a list of [re, im] pairs (bare reals also accepted)."""
    coeffs = []
    for item in data:
        if isinstance(item, (int, float)):
            coeffs.append(complex(item))
        elif len(item) == 2:
            coeffs.append(complex(float(item[0]), float(item[1])))
        else:
            raise ValueError(f"coefficient entry must be [re, im], got {item!r}")
    return PowerSeries(coeffs)


def load_series(path) -> PowerSeries:
    with open(path) as fh:
        return series_from_pairs(json.load(fh))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(len(a), len(b))
    return PowerSeries(a.coeffs[:n] + b.coeffs[:n])


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(len(a), len(b))
    return PowerSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Solve q*b = a coefficient by coefficient; needs |b(0)| >= 1e-13."""
    return PowerSeries(_div(a.coeffs, b.coeffs))


def ps_deriv(a: PowerSeries) -> PowerSeries:
    """Termwise derivative; the result has order N-1 (order 0 stays 0)."""
    return PowerSeries(_deriv(a.coeffs))


def ps_mulz(a: PowerSeries) -> PowerSeries:
    """z*a, exact, order N+1."""
    return PowerSeries(np.concatenate([[0.0], a.coeffs]))


def ps_divz(a: PowerSeries) -> PowerSeries:
    """a/z for a series with a(0) == 0; order N-1."""
    if abs(a.coeffs[0]) >= ZERO_EPS:
        raise ValueError("ps_divz needs a vanishing constant term")
    if len(a) == 1:
        return PowerSeries([0.0])
    return PowerSeries(a.coeffs[1:])


def ps_log(a: PowerSeries) -> PowerSeries:
    """Principal log(a(0)) plus the integral of a'/a."""
    return PowerSeries(_log(a.coeffs))


def ps_exp(a: PowerSeries) -> PowerSeries:
    return PowerSeries(_exp(a.coeffs))


def ps_pow(a: PowerSeries, alpha: float) -> PowerSeries:
    """a**alpha on the branch with value 1 at z = 0.  Requires a(0) == 1."""
    if abs(a.coeffs[0] - 1.0) > ZERO_EPS:
        if abs(a.coeffs[0]) < ZERO_EPS:
            raise ZeroConstantTerm("ps_pow: constant term is zero")
        raise NonUnitBase(f"ps_pow needs a(0) == 1, got {a.coeffs[0]!r}")
    return PowerSeries(_pow_unit(a.coeffs, alpha))


def ps_eval(a: PowerSeries, z):
    """Horner evaluation; scalar in, scalar out, arrays broadcast."""
    out = _horner(a.coeffs, z)
    return complex(out) if out.ndim == 0 else out


def tail_bound(a: PowerSeries, r: float) -> float:
    """Crude truncation indicator |c_N| r^N N used by the subordination guard."""
    n = a.order
    if n == 0:
        return 0.0
    return float(abs(a.coeffs[-1]) * r**n * n)


def geometric(order: int = DEFAULT_ORDER) -> PowerSeries:
    return PowerSeries(np.ones(order + 1))


def exponential(order: int = DEFAULT_ORDER) -> PowerSeries:
    return PowerSeries([1.0 / math.factorial(k) for k in range(order + 1)])
