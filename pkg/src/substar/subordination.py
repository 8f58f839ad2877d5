"""Analytic maps on the disc, the composite transforms built from them, and
sampling-based subordination evidence.

Every map can produce (a) its Maclaurin series and (b) local Taylor jets
f^(k)(z0)/k! at arrays of points.  Closed forms evaluate transforms through
jets at the sample points, so no global truncation error enters; series maps
go through global series arithmetic and carry a truncation guard.

A positive ``min_margin`` in a report is evidence, not a proof: the sampled
image of a few circles stayed inside the target.  A negative margin is a
concrete point where the conclusion fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import power_series as ps
from .errors import EvaluationFailure, ZeroConstantTerm, ZeroOnCircle
from .power_series import DEFAULT_ORDER, PowerSeries
from .regions import Region, polar_grid
from .special_functions import (
    BesselParams,
    KummerParams,
    bessel_u_eval,
    bessel_u_series,
    kummer_eval,
    kummer_series,
)

DEFAULT_RADII = (0.9, 0.99, 0.999)
DEFAULT_SAMPLES = 2048
GUARD_FRACTION = 0.01


def _point_jet(z, order):
    """Jet of the identity map at z: [z, 1, 0, ...]."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros((order + 1,) + z.shape, dtype=complex)
    out[0] = z
    if order >= 1:
        out[1] = 1.0
    return out


class AnalyticMap:
    """A function on the unit disc.  Subclasses implement ``jet`` and ``series``."""

    name = "map"
    route = "closed-form"

    def jet(self, z, order: int):
        raise NotImplementedError

    def series(self, order: int = DEFAULT_ORDER) -> PowerSeries:
        raise NotImplementedError

    def __call__(self, z):
        out = self.jet(z, 0)[0]
        return complex(out) if np.ndim(out) == 0 else out

    def derivative(self, z):
        out = self.jet(z, 1)[1]
        return complex(out) if np.ndim(out) == 0 else out

    def value_at_zero(self) -> complex:
        return complex(self.series(2).coeffs[0])

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class SeriesMap(AnalyticMap):
    route = "series"

    def __init__(self, series: PowerSeries, name: str = "series"):
        self._series = series
        self.name = name

    def jet(self, z, order):
        return ps._taylor_shift(self._series.coeffs, z, order)

    def __call__(self, z):
        return ps.ps_eval(self._series, z)

    def series(self, order=None):
        if order is None or order >= self._series.order:
            return self._series
        return self._series.truncate(order)


class RationalMap(AnalyticMap):
    """num(z)/den(z) with ascending coefficient lists."""

    def __init__(self, num, den=(1.0,), name: str = "rational"):
        self.num = np.asarray(num, dtype=complex)
        self.den = np.asarray(den, dtype=complex)
        self.name = name

    def jet(self, z, order):
        n = ps._taylor_shift(self.num, z, order)
        d = ps._taylor_shift(self.den, z, order)
        return ps._div(n, d, f"denominator of {self.name}")

    def series(self, order=DEFAULT_ORDER):
        return ps.ps_div(PowerSeries.from_coeffs(self.num, order), PowerSeries.from_coeffs(self.den, order))


class MobiusPowerMap(AnalyticMap):
    """((1+z)/(1-z))**alpha, principal branch."""

    def __init__(self, alpha: float):
        self.alpha = float(alpha)
        self.name = f"((1+z)/(1-z))^{self.alpha:g}"

    def jet(self, z, order):
        ratio = ps._div(ps._taylor_shift([1, 1], z, order), ps._taylor_shift([1, -1], z, order))
        return ps._pow(ratio, self.alpha)

    def series(self, order=DEFAULT_ORDER):
        ratio = ps.ps_div(PowerSeries.from_coeffs([1, 1], order), PowerSeries.from_coeffs([1, -1], order))
        return ps.ps_pow(ratio, self.alpha)


class KummerMap(AnalyticMap):
    """Phi(a; c; z); derivatives from Phi^(k) = (a)_k/(c)_k Phi(a+k; c+k)."""

    def __init__(self, params: KummerParams):
        self.params = params
        self.name = f"Phi({params.a:g};{params.c:g};z)"

    def jet(self, z, order):
        z = np.asarray(z, dtype=complex)
        out = np.empty((order + 1,) + z.shape, dtype=complex)
        scale = 1.0
        for k in range(order + 1):
            prm = self.params.shifted(k)
            out[k] = scale * np.asarray(kummer_eval(prm, z))
            scale *= prm.a / (prm.c * (k + 1))
        return out

    def series(self, order=DEFAULT_ORDER):
        return kummer_series(self.params, order)


class BesselMap(AnalyticMap):
    """u_{p,b,c}(z); derivatives from u_p' = -c/(4k) u_{p+1}."""

    def __init__(self, params: BesselParams):
        self.params = params
        self.name = f"u_({params.p:g},{params.b:g},{params.c:g})"

    def jet(self, z, order):
        z = np.asarray(z, dtype=complex)
        out = np.empty((order + 1,) + z.shape, dtype=complex)
        scale = 1.0
        for k in range(order + 1):
            prm = self.params.shifted(k)
            out[k] = scale * np.asarray(bessel_u_eval(prm, z))
            scale *= -prm.c / (4 * prm.k * (k + 1))
        return out

    def series(self, order=DEFAULT_ORDER):
        return bessel_u_series(self.params, order)


class ZTimesMap(AnalyticMap):
    """z * base(z); turns p in H[1,1] into f = z p in A."""

    def __init__(self, base: AnalyticMap):
        self.base = base
        self.name = f"z*{base.name}"

    def jet(self, z, order):
        return ps._mul(_point_jet(z, order), self.base.jet(z, order))

    def series(self, order=DEFAULT_ORDER):
        return ps.ps_mulz(self.base.series(max(order - 1, 0)))


class ScaledMap(AnalyticMap):
    """base(lam * z) for real 0 < lam <= 1."""

    def __init__(self, base: AnalyticMap, lam: float):
        if not 0 < lam <= 1:
            raise ValueError("dilation factor must lie in (0, 1]")
        self.base = base
        self.lam = float(lam)
        self.name = f"{base.name}({self.lam:g}z)"

    def jet(self, z, order):
        J = self.base.jet(self.lam * np.asarray(z, dtype=complex), order)
        scale = self.lam ** np.arange(order + 1)
        return J * scale.reshape((-1,) + (1,) * (J.ndim - 1))

    def series(self, order=DEFAULT_ORDER):
        c = self.base.series(order).coeffs
        return PowerSeries(c * self.lam ** np.arange(len(c)))


# -- transforms --------------------------------------------------------------

ZF_PRIME_OVER_F = "ZFprimeOverF"
F_PRIME = "Fprime"
Z2F_PRIME_OVER_F2 = "Z2FprimeOverF2"
ONE_PLUS_BETA = "OnePlusBeta"
P_PLUS_BETA = "PPlusBeta"

_ON_F = (ZF_PRIME_OVER_F, F_PRIME, Z2F_PRIME_OVER_F2)


@dataclass(frozen=True)
class TransformSpec:
    """Which composite to build.

    ZFprimeOverF, Fprime, Z2FprimeOverF2 act on f in A.  OnePlusBeta(k, beta)
    is 1 + beta z p'/p^k with k in {1, 2}; PPlusBeta(k, beta) is
    p + beta z p'/p^k with k in {0, 1, 2}.  Both act on p with p(0) = 1.
    """

    kind: str
    k: int | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.kind in _ON_F:
            return
        if self.kind == ONE_PLUS_BETA:
            allowed = (1, 2)
        elif self.kind == P_PLUS_BETA:
            allowed = (0, 1, 2)
        else:
            raise ValueError(f"unknown transform {self.kind!r}")
        if self.k not in allowed:
            raise ValueError(f"{self.kind} needs k in {allowed}, got {self.k!r}")
        if self.beta is None or not math.isfinite(self.beta):
            raise ValueError(f"{self.kind} needs a finite beta")

    @property
    def label(self) -> str:
        if self.kind in _ON_F:
            return self.kind
        return f"{self.kind}(k={self.k}, beta={self.beta:g})"


def _transform_arrays(F, Z, spec: TransformSpec, name: str):
    """Apply ``spec`` to coefficient arrays (global series or local jets)."""
    D = ps._deriv(F)
    n = len(D)
    F, Z = F[:n], Z[:n]
    zd = ps._mul(Z, D)
    try:
        if spec.kind == ZF_PRIME_OVER_F:
            return ps._div(zd, F, f"f in zf'/f of {name}")
        if spec.kind == F_PRIME:
            return D
        if spec.kind == Z2F_PRIME_OVER_F2:
            return ps._div(ps._mul(Z, zd), ps._mul(F, F), f"f^2 in z^2 f'/f^2 of {name}")
        if spec.k == 0:
            ratio = zd
        else:
            pk = F if spec.k == 1 else ps._mul(F, F)
            ratio = ps._div(zd, pk, f"p^{spec.k} in {spec.kind} of {name}")
        out = spec.beta * ratio
        if spec.kind == ONE_PLUS_BETA:
            out[0] = out[0] + 1.0
        else:
            out = out + F
        return out
    except ZeroConstantTerm as exc:
        raise ZeroConstantTerm(f"{exc} [{spec.label}]") from None


def _series_route(f: PowerSeries, spec: TransformSpec, name: str) -> PowerSeries:
    if spec.kind in _ON_F:
        # f = z g with g(0) = 1 avoids dividing by the zero constant term of f
        g = ps.ps_divz(f)
        zg = ps.ps_mulz(ps.ps_deriv(g))
        try:
            if spec.kind == ZF_PRIME_OVER_F:
                return 1 + ps.ps_div(zg, g)
            if spec.kind == F_PRIME:
                return g + zg
            return ps.ps_div(g + zg, g * g)
        except ZeroConstantTerm as exc:
            raise ZeroConstantTerm(f"{exc} [f/z in {spec.label} of {name}]") from None
    Z = PowerSeries.identity(f.order).coeffs
    return PowerSeries(_transform_arrays(f.coeffs, Z, spec, name))


class TransformedMap(AnalyticMap):
    """Closed-form route: the composite is evaluated from jets of the base."""

    def __init__(self, base: AnalyticMap, spec: TransformSpec):
        self.base = base
        self.spec = spec
        self.name = f"{spec.label}[{base.name}]"

    def jet(self, z, order):
        F = self.base.jet(z, order + 1)
        return _transform_arrays(F, _point_jet(z, order + 1), self.spec, self.base.name)

    def series(self, order=DEFAULT_ORDER):
        return _series_route(self.base.series(order + 1), self.spec, self.base.name).truncate(order)


def require_p_role(p: AnalyticMap, tol: float = 1e-12) -> None:
    """Maps standing for p in H[1,1] must satisfy p(0) = 1."""
    v0 = p.value_at_zero()
    if abs(v0 - 1) > tol:
        raise ValueError(f"{p.name} must satisfy p(0) = 1, got {v0}")


def apply_transform(base: AnalyticMap, spec: TransformSpec, route: str = "auto", order: int = DEFAULT_ORDER) -> AnalyticMap:
    """Build the composite map.

    ``route='auto'`` keeps series bases on the series route and evaluates
    closed forms through jets.  ``route='series'`` forces the series route.
    """
    if spec.kind not in _ON_F:
        require_p_role(base)
    if route == "series" or (route == "auto" and isinstance(base, SeriesMap)):
        # one extra coefficient pays for the derivative inside every transform
        src = base.series() if isinstance(base, SeriesMap) else base.series(order + 1)
        return SeriesMap(_series_route(src, spec, base.name), name=f"{spec.label}[{base.name}]")
    if route not in ("auto", "closed-form"):
        raise ValueError(f"unknown route {route!r}")
    return TransformedMap(base, spec)


# -- evidence ----------------------------------------------------------------

def _pair(w):
    return [float(np.real(w)), float(np.imag(w))]


@dataclass
class SubordinationReport:
    """Outcome of sampling p on a radii ladder against a target region."""

    min_margin: float
    witness_z: complex
    witness_w: complex
    radii: list
    samples_per_circle: int
    region: str
    per_radius: list = field(default_factory=list)
    route: str = "closed-form"
    tail_bound: float | None = None
    inconclusive: bool = False

    @property
    def verdict(self) -> str:
        if self.inconclusive:
            return "inconclusive"
        return "holds" if self.min_margin > 0 else "counterexample"

    def to_dict(self) -> dict:
        return {
            "min_margin": self.min_margin,
            "witness_z": _pair(self.witness_z),
            "witness_w": _pair(self.witness_w),
            "radii": list(self.radii),
            "samples_per_circle": self.samples_per_circle,
            "region": self.region,
            "per_radius_min": list(self.per_radius),
            "route": self.route,
            "tail_bound": self.tail_bound,
            "inconclusive": self.inconclusive,
            "verdict": self.verdict,
            "evidence": "sampled circles; not a proof",
        }


def _check_radii(radii):
    radii = [float(r) for r in radii]
    if not radii or any(not 0 < r < 1 for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly increasing")
    return radii


def _sample(p: AnalyticMap, z):
    try:
        w = np.asarray(p(z))
    except ZeroDivisionError as exc:
        # locate the first offending sample for the error report
        for point in np.ravel(z):
            try:
                p(np.array([point]))
            except ZeroDivisionError:
                raise EvaluationFailure(f"{p.name} failed at z = {complex(point)}: {exc}", z=complex(point)) from None
        raise EvaluationFailure(f"{p.name} failed: {exc}") from None
    bad = ~np.isfinite(w)
    if np.any(bad):
        where = complex(z[bad][0])
        raise EvaluationFailure(f"{p.name} is not finite at z = {where}", z=where)
    return w


def check_subordination(p: AnalyticMap, target: Region, radii=DEFAULT_RADII, m: int = DEFAULT_SAMPLES) -> SubordinationReport:
    """Minimum target margin of p over the circles |z| = r, r in ``radii``."""
    radii = _check_radii(radii)
    if m < 64:
        raise ValueError("need at least 64 samples per circle")
    z = polar_grid(radii, m)
    w = _sample(p, z)
    margins = np.asarray(target.margin(w))
    idx = np.unravel_index(np.argmin(margins), margins.shape)
    report = SubordinationReport(
        min_margin=float(margins[idx]),
        witness_z=complex(z[idx]),
        witness_w=complex(w[idx]),
        radii=radii,
        samples_per_circle=m,
        region=target.label,
        per_radius=[float(v) for v in margins.min(axis=1)],
        route=p.route,
    )
    if isinstance(p, SeriesMap):
        report.tail_bound = ps.tail_bound(p.series(), radii[-1])
        report.inconclusive = report.tail_bound > GUARD_FRACTION * abs(report.min_margin)
    return report


def min_real_part(fmap: AnalyticMap, r: float, m: int = 1024, starlike: bool = False) -> float:
    """min over |z| = r of Re f (plain) or of Re(z f'/f) (starlike mode)."""
    z = polar_grid([r], m)[0]
    J = fmap.jet(z, 1 if starlike else 0)
    small = np.abs(J[0]) < 1e-12
    if np.any(small):
        where = complex(z[small][0])
        raise ZeroOnCircle(f"{fmap.name} vanishes near z = {where}", z=where)
    vals = z * J[1] / J[0] if starlike else J[0]
    return float(np.min(vals.real))
