"""Hypothesis checks, closed-form thresholds and brute-force threshold oracles
for the strong-starlikeness criteria.

Theorems are keyed by the labels the CLI accepts (2.1, 3.1, 3.2, 3.3, 3.4, 3.5).
Brute-force routes never reuse the closed form they are compared against:
thresholds come from bisection on a predicate evaluated directly in complex
arithmetic on a t-grid.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    NotApplicable,
    ParameterOutOfTheorem,
    SingularParameter,
    ZeroDenominator,
    ZeroDerivative,
)
from .regions import Region, default_disc_grid, polar_grid
from .special_functions import BesselParams, KummerParams
from .subordination import (
    DEFAULT_RADII,
    DEFAULT_SAMPLES,
    ONE_PLUS_BETA,
    P_PLUS_BETA,
    AnalyticMap,
    RationalMap,
    SubordinationReport,
    TransformSpec,
    apply_transform,
    check_subordination,
    require_p_role,
)

BISECT_ITERS = 60
TGRID = 4096
GUARD = 1e-6
THM31_CONST = math.sqrt((4 * math.sqrt(3) + 8) / (3 * math.sqrt(3)))


# -- Theorem 2.1 and its corollaries -----------------------------------------

@dataclass(frozen=True)
class AdmissibleTriple:
    """Data of C z^2 p'' + D(z) z p' + E(z) p = 0 with polynomial D, E.

    D and E are ascending coefficient lists.
    """

    C: float
    D: tuple
    E: tuple
    n: int = 1
    alpha: float = 1.0

    def __post_init__(self):
        if self.C < 0:
            raise ValueError("C must be >= 0")
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        object.__setattr__(self, "D", tuple(complex(c) for c in self.D))
        object.__setattr__(self, "E", tuple(complex(c) for c in self.E))

    def with_alpha(self, alpha: float) -> "AdmissibleTriple":
        return AdmissibleTriple(self.C, self.D, self.E, self.n, alpha)


def _polyval(coeffs, z):
    return np.polynomial.polynomial.polyval(z, np.asarray(coeffs, dtype=complex))


def kummer_triple(a: float, c: float, alpha: float = 1.0) -> AdmissibleTriple:
    """C = 1, D = c - z, E = -a z (Kummer's equation times z)."""
    return AdmissibleTriple(1.0, (c, -1.0), (0.0, -a), 1, alpha)


def bessel_triple(p: float, b: float, c: float, alpha: float = 1.0) -> AdmissibleTriple:
    """C = 4, D = 4k, E = c z."""
    k = BesselParams(p, b, c).k
    return AdmissibleTriple(4.0, (4 * k,), (0.0, c), 1, alpha)


def thm21_margin(triple: AdmissibleTriple, grid=None) -> float:
    """min over the grid of n alpha (Re D - C) - |Im E|."""
    z = default_disc_grid() if grid is None else np.asarray(grid, dtype=complex)
    d = _polyval(triple.D, z)
    e = _polyval(triple.E, z)
    vals = triple.n * triple.alpha * (d.real - triple.C) - np.abs(e.imag)
    return float(np.min(vals))


def kummer_alpha_min(a: float, c: float) -> float:
    """Infimum of alpha with |c-1| > sqrt(1 + a^2/alpha^2)."""
    s = (c - 1) ** 2 - 1
    if s <= 0:
        raise NotApplicable(f"(c-1)^2 = {(c - 1) ** 2:g} <= 1: no alpha in (0,1] works")
    return abs(a) / math.sqrt(s)


def bessel_alpha_min(p: float, b: float, c: float) -> float:
    """Infimum of alpha with |c| < 4 alpha (k - 1)."""
    k = BesselParams(p, b, c).k
    if k <= 1:
        raise NotApplicable(f"k = {k:g} <= 1")
    return abs(c) / (4 * (k - 1))


def _quadratic_negative(p, q, r, lo=-1.0, hi=1.0, disc=None):
    """p x^2 + q x + r < 0 for every x in (lo, hi), decided via the discriminant.

    p < 0 with negative discriminant is the generic case; a zero discriminant
    still works when the double root lies outside the interval.  Callers may
    pass ``disc`` in factored form to avoid cancellation in q^2 - 4pr.
    """
    if p >= 0:
        return False
    if disc is None:
        disc = q * q - 4 * p * r
    if disc < 0:
        return True
    if disc == 0:
        root = -q / (2 * p)
        return not lo < root < hi
    return False


def discriminant_check_kummer(a: float, c: float, alpha: float) -> bool:
    """q^2 - 4pr < 0 with p = -(a^2+alpha^2), q = 2 alpha^2 (c-1), r = a^2 - (c-1)^2 alpha^2."""
    KummerParams(a, c)
    p = -(a * a + alpha * alpha)
    q = 2 * alpha * alpha * (c - 1)
    r = a * a - (c - 1) ** 2 * alpha * alpha
    # q^2 - 4pr factors as 4 a^2 (a^2 - alpha^2 ((c-1)^2 - 1))
    disc = 4 * a * a * (a * a - alpha * alpha * ((c - 1) ** 2 - 1))
    return _quadratic_negative(p, q, r, disc=disc)


def discriminant_check_bessel(p: float, b: float, c: float, alpha: float) -> bool:
    """Q^2 - 4PR < 0 with P = -c^2, Q = 0, R = c^2 - 16 (k-1)^2 alpha^2 (needs k > 1).

    Evaluated after dividing P, Q, R by c^2.
    """
    k = BesselParams(p, b, c).k
    if k <= 1:
        return False
    if c == 0:
        # E vanishes identically; Re D - C = 4(k-1) > 0 suffices
        return True
    # divided through by c^2 so that tiny c does not underflow
    ratio = 4 * (k - 1) * alpha / c
    return _quadratic_negative(-1.0, 0.0, 1 - ratio * ratio)


def _grid_values(fmap: AnalyticMap, z, order):
    J = fmap.jet(z, order)
    return [J[k] * math.factorial(k) for k in range(order + 1)]


def _require_class_a(f: AnalyticMap, tol=1e-10):
    s = f.series(3).coeffs
    if abs(s[0]) > tol or abs(s[1] - 1) > tol:
        raise ValueError(f"{f.name} is not normalized: f(0) = {s[0]}, f'(0) = {s[1]}")


def remark_imag_criterion(f: AnalyticMap, alpha: float, grid=None) -> float:
    """min over the grid of alpha - |Im(1 + z f''/f' - z f'/f)|."""
    _require_class_a(f)
    z = default_disc_grid() if grid is None else np.asarray(grid, dtype=complex)
    f0, f1, f2 = _grid_values(f, z, 2)
    bad = np.abs(f1) < 1e-12
    if np.any(bad):
        where = complex(z[bad][0])
        raise ZeroDerivative(f"f' vanishes at z = {where}", z=where)
    expr = 1 + z * f2 / f1 - z * f1 / f0
    return float(alpha - np.max(np.abs(expr.imag)))


def product_criterion(f: AnalyticMap, g: AnalyticMap, alpha: float, grid=None) -> float:
    """min over the grid of alpha - |Im(expr)| for the product f g, where
    expr = 1 + (z f'' g + 2 z f' g' + z g'' f)/(f' g + g' f) - (z f'/f + z g'/g).
    """
    _require_class_a(f)
    require_p_role(g)
    z = default_disc_grid() if grid is None else np.asarray(grid, dtype=complex)
    f0, f1, f2 = _grid_values(f, z, 2)
    g0, g1, g2 = _grid_values(g, z, 2)
    den = f1 * g0 + g1 * f0
    for arr, label in ((den, "f'g + g'f"), (f0, "f"), (g0, "g")):
        bad = np.abs(arr) < 1e-12
        if np.any(bad):
            where = complex(z[bad][0])
            raise ZeroDenominator(f"{label} vanishes at z = {where}", z=where)
    num = z * f2 * g0 + 2 * z * f1 * g1 + z * g2 * f0
    expr = 1 + num / den - (z * f1 / f0 + z * g1 / g0)
    return float(alpha - np.max(np.abs(expr.imag)))


# -- thresholds --------------------------------------------------------------

@dataclass
class ThresholdResult:
    analytic: float | None
    brute: float
    gap: float | None
    theorem: str = ""
    params: dict = field(default_factory=dict)
    predicate_trace: list | None = None

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "analytic": self.analytic,
            "brute": self.brute,
            "gap": self.gap,
        }
        if self.predicate_trace is not None:
            out["predicate_trace"] = self.predicate_trace
        return out


def bisect_threshold(predicate, lo: float, hi: float, iters: int = BISECT_ITERS, trace=None, max_doublings: int = 60):
    """Smallest x with predicate(x) true, for a predicate monotone in x.

    ``predicate(lo)`` must be false; ``hi`` is doubled until the predicate holds.
    """
    if predicate(lo):
        raise ValueError("predicate already holds at the lower bracket")
    for _ in range(max_doublings):
        if predicate(hi):
            break
        lo, hi = hi, 2 * hi
    else:
        raise ValueError("could not bracket the threshold")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        ok = predicate(mid)
        if trace is not None:
            trace.append([mid, bool(ok)])
        if ok:
            hi = mid
        else:
            lo = mid
    return hi


def t_grid(size: int = TGRID, singular=(0.0, -math.pi, math.pi), guard: float = GUARD):
    """Uniform grid on [-pi, pi] minus a guard band around the singular points."""
    t = np.linspace(-math.pi, math.pi, size)
    keep = np.ones(t.shape, dtype=bool)
    for s in singular:
        keep &= np.abs(t - s) > guard
    return t[keep]


def _car_exterior(w):
    """|sqrt(w) - 2| >= 2 elementwise (w = 6h - 2)."""
    return np.abs(np.sqrt(w) - 2) >= 2


def thm31_w(alpha, beta, t):
    """4 + 12 alpha beta e^{it} / (1 - e^{2it}), computed in complex arithmetic."""
    e = np.exp(1j * np.asarray(t, dtype=float))
    return 4 + 12 * alpha * beta * e / (1 - e * e)


def thm32_w(alpha, beta, t):
    """4 + 12 alpha beta e^{it} (1-e^{it})^alpha / ((1-e^{2it}) (1+e^{it})^alpha)."""
    e = np.exp(1j * np.asarray(t, dtype=float))
    return 4 + 12 * alpha * beta * e * ((1 - e) / (1 + e)) ** alpha / (1 - e * e)


def thm35_w(beta, t):
    e = np.exp(1j * np.asarray(t, dtype=float))
    return -2 + 12 * beta * e / (1 - e) ** 2 + 6 * (1 + e) / (1 - e)


def thm33_w(beta, t):
    e = np.exp(1j * np.asarray(t, dtype=float))
    return -2 + 12 * beta * e / (1 + e) ** 2 + 6 * (1 + e) / (1 - e)


def thm31_min_beta(alpha: float, tgrid: int = TGRID, trace: bool = False) -> ThresholdResult:
    """Smallest beta > 0 with phi_CAR subordinate to 1 + 2 alpha beta z/(1 - z^2)."""
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    analytic = THM31_CONST / alpha
    t = t_grid(tgrid)
    log = [] if trace else None
    brute = bisect_threshold(lambda b: bool(np.all(_car_exterior(thm31_w(alpha, b, t)))), 0.0, 1.0, trace=log)
    return ThresholdResult(analytic, brute, abs(analytic - brute), "3.1", {"alpha": alpha}, log)


def thm31_fx(x, alpha: float, beta: float):
    """-16 x^4 - 72 alpha^2 beta^2 x^2 + 27 alpha^4 beta^4."""
    x = np.asarray(x, dtype=float)
    ab2 = (alpha * beta) ** 2
    out = -16 * x**4 - 72 * ab2 * x**2 + 27 * ab2 * ab2
    return float(out) if out.ndim == 0 else out


def thm32a_fx(x, beta: float):
    """(4x^2 + 3 beta)^3 (beta - 4x^2) / (16 x^8), the alpha = 1 reduction."""
    x = np.asarray(x, dtype=float)
    out = (4 * x * x + 3 * beta) ** 3 * (beta - 4 * x * x) / (16 * x**8)
    return float(out) if out.ndim == 0 else out


def thm32b_fx(x, alpha: float, beta: float):
    """The boundary function of Theorem 3.2 in x = cos(t/2), x in (0, 1)."""
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise DomainError("x must lie in the open interval (0, 1)")
    s = np.sqrt(1 - x * x)
    inner = alpha * beta / (2 * x * s) * (s / x) ** alpha
    deep = 3 * alpha**2 * beta**2 / (4 * x * x * (1 - x * x)) * ((1 - x * x) / (x * x)) ** alpha
    out = -16 + inner * (-64 * math.sin(alpha * math.pi / 2) + 9 * inner * (-8 + deep))
    return float(out) if out.ndim == 0 else out


def thm32b_lhs(alpha: float, beta: float) -> float:
    """Left side of the sufficient inequality (compared against 16)."""
    if not 0 < alpha < 1:
        raise DomainError("part (b) needs 0 < alpha < 1; alpha = 1 is part (a)")
    R = (1 - alpha) / (1 + alpha)
    ra = R**alpha
    term1 = 9 * alpha**2 * beta**2 * ra * (1 - alpha**2) ** -2 * (-8 + alpha**2 * (8 + 3 * beta**2 * ra))
    term2 = 64 * alpha * beta * (1 - alpha**2) ** -0.5 * math.sqrt(R) ** alpha * math.sin(alpha * math.pi / 2)
    return term1 - term2


def thm32b_closed_at_xstar(alpha: float, beta: float) -> float:
    """Closed form of f(sqrt((1+alpha)/2)): -16 + lhs."""
    return -16 + thm32b_lhs(alpha, beta)


def thm32_check(alpha: float, beta: float, grid: int = 1000) -> dict:
    """{'holds_a': bool|None, 'holds_b': bool|None}.

    (a) is decided only at alpha = 1 from the factorized boundary function
    on a grid of (0, 1]; (b) only for 0 < alpha < 1 and beta > 0.
    """
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    out = {"holds_a": None, "holds_b": None}
    if alpha == 1:
        x = np.linspace(0, 1, grid + 1)[1:]
        vals = thm32a_fx(x, beta)
        scale = np.maximum(1.0, np.abs((4 * x * x + 3 * beta) ** 3 * (beta + 4 * x * x) / (16 * x**8)))
        out["holds_a"] = bool(np.all(vals >= -1e-12 * scale))
    elif beta > 0:
        out["holds_b"] = thm32b_lhs(alpha, beta) >= 16
    return out


def thm32b_min_beta(alpha: float, tgrid: int = TGRID, trace: bool = False) -> ThresholdResult:
    """Root of the (b) inequality vs. bisection on the direct boundary predicate."""
    if not 0 < alpha < 1:
        raise DomainError("part (b) needs 0 < alpha < 1")
    analytic = bisect_threshold(lambda b: thm32b_lhs(alpha, b) >= 16, 0.0, 1.0)
    t = t_grid(tgrid)
    log = [] if trace else None
    brute = bisect_threshold(lambda b: bool(np.all(_car_exterior(thm32_w(alpha, b, t)))), 0.0, 1.0, trace=log)
    return ThresholdResult(analytic, brute, abs(analytic - brute), "3.2b", {"alpha": alpha}, log)


def corollary_alpha_threshold(kind: str, params: dict, angles: int = TGRID) -> ThresholdResult:
    """Closed-form alpha_min vs. bisection on the Theorem 2.1 margin.

    The brute route samples the unit circle: the hypothesis must hold on the
    open disc, whose supremum of |Im E|/(n(Re D - C)) is reached on |z| = 1.
    """
    z = polar_grid([1.0], angles)[0]
    if kind == "kummer":
        analytic = kummer_alpha_min(params["a"], params["c"])
        triple = kummer_triple(params["a"], params["c"])
    elif kind == "bessel":
        analytic = bessel_alpha_min(params["p"], params["b"], params["c"])
        triple = bessel_triple(params["p"], params["b"], params["c"])
    else:
        raise ValueError(f"unknown corollary {kind!r}")
    if analytic == 0:
        return ThresholdResult(0.0, 0.0, 0.0, kind, dict(params))
    if analytic > 1:
        return ThresholdResult(analytic, float("nan"), None, kind, dict(params))
    re_d = _polyval(triple.D, z).real - triple.C
    im_e = np.abs(_polyval(triple.E, z).imag)
    brute = bisect_threshold(lambda al: bool(np.min(triple.n * al * re_d - im_e) >= 0), 0.0, 1.0)
    return ThresholdResult(analytic, brute, abs(analytic - brute), kind, dict(params))


# -- Theorem 3.4 -------------------------------------------------------------

def thm34_in_theorem(alpha: float, beta: float, k: int) -> bool:
    if k in (0, 1):
        return beta > 0
    if k == 2:
        return (0 < alpha < 0.5 and beta > 0) or (0.5 < alpha <= 1 and beta < 0)
    raise ValueError("k must be 0, 1 or 2")


@dataclass
class ImplicationReport:
    premise: SubordinationReport
    conclusion: SubordinationReport
    guaranteed: bool

    @property
    def premise_holds(self) -> bool:
        return self.premise.verdict == "holds"

    @property
    def conclusion_holds(self) -> bool:
        return self.conclusion.verdict == "holds"

    @property
    def implication_ok(self) -> bool:
        """False only when the premise holds and the conclusion is violated."""
        return not (self.premise_holds and self.conclusion.verdict == "counterexample")

    def to_dict(self) -> dict:
        return {
            "premise": self.premise.to_dict(),
            "conclusion": self.conclusion.to_dict(),
            "theorem_guarantee": self.guaranteed,
            "implication_ok": self.implication_ok,
        }


def _implication_setup(theorem: str, alpha: float, beta: float, k: int | None):
    """(transform, premise region, conclusion region, in-theorem flag)."""
    car = Region.cardioid()
    if theorem == "3.1":
        return TransformSpec(ONE_PLUS_BETA, 1, beta), car, Region.sector(alpha), abs(beta) >= THM31_CONST / alpha
    if theorem == "3.2":
        if alpha == 1:
            ok = beta >= 4 or beta <= -4 / 3
        else:
            ok = beta > 0 and thm32b_lhs(alpha, beta) >= 16
        return TransformSpec(ONE_PLUS_BETA, 2, beta), car, Region.sector(alpha), ok
    if theorem == "3.4":
        if k is None:
            raise ValueError("Theorem 3.4 needs k in {0, 1, 2}")
        return TransformSpec(P_PLUS_BETA, k, beta), Region.sector(alpha), Region.sector(alpha), thm34_in_theorem(alpha, beta, k)
    if theorem == "3.5":
        return TransformSpec(P_PLUS_BETA, 0, beta), car, Region.half_plane(), beta >= 0
    if theorem == "3.3":
        return TransformSpec(P_PLUS_BETA, 2, beta), car, Region.half_plane(), beta <= 0
    raise ValueError(f"no implication check for theorem {theorem!r}")


def implication_check(theorem: str, p: AnalyticMap, alpha: float = 1.0, beta: float = 0.0, k: int | None = None,
                      radii=DEFAULT_RADII, m: int = DEFAULT_SAMPLES) -> ImplicationReport:
    """Sample the premise subordination and the conclusion for one of 3.1-3.5.

    Parameters outside the theorem's hypotheses are still evaluated but emit a
    ParameterOutOfTheorem warning and report no guarantee.
    """
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    spec, premise_region, conclusion_region, guaranteed = _implication_setup(theorem, alpha, beta, k)
    if not guaranteed:
        warnings.warn(f"theorem {theorem}: alpha={alpha}, beta={beta}, k={k} is outside its hypotheses; no guarantee",
                      ParameterOutOfTheorem, stacklevel=2)
    require_p_role(p)
    lhs = apply_transform(p, spec)
    return ImplicationReport(
        check_subordination(lhs, premise_region, radii, m),
        check_subordination(p, conclusion_region, radii, m),
        guaranteed,
    )


def thm34_premise_check(p: AnalyticMap, alpha: float, beta: float, k: int,
                        radii=DEFAULT_RADII, m: int = DEFAULT_SAMPLES) -> ImplicationReport:
    """Premise p + beta z p'/p^k vs Sector(alpha) and conclusion p vs Sector(alpha)."""
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    if not thm34_in_theorem(alpha, beta, k):
        warnings.warn(f"alpha={alpha}, beta={beta}, k={k} is outside Theorem 3.4; no guarantee",
                      ParameterOutOfTheorem, stacklevel=2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ParameterOutOfTheorem)
        return implication_check("3.4", p, alpha, beta, k, radii, m)


# -- Theorems 3.5 and 3.3 ----------------------------------------------------

def thm35_fx(x, beta: float):
    """3/x^8 (27 b^4 + 216 b^2 (1+b) x^2 + 144 (3 + b(6+b)) x^4 + 128 (-9 - 5b + 6x^2) x^6)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0) or np.any(x > 1):
        raise DomainError("x must lie in (0, 1]")
    b = beta
    poly = 27 * b**4 + 216 * b**2 * (1 + b) * x**2 + 144 * (3 + b * (6 + b)) * x**4 + 128 * (-9 - 5 * b + 6 * x**2) * x**6
    out = 3 / x**8 * poly
    return float(out) if out.ndim == 0 else out


def thm35_identity(beta: float) -> float:
    """|f(1) - 3 (6+beta)(2+3beta)^3|."""
    return abs(thm35_fx(1.0, beta) - 3 * (6 + beta) * (2 + 3 * beta) ** 3)


def thm33_gx(x):
    """2x^4 - 7x^2 + 5."""
    x = np.asarray(x, dtype=float)
    out = 2 * x**4 - 7 * x**2 + 5
    return float(out) if out.ndim == 0 else out


def thm33_fx(x, beta: float):
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise DomainError("x must lie in the open interval (0, 1)")
    b = beta
    y = 1 - x * x
    num = (27 * b**4 * y**2 - 216 * b**3 * y**2 * x**2 + 72 * b**2 * thm33_gx(x) * x**4
           - 32 * b * y * (20 * x * x + 7) * x**6 + 48 * (1 - 4 * x * x) ** 2 * x**8)
    out = num / (x**8 * y**2)
    return float(out) if out.ndim == 0 else out


# -- boundary predicate (u^2+v^2-8u)^2 - 64(u^2+v^2) -------------------------

_SINGULAR = {
    "3.1": (0.0, math.pi, -math.pi),
    "3.2": (0.0, math.pi, -math.pi),
    "3.5": (0.0,),
    "3.3": (0.0, math.pi, -math.pi),
}


def _check_t(theorem, t):
    if theorem not in _SINGULAR:
        raise ValueError(f"no boundary predicate for theorem {theorem!r}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > math.pi):
        raise DomainError("t must lie in [-pi, pi]")
    for s in _SINGULAR[theorem]:
        if np.any(np.abs(t - s) < 1e-12):
            raise SingularParameter(f"t = {s:g} is singular for theorem {theorem}")
    return t


def boundary_uv(theorem: str, params: dict, t):
    """(u, v) of the boundary curve in the closed form used for each theorem."""
    t = _check_t(theorem, t)
    if theorem == "3.1":
        ab = params["alpha"] * params["beta"]
        return np.full(t.shape, 4.0), 6 * ab / np.sin(t)
    if theorem == "3.2":
        al, be = params["alpha"], params["beta"]
        # |tan(t/2)|^alpha / |sin t| keeps the formula valid for t < 0
        K = 6 * al * be * np.abs(np.tan(t / 2)) ** al / np.abs(np.sin(t))
        return 4 + K * math.sin(al * math.pi / 2), np.sign(t) * K * math.cos(al * math.pi / 2)
    be = params["beta"]
    v = 6 * np.cos(t / 2) / np.sin(t / 2)
    if theorem == "3.5":
        return -2 - 3 * be / np.sin(t / 2) ** 2, v
    return -2 + 3 * be / np.cos(t / 2) ** 2, v


def boundary_predicate(theorem: str, params: dict, t):
    """(u^2+v^2-8u)^2 - 64(u^2+v^2); >= 0 for all t means the boundary avoids the cardioid."""
    u, v = boundary_uv(theorem, params, t)
    s = u * u + v * v
    out = (s - 8 * u) ** 2 - 64 * s
    return float(out) if np.ndim(out) == 0 else out


def reduced_form(theorem: str, params: dict, t):
    """The one-variable reduction times its positive factor; equals boundary_predicate."""
    t = _check_t(theorem, t)
    if theorem == "3.1":
        x = np.abs(np.sin(t))
        return 48 / x**4 * thm31_fx(x, params["alpha"], params["beta"])
    if theorem == "3.2":
        x = np.cos(t / 2)
        if params["alpha"] == 1:
            return 48 * thm32a_fx(x, params["beta"])
        return 48 * thm32b_fx(x, params["alpha"], params["beta"])
    if theorem == "3.5":
        return thm35_fx(np.abs(np.sin(t / 2)), params["beta"])
    return 3 * thm33_fx(np.cos(t / 2), params["beta"])


def boundary_w(theorem: str, params: dict, t):
    """Boundary point w = 6 h(e^{it}) - 2 computed directly in complex arithmetic."""
    t = _check_t(theorem, t)
    if theorem == "3.1":
        return thm31_w(params["alpha"], params["beta"], t)
    if theorem == "3.2":
        return thm32_w(params["alpha"], params["beta"], t)
    if theorem == "3.5":
        return thm35_w(params["beta"], t)
    return thm33_w(params["beta"], t)


# -- Q maps that must be starlike for the theorems to apply -----------------

def thm31_Q(alpha: float, beta: float) -> RationalMap:
    """Q = 2 alpha beta z / (1 - z^2)."""
    return RationalMap([0, 2 * alpha * beta], [1, 0, -1], name="2ab z/(1-z^2)")


def thm32_zQ_over_Q(alpha: float) -> RationalMap:
    """z Q'/Q = (1 + z^2 - 2 alpha z)/(1 - z^2)."""
    return RationalMap([1, -2 * alpha, 1], [1, 0, -1], name=f"(1+z^2-2({alpha:g})z)/(1-z^2)")


def thm33_Q(beta: float) -> RationalMap:
    """Q = 2 beta z / (1 + z)^2."""
    return RationalMap([0, 2 * beta], [1, 2, 1], name="2b z/(1+z)^2")


def thm35_Q(beta: float) -> RationalMap:
    """Q = 2 beta z / (1 - z)^2."""
    return RationalMap([0, 2 * beta], [1, -2, 1], name="2b z/(1-z)^2")


# -- end-to-end check for Theorem 2.1 instances ------------------------------

def verify_theorem21(triple: AdmissibleTriple, p: AnalyticMap, radii=DEFAULT_RADII,
                     m: int = DEFAULT_SAMPLES, grid=None) -> dict:
    """Hypothesis margin on the disc grid plus sampled subordination of p."""
    margin = thm21_margin(triple, grid)
    report = check_subordination(p, Region.sector(triple.alpha), radii, m)
    hyp = margin > 0
    if report.verdict == "inconclusive":
        verdict = "inconclusive"
    elif hyp and report.verdict == "holds":
        verdict = "holds"
    elif hyp:
        verdict = "counterexample"
    else:
        verdict = "hypothesis-fails"
    return {"margin": margin, "hypothesis_holds": hyp, "report": report, "verdict": verdict}
