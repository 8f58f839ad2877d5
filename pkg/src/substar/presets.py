"""Named example functions so each worked example runs with one call."""

from __future__ import annotations

import math

from .special_functions import BesselParams, KummerParams
from .subordination import (
    ZF_PRIME_OVER_F,
    AnalyticMap,
    BesselMap,
    KummerMap,
    MobiusPowerMap,
    RationalMap,
    TransformSpec,
    ZTimesMap,
    apply_transform,
)


def f1() -> RationalMap:
    """4z/(2-z)^2."""
    return RationalMap([0, 4], [4, -4, 1], name="f1")


def f2() -> RationalMap:
    """z(1+z/4)^2."""
    return RationalMap([0, 1, 0.5, 1 / 16], name="f2")


def identity() -> RationalMap:
    return RationalMap([0, 1], name="z")


def q1() -> AnalyticMap:
    """z f1'/f1 = (2+z)/(2-z)."""
    return apply_transform(f1(), TransformSpec(ZF_PRIME_OVER_F))


def q2() -> AnalyticMap:
    """z f2'/f2 = (1+3z/4)/(1+z/4)."""
    return apply_transform(f2(), TransformSpec(ZF_PRIME_OVER_F))


def kummer(a: float, c: float) -> KummerMap:
    return KummerMap(KummerParams(a, c))


def bessel(p: float, b: float, c: float) -> BesselMap:
    return BesselMap(BesselParams(p, b, c))


def one() -> RationalMap:
    return RationalMap([1.0], name="1")


def mobius_power(gamma: float) -> MobiusPowerMap:
    return MobiusPowerMap(gamma)


# (map, alpha_min) for the four worked examples of the Kummer/Bessel corollaries
NAMED_INSTANCES = {
    "phi1": (lambda: kummer(2, 6), 1 / math.sqrt(6)),
    "phi2": (lambda: kummer(5, 10), math.sqrt(5) / 4),
    "u2": (lambda: bessel(2, 2, 6), 3 / 5),
    "u7": (lambda: bessel(7, 6, 10), 5 / 19),
}


def function_in_a(name: str, **params) -> AnalyticMap:
    """Presets for f in A: f1, f2, identity, kummer (z Phi), bessel (z u_p)."""
    if name == "f1":
        return f1()
    if name == "f2":
        return f2()
    if name in ("identity", "z"):
        return identity()
    if name == "kummer":
        return ZTimesMap(kummer(params["a"], params["c"]))
    if name == "bessel":
        return ZTimesMap(bessel(params["p"], params["b"], params["c"]))
    raise ValueError(f"unknown preset {name!r}")


def function_p(name: str, **params) -> AnalyticMap:
    """Presets playing the role of p with p(0) = 1."""
    if name == "kummer":
        return kummer(params["a"], params["c"])
    if name == "bessel":
        return bessel(params["p"], params["b"], params["c"])
    if name == "q1":
        return q1()
    if name == "q2":
        return q2()
    if name == "one":
        return one()
    if name == "mobius":
        return mobius_power(params["gamma"])
    raise ValueError(f"unknown preset {name!r}")
