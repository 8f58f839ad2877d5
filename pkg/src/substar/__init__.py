"""Numerical tools for starlike classes, subordination and admissible-function criteria."""

from .power_series import PowerSeries
from .regions import Region
from .special_functions import BesselParams, KummerParams
from .subordination import SubordinationReport, TransformSpec, apply_transform, check_subordination

__all__ = [
    "PowerSeries",
    "Region",
    "KummerParams",
    "BesselParams",
    "TransformSpec",
    "apply_transform",
    "check_subordination",
    "SubordinationReport",
]
__version__ = "0.1.0"
