"""Target regions: half-plane, sector, and the cardioid image of phi_CAR.

Every region exposes a signed margin (positive inside, zero on the boundary)
and a sampled boundary curve.  Margins are in radians for sectors and in
absolute units otherwise, so they must never be compared across kinds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OriginPoint

ORIGIN_EPS = 1e-300

HALF_PLANE = "HalfPlane"
SECTOR = "Sector"
CARDIOID = "CardioidCAR"


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def phi_car(z):
    """phi_CAR(z) = 1 + 4z/3 + 2z^2/3."""
    z = np.asarray(z, dtype=complex)
    return _unwrap(1 + 4 * z / 3 + 2 * z * z / 3)


def _unwrap(x):
    return complex(x) if np.ndim(x) == 0 else x


def half_plane_margin(w, bound: float = 0.0):
    return _out(np.real(np.asarray(w, dtype=complex)) - bound)


def sector_margin(w, alpha: float):
    """alpha*pi/2 - |arg w|; raises OriginPoint at w == 0."""
    w = np.asarray(w, dtype=complex)
    if np.any(np.abs(w) < ORIGIN_EPS):
        raise OriginPoint("sector margin undefined at the origin")
    return _out(alpha * math.pi / 2 - np.abs(np.angle(w)))


def car_margin(w):
    """2 - |-2 + sqrt(6w - 2)| with the principal square root."""
    w = np.asarray(w, dtype=complex)
    return _out(2 - np.abs(-2 + np.sqrt(6 * w - 2)))


def car_quartic(w):
    """(9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1); negative inside the cardioid."""
    w = np.asarray(w, dtype=complex)
    u, v = w.real, w.imag
    s = 9 * u * u + 9 * v * v
    return _out((s - 18 * u + 5) ** 2 - 16 * (s - 6 * u + 1))


@dataclass(frozen=True)
class Region:
    """A target set in the plane.

    ``param`` is the sector order alpha for ``Sector`` and the abscissa of
    the boundary line for ``HalfPlane`` (Re w > param); unused otherwise.
    """

    kind: str
    param: float = 0.0

    def __post_init__(self):
        if self.kind not in (HALF_PLANE, SECTOR, CARDIOID):
            raise ValueError(f"unknown region kind {self.kind!r}")
        if self.kind == SECTOR and not 0 < self.param <= 1:
            raise ValueError("sector order alpha must lie in (0, 1]")
        if self.kind == HALF_PLANE and not self.param < 1:
            raise ValueError("half-plane bound must be below 1 so that 1 is interior")

    @classmethod
    def half_plane(cls, bound: float = 0.0) -> "Region":
        return cls(HALF_PLANE, float(bound))

    @classmethod
    def sector(cls, alpha: float) -> "Region":
        return cls(SECTOR, float(alpha))

    @classmethod
    def cardioid(cls) -> "Region":
        return cls(CARDIOID)

    @property
    def label(self) -> str:
        if self.kind == CARDIOID:
            return self.kind
        return f"{self.kind}({self.param:g})"

    def margin(self, w):
        if self.kind == SECTOR:
            return sector_margin(w, self.param)
        if self.kind == CARDIOID:
            return car_margin(w)
        return half_plane_margin(w, self.param)

    def boundary(self, samples: int = 512):
        return region_boundary(self, samples)


def region_boundary(region: Region, samples: int = 512, t=None):
    """Sample the boundary; returns (t, w) arrays.

    CardioidCAR: w = phi_CAR(e^{it}) on t in [-pi, pi] (endpoints included).
    HalfPlane: w = bound + i tan(t/2) on the open interval (-pi, pi).
    Sector: the rays r e^{-+i alpha pi/2}, r on a log grid 1e-3..1e2; the
    t column carries the signed radius (negative on the lower ray).
    """
    if region.kind == CARDIOID:
        t = np.linspace(-np.pi, np.pi, samples) if t is None else np.asarray(t, dtype=float)
        return t, np.asarray(phi_car(np.exp(1j * t)))
    if region.kind == HALF_PLANE:
        if t is None:
            t = np.linspace(-np.pi, np.pi, samples + 2)[1:-1]
        t = np.asarray(t, dtype=float)
        return t, region.param + 1j * np.tan(t / 2)
    half = max(samples // 2, 1)
    r = np.logspace(-3, 2, half)
    t = np.concatenate([-r[::-1], r])
    phase = np.where(t < 0, -1.0, 1.0) * region.param * np.pi / 2
    return t, np.abs(t) * np.exp(1j * phase)


def polar_grid(radii, angles: int):
    """Points r e^{2 pi i j/m}; shape (len(radii), m)."""
    radii = np.asarray(radii, dtype=float).reshape(-1, 1)
    theta = 2 * np.pi * np.arange(angles) / angles
    return radii * np.exp(1j * theta)


def default_disc_grid(rungs: int = 16, angles: int = 512):
    """Polar grid r in linspace(0.1, 0.999, rungs) x ``angles`` angles."""
    return polar_grid(np.linspace(0.1, 0.999, rungs), angles)
