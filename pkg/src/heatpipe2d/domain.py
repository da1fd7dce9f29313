"""Heat pipe planform, uniform cell-centred grid and phase-change mass flux.

Arrays are indexed ``[j, i]`` with ``j`` along the width (y) and ``i`` along
the length (x), so row ``j`` holds the cells at ``y_j = (j + 1/2) dy``.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (GridTooSmall, InvalidGeometry, NegativePower, NonPositive,
                     OverlappingFootprints)

PACKAGE_STACK_LIMIT = 1e-3  # vapour space + wick thickness budget [m]

# Footprint edges within this many cell widths of a grid line are snapped onto it.
_SNAP = 1e-9


@dataclass(frozen=True)
class Footprint:
    x0: float
    y0: float
    length: float
    width: float

    @property
    def x1(self):
        return self.x0 + self.length

    @property
    def y1(self):
        return self.y0 + self.width

    @property
    def area(self):
        return self.length * self.width

    def overlaps(self, other):
        """True when the two rectangles share a region of positive area."""
        dx = min(self.x1, other.x1) - max(self.x0, other.x0)
        dy = min(self.y1, other.y1) - max(self.y0, other.y0)
        return dx > 0 and dy > 0


@dataclass(frozen=True)
class Geometry:
    length: float
    width: float
    wick_thickness: float
    vapor_thickness: float
    evaporator: Footprint
    condenser: Footprint
    wall_thickness: float = 0.8e-3

    def __post_init__(self):
        for name in ("length", "width", "wick_thickness", "vapor_thickness"):
            if not getattr(self, name) > 0:
                raise NonPositive(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("evaporator", "condenser"):
            fp = getattr(self, name)
            if not (fp.length > 0 and fp.width > 0):
                raise InvalidGeometry(f"{name} footprint needs positive extents")
            tol = 1e-12 * max(self.length, self.width)
            if (fp.x0 < -tol or fp.y0 < -tol or fp.x1 > self.length + tol
                    or fp.y1 > self.width + tol):
                raise InvalidGeometry(f"{name} footprint lies outside the planform")
        if self.evaporator.overlaps(self.condenser):
            raise OverlappingFootprints("evaporator and condenser footprints intersect")
        if not self.fits_package:
            warnings.warn(
                f"vapour + wick thickness {self.stack_thickness * 1e3:.3g} mm exceeds "
                "the 1 mm packaging budget", stacklevel=3)

    @property
    def stack_thickness(self):
        return self.vapor_thickness + self.wick_thickness

    @property
    def fits_package(self):
        return self.stack_thickness <= PACKAGE_STACK_LIMIT * (1 + 1e-12)


def table1_geometry(evap_length=10e-3, cond_length=10e-3):
    """44 x 30 mm pipe, 0.7 mm wick, 0.3 mm vapour space, full-width end strips."""
    L, W = 44e-3, 30e-3
    return Geometry(
        length=L, width=W, wick_thickness=0.7e-3, vapor_thickness=0.3e-3,
        wall_thickness=0.8e-3,
        evaporator=Footprint(0.0, 0.0, evap_length, W),
        condenser=Footprint(L - cond_length, 0.0, cond_length, W),
    )


@dataclass(frozen=True)
class Grid:
    nx: int
    ny: int
    length: float
    width: float

    @property
    def dx(self):
        return self.length / self.nx

    @property
    def dy(self):
        return self.width / self.ny

    @property
    def cell_area(self):
        return self.dx * self.dy

    @property
    def shape(self):
        return (self.ny, self.nx)

    @property
    def x(self):
        return (np.arange(self.nx) + 0.5) * self.dx

    @property
    def y(self):
        return (np.arange(self.ny) + 0.5) * self.dy


def build_grid(geometry, nx, ny):
    if nx < 2 or ny < 2:
        raise GridTooSmall(f"grid needs at least 2 x 2 cells, got {nx} x {ny}")
    return Grid(int(nx), int(ny), geometry.length, geometry.width)


def _coverage_1d(a, b, n):
    """Fraction of each of ``n`` unit cells covered by the interval [a, b]."""
    ra, rb = round(a), round(b)
    if abs(a - ra) < _SNAP:
        a = ra
    if abs(b - rb) < _SNAP:
        b = rb
    lo = np.arange(n, dtype=float)
    return np.clip(np.minimum(b, lo + 1.0) - np.maximum(a, lo), 0.0, 1.0)


def coverage(grid, footprint):
    """Per-cell fraction of the cell area lying under ``footprint``."""
    fx = _coverage_1d(footprint.x0 / grid.dx, footprint.x1 / grid.dx, grid.nx)
    fy = _coverage_1d(footprint.y0 / grid.dy, footprint.y1 / grid.dy, grid.ny)
    return np.outer(fy, fx)


@dataclass(frozen=True)
class MassFluxField:
    """Phase-change mass flux [kg/(m^2 s)], positive where liquid evaporates."""

    values: np.ndarray
    evaporation_rate: float  # Q / h_fg as integrated on the grid [kg/s]
    condenser_scale: float


def phase_change_flux(grid, geometry, Q, h_fg):
    """Uniform evaporation under the evaporator, balanced condensation under the condenser."""
    if Q < 0:
        raise NegativePower(f"heat power must be non-negative, got {Q}")
    if not h_fg > 0:
        raise NonPositive(f"latent heat must be positive, got {h_fg}")
    evap, cond = geometry.evaporator, geometry.condenser
    if evap.overlaps(cond):
        raise OverlappingFootprints("evaporator and condenser footprints intersect")

    frac_e = coverage(grid, evap)
    frac_c = coverage(grid, cond)
    q_e = Q / (evap.area * h_fg)
    q_c = Q / (cond.area * h_fg)
    # Rescale the condenser so the discrete source integrates to zero.
    s_e, s_c = frac_e.sum(), frac_c.sum()
    scale = (q_e * s_e) / (q_c * s_c) if Q > 0 else 1.0
    values = q_e * frac_e - (q_c * scale) * frac_c
    return MassFluxField(values, q_e * s_e * grid.cell_area, scale)
