"""Depth-averaged liquid and vapour pressure fields.

Liquid returns through the wick as Darcy flow, u = -(K / mu_l) grad P_l; vapour
moves through the gap as plane Poiseuille flow, u = -(h_v^2 / (12 mu_v)) grad P_v.
Mass conservation with the phase-change flux m'' (positive = evaporation) then gives

    lap P_l = +mu_l / (rho_l K h_w) m''
    lap P_v = -12 mu_v / (rho_v h_v^3) m''

on the planform with zero-flux walls.
"""

from dataclasses import dataclass, replace

import numpy as np

from .elliptic import DEFAULT_REL_TOL, solve_poisson_neumann
from .errors import NonPositive


@dataclass(frozen=True)
class PressureField:
    """Solved pressure [Pa] on a grid.

    ``relative`` is the zero-mean solver output. Absolute pressure is
    ``(relative - ref) + level``: the cell whose relative value equals
    ``ref`` reads exactly ``level``. Drops are always taken on ``relative``
    so that re-referencing cannot perturb them.
    """

    relative: np.ndarray
    phase: str
    ref: float = 0.0
    level: float = 0.0

    @property
    def offset(self):
        return self.level - self.ref

    @property
    def values(self):
        return (self.relative - self.ref) + self.level

    @property
    def drop(self):
        return float(self.relative.max() - self.relative.min())


@dataclass(frozen=True)
class PressureDrops:
    dp_l: float
    dp_v: float

    @property
    def total(self):
        return self.dp_l + self.dp_v


def liquid_coefficient(fluid, wick):
    """Factor turning mass flux [kg/(m^2 s)] into the liquid Laplacian [Pa/m^2]."""
    return fluid.mu_l / (fluid.rho_l * wick.permeability * wick.thickness)


def vapor_coefficient(fluid, h_v):
    if not h_v > 0:
        raise NonPositive(f"vapour thickness must be positive, got {h_v}")
    return 12.0 * fluid.mu_v / (fluid.rho_v * h_v**3)


def liquid_pressure(grid, flux, fluid, wick, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    src = liquid_coefficient(fluid, wick) * flux.values
    return PressureField(solve_poisson_neumann(grid, src, rel_tol, max_iter), "liquid")


def vapor_pressure(grid, flux, fluid, h_v, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    src = -vapor_coefficient(fluid, h_v) * flux.values
    return PressureField(solve_poisson_neumann(grid, src, rel_tol, max_iter), "vapor")


def rereference(p_l, p_v, fluid, geometry=None):
    """Pin vapour minimum to p_sat and meet the liquid there (flat meniscus).

    The vapour minimum sits over the condenser, where the wetting angle is
    taken as zero, so liquid and vapour pressures coincide at that cell.
    """
    if p_l.relative.shape != p_v.relative.shape:
        raise ValueError("liquid and vapour fields live on different grids")
    k = np.unravel_index(np.argmin(p_v.relative), p_v.relative.shape)
    return (replace(p_l, ref=float(p_l.relative[k]), level=fluid.p_sat),
            replace(p_v, ref=float(p_v.relative[k]), level=fluid.p_sat))


def pressure_drops(p_l, p_v):
    return PressureDrops(p_l.drop, p_v.drop)
