"""Capillary limit: maximum heat power, temperature sweeps and the 1D model.

The capillary limit is reached when the wick's pumping pressure equals the
sum of the liquid and vapour pressure spans,

    dP_cap = (P_l,max - P_l,min) + (P_v,max - P_v,min).

With constant properties every pressure span is linear in the heat power, so
one solve at 1 W gives Q_max = dP_cap / (dP_l/W + dP_v/W).
"""

import math
from dataclasses import dataclass

from .domain import phase_change_flux
from .elliptic import DEFAULT_REL_TOL
from .errors import BracketFailure, EmptyList, NotStripLayout, ZeroDrop
from .fluids import saturation_properties
from .hydro import (liquid_pressure, pressure_drops, rereference,
                    vapor_pressure)

REFERENCE_POWER = 1.0  # [W]


@dataclass(frozen=True)
class CapillaryReport:
    T: float
    dp_cap: float
    dpl_per_w: float
    dpv_per_w: float
    q_max: float

    def margin_at(self, Q):
        """Capillary pressure left over when transporting ``Q`` watts [Pa]."""
        return self.dp_cap - Q * (self.dpl_per_w + self.dpv_per_w)


@dataclass(frozen=True)
class SweepResult:
    rows: tuple

    @property
    def temperatures(self):
        return [r.T for r in self.rows]

    @property
    def q_max(self):
        return [r.q_max for r in self.rows]


def _check_wick(geometry, wick):
    if not math.isclose(geometry.wick_thickness, wick.thickness, rel_tol=1e-12):
        raise ValueError("geometry and wick disagree on the wick thickness")


def solve_fields(geometry, wick, fluid, grid, Q, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    """Liquid and vapour pressure fields at power ``Q``, re-referenced to p_sat."""
    _check_wick(geometry, wick)
    flux = phase_change_flux(grid, geometry, Q, fluid.h_fg)
    p_l = liquid_pressure(grid, flux, fluid, wick, rel_tol, max_iter)
    p_v = vapor_pressure(grid, flux, fluid, geometry.vapor_thickness, rel_tol, max_iter)
    return rereference(p_l, p_v, fluid, geometry)


def q_max(geometry, wick, T, grid, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    fluid = saturation_properties(T)
    dp_cap = wick.capillary_pressure(fluid.sigma)
    p_l, p_v = solve_fields(geometry, wick, fluid, grid, REFERENCE_POWER, rel_tol, max_iter)
    drops = pressure_drops(p_l, p_v)
    dpl, dpv = drops.dp_l / REFERENCE_POWER, drops.dp_v / REFERENCE_POWER
    if dpl + dpv == 0.0:
        raise ZeroDrop("liquid and vapour pressure drops vanish; geometry is degenerate")
    return CapillaryReport(fluid.temperature, dp_cap, dpl, dpv, dp_cap / (dpl + dpv))


def q_max_bisection(geometry, wick, T, grid, q_hi, tol=0.01, rel_tol=DEFAULT_REL_TOL,
                    max_iter=None):
    """Maximum power by bisection on the capillary margin, re-solving at every probe.

    Kept as an independent check on the linear scaling used by ``q_max``.
    """
    fluid = saturation_properties(T)
    dp_cap = wick.capillary_pressure(fluid.sigma)

    def margin(Q):
        p_l, p_v = solve_fields(geometry, wick, fluid, grid, Q, rel_tol, max_iter)
        return dp_cap - pressure_drops(p_l, p_v).total

    if margin(0.0) <= 0.0:
        return 0.0
    if margin(q_hi) >= 0.0:
        raise BracketFailure(f"capillary margin is still non-negative at q_hi = {q_hi} W")
    lo, hi = 0.0, float(q_hi)
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def is_strip_layout(geometry):
    L, W = geometry.length, geometry.width
    tol = 1e-9 * max(L, W)

    def full_width(fp):
        return abs(fp.y0) <= tol and abs(fp.width - W) <= tol

    def at_start(fp):
        return abs(fp.x0) <= tol

    def at_end(fp):
        return abs(fp.x1 - L) <= tol

    e, c = geometry.evaporator, geometry.condenser
    return (full_width(e) and full_width(c)
            and ((at_start(e) and at_end(c)) or (at_start(c) and at_end(e))))


def effective_length(geometry):
    le, lc = geometry.evaporator.length, geometry.condenser.length
    return (geometry.length - le - lc) + 0.5 * (le + lc)


def drops_per_watt_1d(geometry, wick, fluid):
    """Closed-form liquid and vapour pressure drops per watt for end strips [Pa/W]."""
    if not is_strip_layout(geometry):
        raise NotStripLayout("1D model needs full-width footprints flush with opposite ends")
    L_eff, W = effective_length(geometry), geometry.width
    h_v = geometry.vapor_thickness
    dpl = fluid.mu_l * L_eff / (fluid.rho_l * wick.permeability * W * wick.thickness * fluid.h_fg)
    dpv = 12.0 * fluid.mu_v * L_eff / (fluid.rho_v * W * h_v**3 * fluid.h_fg)
    return dpl, dpv


def q_max_1d(geometry, wick, T):
    fluid = saturation_properties(T)
    dpl, dpv = drops_per_watt_1d(geometry, wick, fluid)
    return wick.capillary_pressure(fluid.sigma) / (dpl + dpv)


def sweep_temperature(geometry, wick, T_list, grid, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    T_list = [float(t) for t in T_list]
    if not T_list:
        raise EmptyList("temperature list is empty")
    if any(b <= a for a, b in zip(T_list, T_list[1:])):
        raise ValueError("temperatures must be strictly increasing")
    for T in T_list:
        saturation_properties(T)  # range check before any solve
    return SweepResult(tuple(q_max(geometry, wick, T, grid, rel_tol, max_iter)
                             for T in T_list))
