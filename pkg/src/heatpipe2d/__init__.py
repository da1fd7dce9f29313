"""Hydrodynamic capillary-limit model of thin flat heat pipes with sintered wicks."""

from .domain import Footprint, Geometry, Grid, build_grid, phase_change_flux, table1_geometry
from .elliptic import solve_poisson_neumann
from .fluids import FluidState, saturation_properties
from .hydro import (PressureDrops, PressureField, liquid_pressure, pressure_drops,
                    rereference, vapor_pressure)
from .limits import (CapillaryReport, SweepResult, q_max, q_max_1d, q_max_bisection,
                     sweep_temperature)
from .wick import WickSpec, capillary_pressure, effective_pore_radius, permeability

__version__ = "0.1.0"
