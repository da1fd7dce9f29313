"""Flat ``key = value`` run configuration.

All keys are SI, with the unit in the key name. Missing keys take the
defaults below, which describe the 44 x 30 mm test pipe with the wick
calibrated to 21 W at 60 degC.
"""

import math
from dataclasses import dataclass, fields, replace

from .domain import Footprint, Geometry
from .errors import HeatPipeError, InvalidValue, MalformedLine, UnknownKey
from .wick import WickSpec


@dataclass(frozen=True)
class Config:
    # geometry
    length_m: float = 0.044
    width_m: float = 0.030
    wick_thickness_m: float = 0.7e-3
    vapor_thickness_m: float = 0.3e-3
    wall_thickness_m: float = 0.8e-3
    evap_x0_m: float = 0.0
    evap_y0_m: float = 0.0
    evap_length_m: float = 0.010
    evap_width_m: float = 0.030
    cond_x0_m: float = 0.034
    cond_y0_m: float = 0.0
    cond_length_m: float = 0.010
    cond_width_m: float = 0.030
    # wick; sphere diameter solved so that q_max(60 degC) = 21 W
    sphere_diameter_m: float = 9.33e-6
    porosity: float = 0.4
    wetting_angle_deg: float = 10.0
    pore_radius_factor: float = 0.21
    kozeny_constant: float = 150.0
    # numerics; solver_max_iter None means 50 * (nx + ny)
    grid_nx: int = 176
    grid_ny: int = 120
    solver_rel_tol: float = 1e-10
    solver_max_iter: int | None = None

    def geometry(self):
        return Geometry(
            length=self.length_m, width=self.width_m,
            wick_thickness=self.wick_thickness_m, vapor_thickness=self.vapor_thickness_m,
            wall_thickness=self.wall_thickness_m,
            evaporator=Footprint(self.evap_x0_m, self.evap_y0_m,
                                 self.evap_length_m, self.evap_width_m),
            condenser=Footprint(self.cond_x0_m, self.cond_y0_m,
                                self.cond_length_m, self.cond_width_m),
        )

    def wick(self):
        return WickSpec(
            sphere_diameter=self.sphere_diameter_m, porosity=self.porosity,
            thickness=self.wick_thickness_m, wetting_angle=self.wetting_angle_deg,
            pore_radius_factor=self.pore_radius_factor,
            kozeny_constant=self.kozeny_constant,
        )


KEYS = {f.name: f for f in fields(Config)}
_INT_KEYS = {"grid_nx", "grid_ny", "solver_max_iter"}
_NONNEGATIVE = {"evap_x0_m", "evap_y0_m", "cond_x0_m", "cond_y0_m", "wetting_angle_deg"}


def _check(key, value):
    """Return an error message when ``value`` is invalid for ``key``."""
    if key == "porosity":
        return None if 0.0 < value < 1.0 else "porosity must lie in (0, 1)"
    if key == "wetting_angle_deg":
        return None if 0.0 <= value < 90.0 else "wetting angle must lie in [0, 90)"
    if key in ("grid_nx", "grid_ny"):
        return None if value >= 2 else "grid needs at least 2 cells per direction"
    if key in _NONNEGATIVE:
        return None if value >= 0.0 else f"{key} must be non-negative"
    return None if value > 0 else f"{key} must be positive"


def _convert(key, text):
    if key == "solver_max_iter" and text.lower() == "auto":
        return None
    if key in _INT_KEYS:
        return int(text)
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(text)
    return value


def parse_config(text):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = (part.strip() for part in line.partition("="))
        if not sep or not key or not val:
            raise MalformedLine(f"expected 'key = value', got {raw.strip()!r}", lineno)
        if key not in KEYS:
            raise UnknownKey(f"unknown key {key!r}", lineno)
        try:
            value = _convert(key, val)
        except ValueError:
            raise InvalidValue(f"{key}: cannot read {val!r} as a number", lineno) from None
        if value is not None:
            problem = _check(key, value)
            if problem:
                raise InvalidValue(f"{problem}, got {val}", lineno)
        values[key] = value
    config = Config(**values)
    try:
        config.geometry()
    except HeatPipeError as exc:
        raise InvalidValue(str(exc)) from None
    return config


def render_config(config):
    lines = []
    for key in KEYS:
        value = getattr(config, key)
        lines.append(f"{key} = {'auto' if value is None else repr(value)}")
    return "\n".join(lines) + "\n"


def load_config(path=None):
    if path is None:
        return Config()
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def with_grid(config, nx, ny):
    for key, n in (("grid_nx", nx), ("grid_ny", ny)):
        if _check(key, n):
            raise InvalidValue(_check(key, n))
    return replace(config, grid_nx=nx, grid_ny=ny)
