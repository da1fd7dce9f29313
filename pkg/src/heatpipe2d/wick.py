"""Sintered copper-sphere wick: pore radius, permeability, capillary pumping."""

import math
from dataclasses import dataclass

from .errors import AngleRange, NonPositive, PorosityRange

PORE_RADIUS_FACTOR = 0.21
KOZENY_CONSTANT = 150.0


def effective_pore_radius(d_s, factor=PORE_RADIUS_FACTOR):
    """Effective capillary radius of a sintered-sphere packing, ``factor * d_s``."""
    if not d_s > 0:
        raise NonPositive(f"sphere diameter must be positive, got {d_s}")
    return factor * d_s


def permeability(d_s, eps, kozeny=KOZENY_CONSTANT):
    """Blake-Kozeny permeability [m^2] of a packed bed of spheres."""
    if not d_s > 0:
        raise NonPositive(f"sphere diameter must be positive, got {d_s}")
    if not 0.0 < eps < 1.0:
        raise PorosityRange(f"porosity must lie in (0, 1), got {eps}")
    return d_s**2 * eps**3 / (kozeny * (1.0 - eps) ** 2)


def capillary_pressure(sigma, theta, r_eff):
    """Maximum capillary pressure 2 sigma cos(theta) / r_eff [Pa].

    ``theta`` is the wetting angle in degrees. 90 degrees and above are
    rejected: a non-wetting liquid cannot be pumped back by the wick.
    """
    if not sigma > 0:
        raise NonPositive(f"surface tension must be positive, got {sigma}")
    if not r_eff > 0:
        raise NonPositive(f"pore radius must be positive, got {r_eff}")
    if not 0.0 <= theta < 90.0:
        raise AngleRange(f"wetting angle must lie in [0, 90) degrees, got {theta}")
    return 2.0 * sigma * math.cos(math.radians(theta)) / r_eff


@dataclass(frozen=True)
class WickSpec:
    sphere_diameter: float
    porosity: float
    thickness: float
    wetting_angle: float = 10.0
    pore_radius_factor: float = PORE_RADIUS_FACTOR
    kozeny_constant: float = KOZENY_CONSTANT

    def __post_init__(self):
        if not self.sphere_diameter > 0:
            raise NonPositive(f"sphere diameter must be positive, got {self.sphere_diameter}")
        if not self.thickness > 0:
            raise NonPositive(f"wick thickness must be positive, got {self.thickness}")
        if not 0.0 < self.porosity < 1.0:
            raise PorosityRange(f"porosity must lie in (0, 1), got {self.porosity}")
        if not 0.0 <= self.wetting_angle < 90.0:
            raise AngleRange(f"wetting angle must lie in [0, 90), got {self.wetting_angle}")
        if not self.pore_radius_factor > 0:
            raise NonPositive("pore radius factor must be positive")
        if not self.kozeny_constant > 0:
            raise NonPositive("Kozeny constant must be positive")

    @property
    def r_eff(self):
        return effective_pore_radius(self.sphere_diameter, self.pore_radius_factor)

    @property
    def permeability(self):
        return permeability(self.sphere_diameter, self.porosity, self.kozeny_constant)

    def capillary_pressure(self, sigma):
        return capillary_pressure(sigma, self.wetting_angle, self.r_eff)
