"""Saturated water properties as a function of working temperature.

Values are tabulated every 5 degC between 10 and 95 degC and linearly
interpolated in between. Node values come from the IAPWS-IF97 saturation
formulation (viscosity after IAPWS 2008, surface tension after IAPWS 1994),
rounded to the precision of a printed steam table.
"""

from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange

T_MIN = 10.0
T_MAX = 95.0

# T [degC], sigma [N/m], rho_l [kg/m3], mu_l [Pa s], rho_v [kg/m3], mu_v [Pa s],
# h_fg [J/kg], p_sat [Pa]
_TABLE = np.array([
    (10.0, 0.07422, 999.7, 1.306e-3, 9.407e-3, 9.238e-6, 2.477e6, 1228.0),
    (15.0, 0.07349, 999.1, 1.138e-3, 1.284e-2, 9.390e-6, 2.465e6, 1706.0),
    (20.0, 0.07274, 998.2, 1.002e-3, 1.731e-2, 9.544e-6, 2.454e6, 2339.0),
    (25.0, 0.07197, 997.0, 8.900e-4, 2.307e-2, 9.701e-6, 2.442e6, 3170.0),
    (30.0, 0.07119, 995.6, 7.972e-4, 3.041e-2, 9.860e-6, 2.430e6, 4247.0),
    (35.0, 0.07040, 994.0, 7.191e-4, 3.967e-2, 1.002e-5, 2.418e6, 5629.0),
    (40.0, 0.06960, 992.2, 6.527e-4, 5.124e-2, 1.018e-5, 2.406e6, 7384.0),
    (45.0, 0.06878, 990.2, 5.958e-4, 6.556e-2, 1.035e-5, 2.394e6, 9594.0),
    (50.0, 0.06794, 988.0, 5.465e-4, 8.314e-2, 1.052e-5, 2.382e6, 12351.0),
    (55.0, 0.06710, 985.7, 5.036e-4, 1.045e-1, 1.068e-5, 2.370e6, 15761.0),
    (60.0, 0.06624, 983.2, 4.660e-4, 1.304e-1, 1.085e-5, 2.358e6, 19946.0),
    (65.0, 0.06537, 980.5, 4.329e-4, 1.615e-1, 1.102e-5, 2.345e6, 25041.0),
    (70.0, 0.06448, 977.7, 4.035e-4, 1.984e-1, 1.119e-5, 2.333e6, 31201.0),
    (75.0, 0.06358, 974.8, 3.774e-4, 2.422e-1, 1.137e-5, 2.321e6, 38595.0),
    (80.0, 0.06267, 971.8, 3.540e-4, 2.937e-1, 1.154e-5, 2.308e6, 47415.0),
    (85.0, 0.06175, 968.6, 3.331e-4, 3.539e-1, 1.171e-5, 2.295e6, 57867.0),
    (90.0, 0.06082, 965.3, 3.142e-4, 4.239e-1, 1.189e-5, 2.283e6, 70182.0),
    (95.0, 0.05987, 961.9, 2.971e-4, 5.049e-1, 1.206e-5, 2.270e6, 84609.0),
])
_TABLE.setflags(write=False)

NODE_TEMPERATURES = tuple(float(t) for t in _TABLE[:, 0])


@dataclass(frozen=True)
class FluidState:
    """Saturated water at one temperature (SI units, temperature in degC)."""

    temperature: float
    sigma: float
    rho_l: float
    mu_l: float
    rho_v: float
    mu_v: float
    h_fg: float
    p_sat: float


def saturation_properties(T):
    """Return the saturated-water state at ``T`` degC, valid on [10, 95]."""
    T = float(T)
    if not T_MIN <= T <= T_MAX:
        raise OutOfRange(f"temperature {T} degC outside [{T_MIN}, {T_MAX}]")
    temps = _TABLE[:, 0]
    k = int(np.searchsorted(temps, T, side="right")) - 1
    if temps[k] == T:
        row = _TABLE[k]
    else:
        w = (T - temps[k]) / (temps[k + 1] - temps[k])
        row = _TABLE[k] + w * (_TABLE[k + 1] - _TABLE[k])
    return FluidState(T, *(float(v) for v in row[1:]))
