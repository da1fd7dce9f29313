"""Exit criteria for the model, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import math
import time

import numpy as np
import pytest

from _helpers import make_geometry, strip_geometry
from conftest import CALIBRATION_FILE
from heatpipe2d.cli import main
from heatpipe2d.config import load_config
from heatpipe2d.domain import Footprint, Grid, build_grid, phase_change_flux
from heatpipe2d.elliptic import solve_poisson_neumann
from heatpipe2d.fluids import saturation_properties
from heatpipe2d.hydro import pressure_drops
from heatpipe2d.limits import q_max, q_max_1d, q_max_bisection, solve_fields
from heatpipe2d.wick import WickSpec, capillary_pressure


@pytest.fixture
def record(acceptance_log):
    def _record(number, text, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {text}"
        if detail:
            line += f"  [{detail}]"
        acceptance_log.append(line)
        print(line)
        assert ok, line
    return _record


def random_configuration(rng):
    """A valid (geometry, wick, T) with footprints anywhere in the planform."""
    L, W = rng.uniform(0.025, 0.07), rng.uniform(0.015, 0.045)
    split = rng.uniform(0.35, 0.65) * L
    ex0 = rng.uniform(0.0, 0.3) * split
    evap = Footprint(ex0, rng.uniform(0, 0.3) * W, rng.uniform(0.3, 1.0) * (split - ex0),
                     rng.uniform(0.4, 0.7) * W)
    cx0 = split + rng.uniform(0.0, 0.3) * (L - split)
    cond = Footprint(cx0, rng.uniform(0, 0.3) * W, rng.uniform(0.3, 1.0) * (L - cx0),
                     rng.uniform(0.4, 0.7) * W)
    h_w = rng.uniform(0.3e-3, 0.8e-3)
    h_v = rng.uniform(0.15e-3, 1e-3 - h_w)
    geom = make_geometry(L, W, h_w, h_v, evap, cond)
    wick = WickSpec(rng.uniform(5e-6, 150e-6), rng.uniform(0.3, 0.65), h_w,
                    rng.uniform(0.0, 45.0))
    return geom, wick, rng.uniform(30.0, 80.0)


def _q_from_row(text):
    return float(text.strip().split("\n")[1].split(",")[-1])


def test_criterion_01_calibrated_reference_point(record, capsys):
    t0 = time.perf_counter()
    code = main(["qmax", "--temp", "60", "--config", str(CALIBRATION_FILE)])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    q = _q_from_row(out)
    cfg = load_config(CALIBRATION_FILE)
    ok = code == 0 and abs(q - 21.0) <= 0.05 * 21.0 and elapsed < 10.0
    record(1, "calibrated qmax at 60 C is 21 W +/- 5%, under 10 s", ok,
           f"q_max={q:.4g} W, d_s={cfg.sphere_diameter_m:g} m, eps={cfg.porosity}, "
           f"{elapsed:.2f} s")


def test_criterion_02_temperature_trend(record, capsys):
    t0 = time.perf_counter()
    code = main(["sweep", "--tmin", "30", "--tmax", "80", "--tstep", "10",
                 "--config", str(CALIBRATION_FILE)])
    elapsed = time.perf_counter() - t0
    rows = [line.split(",") for line in capsys.readouterr().out.strip().split("\n")[1:]]
    temps = [float(r[0]) for r in rows]
    q = [float(r[-1]) for r in rows]
    cfg = load_config(CALIBRATION_FILE)
    q1 = [q_max_1d(cfg.geometry(), cfg.wick(), T) for T in temps]
    ok = (code == 0 and temps == [30, 40, 50, 60, 70, 80]
          and all(b > a for a, b in zip(q, q[1:]))
          and all(b > a for a, b in zip(q1, q1[1:])) and elapsed < 60.0)
    record(2, "q_max strictly increasing over 30-80 C (2D and 1D), under 60 s", ok,
           "q_max=" + ",".join(f"{v:.3g}" for v in q) + f", {elapsed:.2f} s")


def test_criterion_03_linearity(record):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(10):
        geom, wick, T = random_configuration(rng)
        fluid = saturation_properties(T)
        grid = build_grid(geom, 176, 120)
        d1 = pressure_drops(*solve_fields(geom, wick, fluid, grid, 1.0)).total
        d2 = pressure_drops(*solve_fields(geom, wick, fluid, grid, 2.0)).total
        worst = max(worst, abs(d2 - 2 * d1) / (2 * d1))
    record(3, "drop(2 W) = 2 drop(1 W) within 1e-9, 10 random configurations",
           worst <= 1e-9, f"worst rel. deviation {worst:.1e}")


def test_criterion_04_mass_compatibility(record):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(300):
        geom, _, T = random_configuration(rng)
        h_fg = saturation_properties(T).h_fg
        Q = rng.uniform(0.1, 100.0)
        grid = build_grid(geom, int(rng.integers(2, 200)), int(rng.integers(2, 200)))
        f = phase_change_flux(grid, geom, Q, h_fg)
        worst = max(worst, abs(f.values.sum() * grid.cell_area) / (Q / h_fg))
    record(4, "|sum m'' dx dy| <= 1e-12 Q/h_fg, 300 random footprints and grids",
           worst <= 1e-12, f"worst {worst:.1e}")


def _dense_reference(grid, source):
    n = grid.nx * grid.ny
    A = np.zeros((n, n))
    for j in range(grid.ny):
        for i in range(grid.nx):
            k = j * grid.nx + i
            for di, dj, h in ((1, 0, grid.dx), (-1, 0, grid.dx), (0, 1, grid.dy), (0, -1, grid.dy)):
                if 0 <= i + di < grid.nx and 0 <= j + dj < grid.ny:
                    A[k, k] -= h**-2
                    A[k, (j + dj) * grid.nx + i + di] += h**-2
    u = np.linalg.lstsq(A, source.ravel(), rcond=None)[0]
    return (u - u.mean()).reshape(grid.shape)


def test_criterion_05_dense_solver_oracle(record):
    rng = np.random.default_rng(5)
    worst = 0.0
    for nx in range(2, 9):
        for ny in range(2, 7):
            grid = Grid(nx, ny, float(nx), float(ny) * rng.uniform(0.5, 2.0))
            for _ in range(3):
                s = rng.standard_normal(grid.shape)
                s -= s.mean()
                # default rel_tol=1e-10 leaves errors near 1e-10 on unit-spaced
                # grids; the comparison asks for the converged discrete solution
                u = solve_poisson_neumann(grid, s, rel_tol=1e-12)
                worst = max(worst, np.abs(u - _dense_reference(grid, s)).max())
    record(5, "CG matches dense direct solve to 1e-10 max-abs on grids up to 8x6",
           worst <= 1e-10, f"worst {worst:.1e}")


def test_criterion_06_manufactured_convergence(record):
    L, W = 0.044, 0.030
    errs = []
    for nx, ny in ((22, 15), (44, 30), (88, 60), (176, 120)):
        grid = Grid(nx, ny, L, W)
        X, Y = np.meshgrid(grid.x, grid.y)
        s = np.cos(np.pi * X / L) * np.cos(np.pi * Y / W)
        exact = -s / (np.pi**2 * (1 / L**2 + 1 / W**2))
        u = solve_poisson_neumann(grid, s)
        errs.append(np.abs(u - exact).max() / np.abs(exact).max())
    orders = [math.log2(a / b) for a, b in zip(errs, errs[1:])]
    ok = all(1.8 <= p <= 2.2 for p in orders) and errs[-1] < 1e-3
    record(6, "manufactured solution: order in [1.8, 2.2], error at 176x120 < 1e-3", ok,
           "orders=" + ",".join(f"{p:.3f}" for p in orders) + f", err={errs[-1]:.1e}")


def test_criterion_07_one_d_equivalence(record):
    wick = load_config(CALIBRATION_FILE).wick()
    grids = ((44, 30), (88, 60), (176, 120), (352, 240))
    # Cell-aligned strips reproduce the 1D spans to round-off on every grid, so
    # "improving" is judged above a floor far below any discretisation error.
    floor = 1e-9
    details, ok = [], True
    for label, geom in (("default strips", strip_geometry()),
                        ("unaligned strips", strip_geometry(le=0.0101, lc=0.0093))):
        q1 = q_max_1d(geom, wick, 60.0)
        errs = [abs(q_max(geom, wick, 60.0, build_grid(geom, *n)).q_max - q1) / q1
                for n in grids]
        ok &= errs[-1] <= 0.02
        ok &= all(b <= max(a, floor) for a, b in zip(errs, errs[1:]))
        details.append(f"{label}: " + ",".join(f"{e:.1e}" for e in errs))
    record(7, "2D q_max within 2% of 1D at 352x240, improving with refinement", ok,
           "; ".join(details))


def test_criterion_08_bisection_consistency(record):
    rng = np.random.default_rng(88)
    worst = 0.0
    for _ in range(5):
        geom, wick, T = random_configuration(rng)
        grid = build_grid(geom, 88, 60)
        q_lin = q_max(geom, wick, T, grid).q_max
        q_bis = q_max_bisection(geom, wick, T, grid, q_hi=1e4, tol=1e-3 * q_lin)
        worst = max(worst, abs(q_bis - q_lin) / q_lin)
    record(8, "bisection q_max agrees with linear scaling within 0.1%, 5 configurations",
           worst <= 1e-3, f"worst rel. deviation {worst:.1e}")


def test_criterion_09_laplace_young_properties(record):
    sigma, r = saturation_properties(60).sigma, 0.21 * 9.33e-6
    near_90 = capillary_pressure(sigma, 89.99, r)
    at_0 = capillary_pressure(sigma, 0.0, r)
    doubled = all(capillary_pressure(2 * s, th, r) == 2 * capillary_pressure(s, th, r)
                  for s in (0.0589, 0.0662, 0.0742) for th in (0.0, 10.0, 45.0, 89.0))
    ok = near_90 < 1e-3 * at_0 and doubled
    record(9, "dP_cap(89.99 deg) < 1e-3 dP_cap(0 deg); doubling sigma doubles dP_cap", ok,
           f"ratio {near_90 / at_0:.1e}")


def test_criterion_10_diameter_trade_off(record):
    cfg = load_config(CALIBRATION_FILE)
    geom = cfg.geometry()
    grid = build_grid(geom, cfg.grid_nx, cfg.grid_ny)
    d = np.geomspace(10e-6, 500e-6, 25)
    q = np.array([q_max(geom, WickSpec(di, cfg.porosity, cfg.wick_thickness_m,
                                       cfg.wetting_angle_deg), 60.0, grid).q_max for di in d])
    k = int(np.argmax(q))
    ok = (0 < k < len(d) - 1 and np.all(np.diff(q[:k + 1]) > 0)
          and np.all(np.diff(q[k:]) < 0))
    record(10, "q_max(d_s) on log scan 10-500 um is unimodal with interior maximum", ok,
           f"peak {q[k]:.4g} W at d_s={d[k] * 1e6:.3g} um")
