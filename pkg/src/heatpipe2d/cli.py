"""Command line front end: ``props``, ``qmax``, ``sweep`` and ``field``.

Exit status is 0 on success, 1 on a usage or configuration error and 2 when
a model computation fails.
"""

import argparse
import json
import math
import sys

from .config import load_config, with_grid
from .domain import build_grid
from .errors import ConfigError, HeatPipeError
from .fluids import saturation_properties
from .limits import is_strip_layout, q_max, q_max_1d, solve_fields, sweep_temperature

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

PROPS_COLUMNS = ["T_C", "sigma_N_per_m", "rho_l", "mu_l", "rho_v", "mu_v",
                 "h_fg_J_per_kg", "p_sat_Pa"]
QMAX_COLUMNS = ["T_C", "dp_cap_Pa", "dpl_per_W", "dpv_per_W", "q_max_W"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def fmt(value):
    """Render a number with 9 significant digits."""
    return f"{value:.9g}"


def _num(value):
    return float(fmt(value))


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value configuration file")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--grid", nargs=2, type=int, metavar=("NX", "NY"),
                        help="override grid_nx and grid_ny")

    parser = _Parser(
        prog="heatpipe2d",
        description="Capillary limit of a thin flat heat pipe with a sintered-sphere wick. "
                    "Default wick parameters are a calibration: the sphere diameter is "
                    "chosen so that the maximum power at 60 degC is 21 W.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("props", parents=[common], help="saturated water properties")
    p.add_argument("--temp", type=float, required=True, help="temperature [degC]")

    p = sub.add_parser("qmax", parents=[common], help="capillary-limited maximum power")
    p.add_argument("--temp", type=float, required=True, help="working temperature [degC]")

    p = sub.add_parser("sweep", parents=[common], help="maximum power over a temperature range")
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--tstep", type=float, required=True)
    p.add_argument("--plot", metavar="PATH", help="also save a q_max(T) figure")

    p = sub.add_parser("field", parents=[common], help="absolute pressure field export")
    p.add_argument("--temp", type=float, required=True, help="working temperature [degC]")
    p.add_argument("--power", type=float, required=True, help="heat power [W]")
    p.add_argument("--phase", choices=("liquid", "vapor"), required=True)
    p.add_argument("--plot", metavar="PATH", help="also save a contour figure of the field")
    return parser


def sweep_temperatures(tmin, tmax, tstep):
    if not tstep > 0:
        raise UsageError("--tstep must be positive")
    if tmax < tmin:
        raise UsageError("--tmax must not be below --tmin")
    n = int(math.floor((tmax - tmin) / tstep + 1e-9)) + 1
    return [tmin + k * tstep for k in range(n)]


def _table(columns, rows, form):
    if form == "json":
        return json.dumps([dict(zip(columns, map(_num, row))) for row in rows], indent=1) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _report_row(r):
    return (r.T, r.dp_cap, r.dpl_per_w, r.dpv_per_w, r.q_max)


def _field_text(grid, args, values, form):
    header = dict(nx=grid.nx, ny=grid.ny, dx_m=grid.dx, dy_m=grid.dy, phase=args.phase,
                  T_C=args.temp, Q_W=args.power)
    if form == "json":
        doc = {k: (_num(v) if isinstance(v, float) else v) for k, v in header.items()}
        doc["x_m"] = [_num(v) for v in grid.x]
        doc["y_m"] = [_num(v) for v in grid.y]
        doc["pressure_Pa"] = [[_num(v) for v in row] for row in values]
        return json.dumps(doc) + "\n"
    parts = [f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in header.items()]
    lines = ["# " + " ".join(parts), ",".join(fmt(v) for v in grid.x)]
    for yj, row in zip(grid.y, values):
        lines.append(",".join([fmt(yj)] + [fmt(v) for v in row]))
    return "\n".join(lines) + "\n"


def run(args):
    """Execute a parsed command and return the text to emit."""
    if args.command == "props":
        f = saturation_properties(args.temp)
        row = (f.temperature, f.sigma, f.rho_l, f.mu_l, f.rho_v, f.mu_v, f.h_fg, f.p_sat)
        return _table(PROPS_COLUMNS, [row], args.format)

    config = load_config(args.config)
    if args.grid:
        config = with_grid(config, *args.grid)
    geometry, wick = config.geometry(), config.wick()
    grid = build_grid(geometry, config.grid_nx, config.grid_ny)
    solver = dict(rel_tol=config.solver_rel_tol, max_iter=config.solver_max_iter)

    if args.command == "qmax":
        report = q_max(geometry, wick, args.temp, grid, **solver)
        return _table(QMAX_COLUMNS, [_report_row(report)], args.format)

    if args.command == "sweep":
        temps = sweep_temperatures(args.tmin, args.tmax, args.tstep)
        result = sweep_temperature(geometry, wick, temps, grid, **solver)
        if args.plot:
            from .plotting import plot_sweep
            q_1d = ([q_max_1d(geometry, wick, T) for T in temps]
                    if is_strip_layout(geometry) else None)
            plot_sweep(result, args.plot, q_1d)
        return _table(QMAX_COLUMNS, [_report_row(r) for r in result.rows], args.format)

    if args.command == "field":
        if args.power < 0:
            raise UsageError("--power must be non-negative")
        fluid = saturation_properties(args.temp)
        p_l, p_v = solve_fields(geometry, wick, fluid, grid, args.power, **solver)
        values = (p_l if args.phase == "liquid" else p_v).values
        if args.plot:
            from .plotting import plot_field
            plot_field(grid, values, args.plot, args.phase, geometry)
        return _field_text(grid, args, values, args.format)

    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        text = run(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HeatPipeError as exc:
        print(f"error [{exc.module}]: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
