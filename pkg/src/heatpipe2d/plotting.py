"""Figures written next to the tabular output of the command line tool."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def plot_sweep(result, path, q_1d=None):
    """Maximum heat power against working temperature."""
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.plot(result.temperatures, result.q_max, "o-", color="k", label="2D model")
    if q_1d is not None:
        ax.plot(result.temperatures, q_1d, "s--", color="0.5", mfc="none", label="1D model")
        ax.legend(frameon=False)
    ax.set_xlabel("working temperature [°C]")
    ax.set_ylabel("maximum heat power [W]")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_field(grid, pressure, path, phase, geometry=None):
    """Absolute pressure over the planform, lengths in mm."""
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    x, y = grid.x * 1e3, grid.y * 1e3
    levels = 30 if np.ptp(pressure) > 0 else None
    cs = ax.contourf(x, y, pressure, levels=levels, cmap="viridis")
    fig.colorbar(cs, ax=ax, label=f"{phase} pressure [Pa]")
    if geometry is not None:
        for fp, style in ((geometry.evaporator, "r-"), (geometry.condenser, "b-")):
            xs = np.array([fp.x0, fp.x1, fp.x1, fp.x0, fp.x0]) * 1e3
            ys = np.array([fp.y0, fp.y0, fp.y1, fp.y1, fp.y0]) * 1e3
            ax.plot(xs, ys, style, lw=1.0)
    ax.set_aspect("equal")
    ax.set_xlabel("x [mm]")
    ax.set_ylabel("y [mm]")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
