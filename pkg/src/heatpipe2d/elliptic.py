"""Pure-Neumann Poisson solver on a uniform cell-centred grid.

Discretisation is the 5-point Laplacian with mirrored ghost cells, so every
boundary face carries zero flux. The operator is singular (constants span its
null space); conjugate gradients run on the mean-free subspace by projecting
the residual after every update.
"""

import logging

import numpy as np

from .errors import IncompatibleSource, NoConvergence

log = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-10
COMPATIBILITY_TOL = 1e-10


def laplacian(u, dx, dy):
    """Cell-centred 5-point Laplacian of ``u[j, i]`` with zero-flux walls."""
    up = np.pad(u, 1, mode="edge")
    c = up[1:-1, 1:-1]
    return ((up[1:-1, 2:] - 2.0 * c + up[1:-1, :-2]) / dx**2
            + (up[2:, 1:-1] - 2.0 * c + up[:-2, 1:-1]) / dy**2)


def default_max_iter(grid):
    return 50 * (grid.nx + grid.ny)


def _check_compatible(source, cell_area):
    net = abs(source.sum()) * cell_area
    gross = np.abs(source).sum() * cell_area
    if net > COMPATIBILITY_TOL * gross:
        raise IncompatibleSource(
            f"source integrates to {net:.3e}, more than {COMPATIBILITY_TOL:g} of its "
            f"absolute integral {gross:.3e}; the Neumann problem has no solution")


def solve_poisson_neumann(grid, source, rel_tol=DEFAULT_REL_TOL, max_iter=None):
    """Solve lap(u) = source with zero-flux boundaries; return the zero-mean ``u``.

    Convergence is declared when the 2-norm of the true residual falls to
    ``rel_tol`` times the 2-norm of the (mean-projected) source.
    """
    source = np.asarray(source, dtype=float)
    if source.shape != grid.shape:
        raise ValueError(f"source shape {source.shape} does not match grid {grid.shape}")
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    if max_iter is None:
        max_iter = default_max_iter(grid)
    _check_compatible(source, grid.cell_area)

    dx, dy = grid.dx, grid.dy
    # CG on the SPD-on-mean-free-subspace operator A = -lap.
    b = -(source - source.mean())
    bnorm = np.sqrt(np.vdot(b, b))
    u = np.zeros(grid.shape)
    if bnorm == 0.0:
        return u
    target = rel_tol * bnorm

    r = b.copy()
    p = r.copy()
    rr = np.vdot(r, r)
    for it in range(1, max_iter + 1):
        Ap = -laplacian(p, dx, dy)
        alpha = rr / np.vdot(p, Ap)
        u += alpha * p
        r -= alpha * Ap
        r -= r.mean()
        rr_new = np.vdot(r, r)
        if np.sqrt(rr_new) <= target:
            # Recursive residual can drift; confirm against the true one.
            r = b + laplacian(u, dx, dy)
            r -= r.mean()
            rr_new = np.vdot(r, r)
            if np.sqrt(rr_new) <= target:
                log.debug("CG converged in %d iterations, residual %.3e", it,
                          np.sqrt(rr_new) / bnorm)
                return u - u.mean()
            p = r.copy()
            rr = rr_new
            continue
        p = r + (rr_new / rr) * p
        rr = rr_new
    raise NoConvergence(
        f"CG reached {max_iter} iterations with relative residual "
        f"{np.sqrt(rr) / bnorm:.3e} > {rel_tol:g}")
