"""Theta-scheme finite differences for the transformed equation.

Since d/dz(z u) = u + z u_z, the equation is advanced in evolution form

    u_z = [2 u_yy + (y + 2(k1-1) z) u_y - (2 k2 z^2 + 1) u] / z,

which is singular at z = 0, so every run starts at z_start > 0. Second-order
central differences in y, Dirichlet values at both ends from a caller-supplied
source, and one tridiagonal solve per step.
"""
import logging
from typing import Callable, Optional, Tuple

import numpy as np

from ..errors import InstabilityError, SingularTimeError
from ..kernel.params import ParamSet
from .grid import Grid, GridSolution
from .tridiagonal import thomas_solve

logger = logging.getLogger(__name__)

Source = Callable[[object, float], object]


def evolution_form(params: ParamSet, y, z: float, u, u_y, u_yy):
    if z <= 0:
        raise SingularTimeError(f"evolution form is singular at z={z}")
    k1, k2 = params.as_floats()
    return (2.0 * u_yy + (y + 2.0 * (k1 - 1.0) * z) * u_y - (2.0 * k2 * z * z + 1.0) * u) / z


def _operator(params: ParamSet, y_inner: np.ndarray, dy: float, z: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rows of the discrete right-hand side at interior points: (lower, diag, upper)."""
    if z <= 0:
        raise SingularTimeError(f"evolution form is singular at z={z}")
    k1, k2 = params.as_floats()
    velocity = y_inner + 2.0 * (k1 - 1.0) * z
    diffusion = 2.0 / (dy * dy)
    lower = (diffusion - velocity / (2.0 * dy)) / z
    upper = (diffusion + velocity / (2.0 * dy)) / z
    diag = np.full_like(y_inner, (-2.0 * diffusion - (2.0 * k2 * z * z + 1.0)) / z)
    return lower, diag, upper


def _edge(source: Source, y: float, z: float) -> float:
    return float(np.squeeze(source(y, z)))


def _theta_step(params, grid, y_inner, u, z_old, h, theta, source) -> np.ndarray:
    z_new = z_old + h
    lower, diag, upper = _operator(params, y_inner, grid.dy, z_new)

    rhs = u[1:-1].copy()
    if theta < 1.0:
        lo, di, up = _operator(params, y_inner, grid.dy, z_old)
        rhs += (1.0 - theta) * h * (lo * u[:-2] + di * u[1:-1] + up * u[2:])

    left = _edge(source, grid.y_min, z_new)
    right = _edge(source, grid.y_max, z_new)
    rhs[0] += theta * h * lower[0] * left
    rhs[-1] += theta * h * upper[-1] * right

    inner = thomas_solve(-theta * h * lower, 1.0 - theta * h * diag, -theta * h * upper, rhs)
    return np.concatenate(([left], inner, [right]))


def fd_solve(
    params: ParamSet,
    initial_slice,
    grid: Grid,
    boundary_source: Source,
    theta: float = 0.5,
    damping_steps: int = 0,
    retain_every: int = 1,
) -> GridSolution:
    """Advance the initial slice from z_start to z_end.

    The first `damping_steps` steps are each taken as two backward-Euler half
    steps, which removes the undamped high-frequency response of theta = 1/2
    to incompatible initial and boundary data.
    """
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    if retain_every < 1:
        raise ValueError(f"retain_every must be positive, got {retain_every}")
    u = np.array(initial_slice, dtype=float)
    if u.shape != (grid.ny,):
        raise ValueError(f"initial slice has shape {u.shape}, expected ({grid.ny},)")
    if not np.all(np.isfinite(u)):
        raise InstabilityError(0, grid.z_start)

    y_inner = grid.y_values[1:-1]
    h = grid.dz
    levels = [grid.z_start]
    slices = [u.copy()]
    for step in range(1, grid.nz + 1):
        z_old = grid.z_at(step - 1)
        if step <= damping_steps:
            u = _theta_step(params, grid, y_inner, u, z_old, 0.5 * h, 1.0, boundary_source)
            u = _theta_step(params, grid, y_inner, u, z_old + 0.5 * h, 0.5 * h, 1.0, boundary_source)
        else:
            u = _theta_step(params, grid, y_inner, u, z_old, h, theta, boundary_source)
        if not np.all(np.isfinite(u)):
            raise InstabilityError(step, grid.z_at(step))
        if step % retain_every == 0 or step == grid.nz:
            levels.append(grid.z_at(step))
            slices.append(u.copy())

    logger.info(
        "oracle advanced %d steps (dz=%.3g, ny=%d, theta=%.2f) to z=%.4g",
        grid.nz, h, grid.ny, theta, grid.z_end,
    )
    return GridSolution(grid=grid, params=params, z_levels=np.array(levels), slices=np.array(slices), theta=theta)


def solve_from_source(params: ParamSet, grid: Grid, source: Source, **kwargs) -> GridSolution:
    """Initial slice and Dirichlet data both sampled from `source(y, z)`."""
    initial = np.asarray(source(grid.y_values, grid.z_start), dtype=float)
    return fd_solve(params, initial, grid, source, **kwargs)


def frozen_boundary(profile: Callable) -> Source:
    """Dirichlet source holding the initial profile's edge values for all z."""
    def source(y, z):
        return profile(y)

    return source
