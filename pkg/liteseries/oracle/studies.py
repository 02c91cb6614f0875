"""Series-versus-oracle comparisons and oracle self-checks."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..kernel.params import ParamSet
from ..kernel.series import SeriesSolution
from .fd_solver import Source, fd_solve, frozen_boundary, solve_from_source
from .grid import ErrorMetrics, Grid, GridSolution

logger = logging.getLogger(__name__)

METRIC_COLUMNS = ["N", "z", "max_abs", "rms"]


def _map(fn, items, max_workers: Optional[int]):
    if max_workers is not None and max_workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def compare(s: SeriesSolution, sol: GridSolution, z_eval: float) -> ErrorMetrics:
    """Deviation of the truncated series from the oracle at interior points of one retained level."""
    z, values = sol.slice_at(z_eval)
    y = sol.y[1:-1]
    deviation = np.abs(s.evaluate_array(y, z) - values[1:-1])
    i = int(np.argmax(deviation))
    return ErrorMetrics(
        max_abs=float(deviation[i]),
        rms=float(np.sqrt(np.mean(deviation ** 2))),
        at_point=(float(y[i]), z),
    )


def observed_order(
    params: ParamSet,
    initial_profile: Optional[Callable] = None,
    grid: Optional[Grid] = None,
    refinement_levels: int = 3,
    boundary_source: Optional[Source] = None,
    theta: float = 0.5,
    damping_steps: int = 2,
    max_workers: Optional[int] = None,
) -> float:
    """Empirical z-convergence rate from successive halvings of dz.

    With final slices u_h, u_h/2, u_h/4 of the finest three levels,
    p = log2(|u_h - u_h/2| / |u_h/2 - u_h/4|) in the max norm over interior points.
    """
    if refinement_levels < 3:
        raise ValueError(f"need at least 3 refinement levels, got {refinement_levels}")
    if initial_profile is None:
        initial_profile = lambda y: np.exp(-np.asarray(y, dtype=float) ** 2)
    if grid is None:
        grid = Grid(-5.0, 5.0, 101, 0.1, 0.6, 200)
    if boundary_source is None:
        boundary_source = frozen_boundary(initial_profile)
    initial = np.asarray(initial_profile(grid.y_values), dtype=float)

    def run(level: int) -> np.ndarray:
        fine = grid.refined(2 ** level)
        sol = fd_solve(params, initial, fine, boundary_source, theta=theta,
                       damping_steps=damping_steps, retain_every=fine.nz)
        return sol.final()

    finals = _map(run, list(range(refinement_levels)), max_workers)
    gaps = [float(np.max(np.abs(a[1:-1] - b[1:-1]))) for a, b in zip(finals, finals[1:])]
    logger.info("self-convergence gaps: %s", ", ".join(f"{g:.3e}" for g in gaps))
    coarse, fine_gap = gaps[-2], gaps[-1]
    if fine_gap == 0.0:
        return math.inf
    return math.log2(coarse / fine_gap)


@dataclass(frozen=True)
class SweepRow:
    N: int
    z: float
    max_abs: float
    rms: float


@dataclass(frozen=True)
class SweepTable:
    rows: List[SweepRow] = field(default_factory=list)

    def orders(self) -> List[int]:
        return sorted({row.N for row in self.rows})

    def z_values(self) -> List[float]:
        return sorted({row.z for row in self.rows})

    def error(self, N: int, z: float) -> float:
        for row in self.rows:
            if row.N == N and row.z == z:
                return row.max_abs
        raise KeyError((N, z))

    def error_grows_with_z(self) -> Dict[int, bool]:
        """Per order: max_abs non-decreasing along increasing z."""
        trend = {}
        for N in self.orders():
            errors = [self.error(N, z) for z in self.z_values()]
            trend[N] = all(a <= b for a, b in zip(errors, errors[1:]))
        return trend

    def error_shrinks_with_order(self) -> Dict[float, bool]:
        """Per z: max_abs strictly decreasing along increasing N."""
        trend = {}
        for z in self.z_values():
            errors = [self.error(N, z) for N in self.orders()]
            trend[z] = all(a > b for a, b in zip(errors, errors[1:]))
        return trend

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([(r.N, r.z, r.max_abs, r.rms) for r in self.rows], columns=METRIC_COLUMNS)


def truncation_sweep(
    s_list: Sequence[SeriesSolution],
    sol: GridSolution,
    z_values: Sequence[float],
    max_workers: Optional[int] = None,
) -> SweepTable:
    if s_list:
        first = s_list[0]
        for s in s_list[1:]:
            if s.params != first.params or s.terms[0] != first.terms[0]:
                raise ValueError("sweep series must share params and f0")

    cells = [(s, z) for s in s_list for z in z_values]

    def measure(cell) -> SweepRow:
        s, z = cell
        metrics = compare(s, sol, z)
        return SweepRow(s.order, z, metrics.max_abs, metrics.rms)

    table = SweepTable(_map(measure, cells, max_workers))
    logger.info("truncation sweep: %d rows over N=%s", len(table.rows), table.orders())
    return table


def boundary_sensitivity(
    params: ParamSet,
    grid: Grid,
    source: Source,
    z_eval: float,
    widen: float = 2.0,
    **solver_kwargs,
) -> float:
    """Max change at the original interior points when the y-domain is widened by `widen`.

    Both runs take initial and Dirichlet data from `source`.
    """
    extra = max(1, int(round((grid.ny - 1) * (widen - 1.0) / 2.0)))
    wide = grid.widened(extra)
    narrow_sol, wide_sol = (solve_from_source(params, g, source, **solver_kwargs) for g in (grid, wide))
    _, narrow = narrow_sol.slice_at(z_eval)
    _, broad = wide_sol.slice_at(z_eval)
    change = float(np.max(np.abs(broad[extra + 1: extra + grid.ny - 1] - narrow[1:-1])))
    logger.info("boundary sensitivity at z=%.3g with %d extra points per side: %.3e", z_eval, extra, change)
    return change
