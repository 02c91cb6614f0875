"""The three pipelines behind the command line; each returns a process exit code."""
import json
import logging
import math
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd

from ..adm.verifier import adm_identity_check
from ..errors import InadmissibleInitialError, InstabilityError, ResonanceError, SeriesFormatError
from ..kernel.golden import closed_form, initial_scale
from ..kernel.recurrence import expand
from ..kernel.residual import recurrence_defects, residual_min_z_degree
from ..kernel.series import SeriesSolution
from ..oracle.fd_solver import solve_from_source
from ..oracle.studies import METRIC_COLUMNS, boundary_sensitivity, compare, observed_order, truncation_sweep
from ..utils.utils import threads_from_env, write_csv_atomic, write_text_atomic
from .config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_INADMISSIBLE = 2
EXIT_RESONANCE = 3
EXIT_VERIFY_FAILED = 4
EXIT_UNSTABLE = 5


class _Abort(Exception):
    def __init__(self, code: int):
        self.code = code


def _expand(config: RunConfig, order: Optional[int] = None) -> SeriesSolution:
    try:
        return expand(config.initial(), config.order if order is None else order, config.params())
    except InadmissibleInitialError as e:
        print(f"inadmissible initial profile: L_0[f0] = {e.residual}")
        raise _Abort(EXIT_INADMISSIBLE)
    except ResonanceError as e:
        print(f"resonance at order {e.order} (degree {e.degree})")
        raise _Abort(EXIT_RESONANCE)


def _load_series(path: str) -> SeriesSolution:
    try:
        return SeriesSolution.from_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, SeriesFormatError) as e:
        logger.error("cannot read series from %s: %s", path, e)
        raise _Abort(EXIT_BAD_INPUT)


def _series(config: RunConfig, series_in: Optional[str]) -> SeriesSolution:
    return _load_series(series_in) if series_in else _expand(config)


def cmd_expand(config: RunConfig, out: Optional[str] = None) -> int:
    try:
        series = _expand(config)
    except _Abort as e:
        return e.code
    write_text_atomic(out or config.output.series, series.to_json())
    return EXIT_OK


def verification_report(series: SeriesSolution, max_workers: Optional[int] = None) -> dict:
    recurrence = recurrence_defects(series)
    adm = adm_identity_check(series, max_workers=max_workers)
    min_degree = residual_min_z_degree(series)
    expected = series.order + 1
    residual_ok = min_degree is None or min_degree >= expected
    report = {
        "order": series.order,
        "recurrence": {
            "orders": [{"n": c.n, "pass": c.passed} for c in recurrence],
            "pass": all(c.passed for c in recurrence),
        },
        "adm": adm.to_dict(),
        "residual": {"min_z_degree": min_degree, "expected_min_z_degree": expected, "pass": residual_ok},
    }
    report["pass"] = report["recurrence"]["pass"] and adm.passed and residual_ok
    return report


def cmd_verify(config: RunConfig, series_in: Optional[str] = None, out: Optional[str] = None) -> int:
    try:
        series = _series(config, series_in)
    except _Abort as e:
        return e.code
    report = verification_report(series, max_workers=threads_from_env())
    write_text_atomic(out or config.output.report, json.dumps(report, indent=2) + "\n")
    if not report["pass"]:
        logger.warning(
            "verification failed (recurrence=%s, adm=%s, residual=%s)",
            report["recurrence"]["pass"], report["adm"]["pass"], report["residual"]["pass"],
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _source(config: RunConfig, series: SeriesSolution):
    if config.grid.source == "closed_form":
        return closed_form(series.params, initial_scale(series.terms[0]))

    def from_series(y, z):
        return series.evaluate_array(np.atleast_1d(np.asarray(y, dtype=float)), z)

    return from_series


def _in_range(config: RunConfig, z_values: List[float]) -> List[float]:
    kept = [z for z in z_values if config.grid.z_start <= z <= config.grid.z_end]
    for z in sorted(set(z_values) - set(kept)):
        logger.warning("skipping z=%s outside the oracle range", z)
    return kept


def cmd_oracle(config: RunConfig, series_in: Optional[str] = None, out_dir: Optional[str] = None) -> int:
    try:
        series = _series(config, series_in)
        sweep_series = [expand(series.terms[0], N, series.params) for N in config.sweep.orders]
    except _Abort as e:
        return e.code
    except (InadmissibleInitialError, ResonanceError) as e:
        logger.error("cannot build sweep series: %s", e)
        return EXIT_INADMISSIBLE if isinstance(e, InadmissibleInitialError) else EXIT_RESONANCE

    threads = threads_from_env()
    grid = config.grid.to_grid()
    try:
        source = _source(config, series)
    except ValueError as e:
        logger.error("no closed form for this series: %s", e)
        return EXIT_BAD_INPUT
    solver_kwargs = dict(theta=config.grid.theta, damping_steps=config.grid.damping_steps)
    z_values = _in_range(config, config.sweep.z_values)
    try:
        sol = solve_from_source(series.params, grid, source, retain_every=config.grid.retain_every, **solver_kwargs)
        conv = config.convergence
        order = observed_order(
            series.params,
            grid=conv.to_grid(),
            refinement_levels=conv.refinement_levels,
            theta=config.grid.theta,
            damping_steps=conv.damping_steps,
            max_workers=threads,
        )
        sensitivity = None
        if config.grid.sensitivity_widen is not None and z_values:
            sensitivity = boundary_sensitivity(
                series.params, grid, source, max(z_values), widen=config.grid.sensitivity_widen, **solver_kwargs
            )
    except InstabilityError as e:
        logger.error("oracle became unstable: %s", e)
        return EXIT_UNSTABLE

    compare_rows = []
    for z in z_values:
        metrics = compare(series, sol, z)
        compare_rows.append((series.order, z, metrics.max_abs, metrics.rms))
    table = truncation_sweep(sweep_series, sol, z_values, max_workers=threads)

    target = Path(out_dir or config.output.out_dir)
    write_csv_atomic(target / "grid_solution.csv", sol.to_frame())
    write_csv_atomic(target / "compare.csv", pd.DataFrame(compare_rows, columns=METRIC_COLUMNS))
    write_csv_atomic(target / "sweep.csv", table.to_frame())
    summary = {
        "source": config.grid.source,
        "observed_order": order if math.isfinite(order) else None,
        "boundary_sensitivity": sensitivity,
        "error_grows_with_z": {str(N): flag for N, flag in table.error_grows_with_z().items()},
        "error_shrinks_with_order": {repr(z): flag for z, flag in table.error_shrinks_with_order().items()},
    }
    write_text_atomic(target / "oracle_summary.json", json.dumps(summary, indent=2) + "\n")
    logger.info("observed order %.3f, outputs in %s", order, target)
    return EXIT_OK
