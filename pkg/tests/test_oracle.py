import math

import numpy as np
import pytest

from liteseries.errors import GridError, SingularTimeError
from liteseries.kernel import expand
from liteseries.kernel.golden import closed_form
from liteseries.oracle import (
    Grid,
    boundary_sensitivity,
    compare,
    evolution_form,
    fd_solve,
    frozen_boundary,
    observed_order,
    solve_from_source,
    thomas_solve,
    truncation_sweep,
)
from liteseries.polynomials import YPolynomial

from .helpers import GOLDEN

Y = YPolynomial.y()
GOLDEN_U = closed_form(GOLDEN)


def gaussian(y):
    return np.exp(-np.asarray(y, dtype=float) ** 2)


def max_deviation_from_golden(sol):
    z, values = sol.z_levels[-1], sol.final()
    return float(np.max(np.abs(values - GOLDEN_U(sol.y, z))))


def test_thomas_matches_dense_solve():
    rng = np.random.default_rng(0)
    n = 12
    lower, upper = rng.normal(size=n), rng.normal(size=n)
    diag = 4.0 + np.abs(lower) + np.abs(upper)
    rhs = rng.normal(size=n)
    dense = np.diag(diag) + np.diag(lower[1:], -1) + np.diag(upper[:-1], 1)
    assert np.allclose(thomas_solve(lower, diag, upper, rhs), np.linalg.solve(dense, rhs))


def test_grid_invariants():
    grid = Grid(-2.0, 2.0, 401, 0.05, 0.5, 4500)
    assert grid.dy == pytest.approx(0.01)
    assert grid.dz == pytest.approx(1e-4)
    with pytest.raises(GridError):
        Grid(-2.0, 2.0, 401, 0.0, 0.5, 10)
    with pytest.raises(GridError):
        Grid(-2.0, 2.0, 2, 0.1, 0.5, 10)
    with pytest.raises(GridError):
        Grid(-2.0, 2.0, 11, 0.5, 0.5, 10)


def test_evolution_form_zero_state():
    assert evolution_form(GOLDEN, 0.3, 0.2, 0.0, 0.0, 0.0) == 0.0


def test_evolution_form_on_closed_form():
    k2 = 0.5
    for y in (-1.5, 0.0, 0.7, 2.0):
        for z in (0.05, 0.3, 1.1):
            u = GOLDEN_U(y, z)
            u_y = math.exp(-k2 * z * z)
            u_z = (0.5 - 2 * k2 * z * (y + 0.5 * z)) * math.exp(-k2 * z * z)
            assert evolution_form(GOLDEN, y, z, u, u_y, 0.0) == pytest.approx(u_z, rel=1e-12, abs=1e-14)


def test_evolution_form_singular_at_origin():
    with pytest.raises(SingularTimeError):
        evolution_form(GOLDEN, 1.0, 0.0, 1.0, 0.0, 0.0)


def test_golden_agreement_on_reference_grid():
    grid = Grid(-2.0, 2.0, 401, 0.05, 0.5, 4500)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U, retain_every=500)
    assert max_deviation_from_golden(sol) <= 1e-6


def test_zero_data_stays_zero():
    grid = Grid(-1.0, 1.0, 21, 0.1, 0.4, 30)
    sol = fd_solve(GOLDEN, np.zeros(21), grid, lambda y, z: 0.0)
    assert np.all(sol.slices == 0.0)


def test_doubling_steps_quarters_error():
    coarse = Grid(-2.0, 2.0, 21, 0.05, 0.5, 50)
    errors = [max_deviation_from_golden(solve_from_source(GOLDEN, coarse.refined(k), GOLDEN_U)) for k in (1, 2)]
    assert 3.0 < errors[0] / errors[1] < 5.0


def test_scheme_is_linear():
    grid = Grid(-4.0, 4.0, 81, 0.1, 0.5, 60)
    source = frozen_boundary(gaussian)
    plain = fd_solve(GOLDEN, gaussian(grid.y_values), grid, source).final()
    tripled = fd_solve(GOLDEN, 3 * gaussian(grid.y_values), grid, lambda y, z: 3 * source(y, z)).final()
    assert np.max(np.abs(tripled - 3 * plain)) <= 1e-12 * np.max(np.abs(3 * plain))


def test_theta_must_lie_in_unit_interval():
    grid = Grid(-1.0, 1.0, 11, 0.1, 0.2, 5)
    with pytest.raises(ValueError):
        fd_solve(GOLDEN, np.zeros(11), grid, lambda y, z: 0.0, theta=1.5)


def test_observed_order_gaussian():
    p = observed_order(GOLDEN, gaussian)
    assert 1.8 <= p <= 2.2


def test_observed_order_linear_data():
    grid = Grid(-2.0, 2.0, 21, 0.05, 0.5, 50)
    p = observed_order(GOLDEN, lambda y: GOLDEN_U(y, grid.z_start), grid, boundary_source=GOLDEN_U)
    assert 1.7 <= p <= 2.3


def test_observed_order_needs_three_levels():
    with pytest.raises(ValueError):
        observed_order(GOLDEN, gaussian, refinement_levels=2)


def test_compare_small_z():
    grid = Grid(-2.0, 2.0, 41, 0.05, 0.5, 900)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U, retain_every=10)
    metrics = compare(expand(Y, 12, GOLDEN), sol, 0.1)
    assert metrics.max_abs < 1e-6
    assert metrics.max_abs >= metrics.rms >= 0.0
    assert metrics.at_point[1] == pytest.approx(0.1)


def test_compare_zero_series_and_zero_solution():
    grid = Grid(-1.0, 1.0, 11, 0.1, 0.3, 10)
    sol = fd_solve(GOLDEN, np.zeros(11), grid, lambda y, z: 0.0)
    metrics = compare(expand(YPolynomial.zero(), 4, GOLDEN), sol, 0.3)
    assert metrics.max_abs == 0.0


def test_low_order_truncation_worse_at_larger_z():
    grid = Grid(-2.0, 2.0, 41, 0.05, 0.5, 900)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U, retain_every=10)
    low, high = (compare(expand(Y, N, GOLDEN), sol, 0.5) for N in (2, 12))
    assert low.max_abs > high.max_abs


def test_truncation_sweep_at_unit_z():
    grid = Grid(-2.0, 2.0, 41, 0.05, 1.0, 1900)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U, retain_every=100)
    series = [expand(Y, N, GOLDEN) for N in (4, 8, 16)]
    table = truncation_sweep(series, sol, [grid.z_start, 0.5, 1.0])
    assert table.error(16, 1.0) < table.error(8, 1.0) < table.error(4, 1.0)
    assert table.error_shrinks_with_order()[1.0]
    assert table.error_grows_with_z()[4]
    for N in (4, 8, 16):
        assert table.error(N, grid.z_start) < 1e-6
    assert list(table.to_frame().columns) == ["N", "z", "max_abs", "rms"]


def test_truncation_sweep_empty_z_values():
    grid = Grid(-1.0, 1.0, 11, 0.1, 0.3, 10)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U)
    assert truncation_sweep([expand(Y, 4, GOLDEN)], sol, []).rows == []


def test_truncation_sweep_requires_shared_profile():
    grid = Grid(-1.0, 1.0, 11, 0.1, 0.3, 10)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U)
    with pytest.raises(ValueError):
        truncation_sweep([expand(Y, 4, GOLDEN), expand(Y.scale(2), 4, GOLDEN)], sol, [0.2])


def test_grid_solution_export():
    grid = Grid(-1.0, 1.0, 5, 0.1, 0.3, 4)
    sol = solve_from_source(GOLDEN, grid, GOLDEN_U, retain_every=2)
    frame = sol.to_frame()
    assert list(frame.columns) == ["y", "z", "u"]
    assert len(frame) == 3 * 5
    assert frame["z"].iloc[0] == pytest.approx(0.1)
    assert frame["y"].iloc[:5].tolist() == pytest.approx(list(grid.y_values))


def test_boundary_sensitivity_closed_form_is_round_off():
    grid = Grid(-2.0, 2.0, 41, 0.05, 1.0, 400)
    change = boundary_sensitivity(GOLDEN, grid, GOLDEN_U, 1.0)
    assert change < 1e-8


def test_boundary_sensitivity_frozen_gaussian_edges():
    grid = Grid(-2.0, 2.0, 41, 0.05, 1.0, 400)
    change = boundary_sensitivity(GOLDEN, grid, frozen_boundary(gaussian), 1.0)
    assert change > 1e-6
