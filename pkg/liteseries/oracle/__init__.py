from .grid import ErrorMetrics, Grid, GridSolution
from .fd_solver import evolution_form, fd_solve, frozen_boundary, solve_from_source
from .studies import SweepRow, SweepTable, boundary_sensitivity, compare, observed_order, truncation_sweep
from .tridiagonal import thomas_solve
