from .params import ParamSet
from .series import SeriesSolution, evaluate
from .recurrence import apply_L, expand, forcing_term, solve_order, validate_initial
from .residual import RecurrenceCheck, as_bivariate, pde_residual, recurrence_defects, residual_min_z_degree
from ..polynomials.ypolynomial import differentiate_y
