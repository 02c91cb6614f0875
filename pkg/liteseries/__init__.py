from .kernel import ParamSet, SeriesSolution, evaluate, expand, pde_residual
from .adm import adm_identity_check
from .oracle import Grid, GridSolution, fd_solve

__version__ = "0.1.0"
