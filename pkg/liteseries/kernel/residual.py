"""Exact checks of a series against the transformed equation and its recurrence."""
import logging
from dataclasses import dataclass
from typing import List, Optional

from ..polynomials.bivariate import BivariatePolynomial
from ..polynomials.ypolynomial import YPolynomial, differentiate_y
from .recurrence import apply_L
from .series import SeriesSolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecurrenceCheck:
    n: int
    defect: YPolynomial

    @property
    def passed(self) -> bool:
        return self.defect.is_zero()


def as_bivariate(s: SeriesSolution) -> BivariatePolynomial:
    u = BivariatePolynomial.zero()
    for j, f in enumerate(s.terms):
        u = u + BivariatePolynomial.from_y(f, j)
    return u


def pde_residual(s: SeriesSolution) -> BivariatePolynomial:
    """d/dz(z u_N) - [2 u_yy + y u_y + 2(k1-1) z u_y - 2 k2 z^2 u_N] for the truncated series."""
    u = as_bivariate(s)
    u_y = u.diff_y()
    lhs = u.shift(z_power=1).diff_z()
    rhs = (
        u_y.diff_y().scale(2)
        + u_y.shift(y_power=1)
        + u_y.shift(z_power=1).scale(s.params.drift)
        - u.shift(z_power=2).scale(2 * s.params.k2)
    )
    return lhs - rhs


def residual_min_z_degree(s: SeriesSolution) -> Optional[int]:
    return pde_residual(s).min_z_degree()


def recurrence_defects(s: SeriesSolution) -> List[RecurrenceCheck]:
    """(n+1) f_n - [2 f_n'' + y f_n' + 2(k1-1) f_{n-1}' - 2 k2 f_{n-2}] for each order."""
    checks = []
    for n in range(s.order + 1):
        coupling = differentiate_y(s.term(n - 1)).scale(s.params.drift) - s.term(n - 2).scale(2 * s.params.k2)
        defect = -(apply_L(n, s.term(n)) + coupling)
        checks.append(RecurrenceCheck(n, defect))
        if not defect.is_zero():
            logger.debug("recurrence defect at order %d: %s", n, defect)
    return checks
