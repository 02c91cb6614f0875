"""Exact check of the integral (Adomian) form of the order-n relation.

Multiplying the order-n recurrence by z^n and using z^n/(n+1) = z^-1 int_0^z z^n dz gives

    u_n = (1/z) int_0^z [2 d2y u_n + y dy u_n + 2(k1-1) z dy u_{n-1} - 2 k2 z^2 u_{n-2}] dz

with u_j = f_j(y) z^j. The identity still contains u_n on both sides, so it is
checked against terms produced by the kernel rather than used to generate them.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from ..kernel.params import ParamSet
from ..kernel.series import SeriesSolution
from ..polynomials.bivariate import BivariatePolynomial, divide_by_z, integrate_z

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmTerm:
    order: int
    value: BivariatePolynomial

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"ADM term order must be non-negative, got {self.order}")
        stray = self.value.z_degrees() - {self.order}
        if stray:
            raise ValueError(f"u_{self.order} has monomials of z-degree {sorted(stray)}")

    @classmethod
    def zero(cls, order: int) -> "AdmTerm":
        return cls(order, BivariatePolynomial.zero())


@dataclass(frozen=True)
class OrderCheck:
    n: int
    passed: bool
    defect: BivariatePolynomial

    def to_dict(self) -> dict:
        return {"n": self.n, "pass": self.passed, "max_abs_defect_numerator_bits": self.defect.max_numerator_bits()}


@dataclass(frozen=True)
class AdmReport:
    orders: List[OrderCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.orders)

    def failing_orders(self) -> List[int]:
        return [check.n for check in self.orders if not check.passed]

    def to_dict(self) -> dict:
        return {"orders": [check.to_dict() for check in self.orders], "pass": self.passed}


def lift(s: SeriesSolution) -> List[AdmTerm]:
    return [AdmTerm(j, BivariatePolynomial.from_y(f, j)) for j, f in enumerate(s.terms)]


def _expect_order(term: Optional[AdmTerm], order: int, name: str) -> BivariatePolynomial:
    # negative orders stand for the zero term
    if term is None:
        return BivariatePolynomial.zero()
    if order >= 0 and term.order != order:
        raise ValueError(f"{name} has order {term.order}, expected {order}")
    return term.value


def adm_rhs(
    n: int,
    u_n: AdmTerm,
    u_prev: Optional[AdmTerm],
    u_prev2: Optional[AdmTerm],
    params: ParamSet,
) -> BivariatePolynomial:
    current = _expect_order(u_n, n, "u_n")
    prev = _expect_order(u_prev, n - 1, "u_prev")
    prev2 = _expect_order(u_prev2, n - 2, "u_prev2")

    current_y = current.diff_y()
    integrand = (
        current_y.diff_y().scale(2)
        + current_y.shift(y_power=1)
        + prev.diff_y().shift(z_power=1).scale(params.drift)
        - prev2.shift(z_power=2).scale(2 * params.k2)
    )
    return divide_by_z(integrate_z(integrand))


def _check_order(n: int, terms: List[AdmTerm], params: ParamSet) -> OrderCheck:
    prev = terms[n - 1] if n >= 1 else None
    prev2 = terms[n - 2] if n >= 2 else None
    defect = adm_rhs(n, terms[n], prev, prev2, params) - terms[n].value
    if not defect.is_zero():
        logger.debug("ADM identity fails at order %d, defect %s", n, defect)
    return OrderCheck(n, defect.is_zero(), defect)


def adm_identity_check(s: SeriesSolution, max_workers: Optional[int] = None) -> AdmReport:
    terms = lift(s)
    orders = range(s.order + 1)
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            checks = list(pool.map(lambda n: _check_order(n, terms, s.params), orders))
    else:
        checks = [_check_order(n, terms, s.params) for n in orders]
    report = AdmReport(checks)
    logger.info("ADM identity over orders 0..%d: %s", s.order, "pass" if report.passed else f"fail at {report.failing_orders()}")
    return report
