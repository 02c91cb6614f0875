"""Order-by-order construction of the Taylor coefficients f_n(y).

Inserting u = sum f_j(y) z^j into the transformed equation gives, for every n,

    (n+1) f_n = 2 f_n'' + y f_n' + 2(k1-1) f_{n-1}' - 2 k2 f_{n-2},   f_{-1} = f_{-2} = 0.

f_n appears on both sides, so each order is solved as the linear problem
L_n[f_n] = g_n with L_n[f] = 2 f'' + y f' - (n+1) f and
g_n = -2(k1-1) f_{n-1}' + 2 k2 f_{n-2}. On y^m the operator acts as
(m-n-1) y^m + 2m(m-1) y^(m-2): upper triangular in the monomial basis, with a
zero diagonal only at m = n+1.
"""
import logging
from fractions import Fraction
from typing import List

from ..errors import InadmissibleInitialError, ResonanceError
from ..polynomials.ypolynomial import YPolynomial, differentiate_y
from .params import ParamSet
from .series import SeriesSolution

logger = logging.getLogger(__name__)


def apply_L(n: int, p: YPolynomial) -> YPolynomial:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    return differentiate_y(differentiate_y(p)).scale(2) + differentiate_y(p).times_y() - p.scale(n + 1)


def forcing_term(n: int, f_prev: YPolynomial, f_prev2: YPolynomial, params: ParamSet) -> YPolynomial:
    if n < 1:
        raise ValueError(f"forcing is defined for n >= 1, got {n}")
    if n == 1 and not f_prev2.is_zero():
        raise ValueError("f_{-1} must be the zero polynomial at order 1")
    return differentiate_y(f_prev).scale(-params.drift) + f_prev2.scale(2 * params.k2)


def solve_order(n: int, g: YPolynomial) -> YPolynomial:
    """Minimal polynomial f with L_n[f] = g, by back-substitution from the top degree.

    The homogeneous direction y^(n+1) is always given a zero coefficient.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    f = [Fraction(0)] * (g.degree + 3)
    for m in range(g.degree, -1, -1):
        required = g[m] - 2 * (m + 2) * (m + 1) * f[m + 2]
        diagonal = m - n - 1
        if diagonal == 0:
            if required != 0:
                raise ResonanceError(n, m, required)
            continue
        f[m] = required / diagonal
    return YPolynomial(tuple(f))


def validate_initial(f0: YPolynomial) -> YPolynomial:
    """Residual L_0[f0]; zero exactly when f0 is a multiple of y."""
    return apply_L(0, f0)


def expand(f0: YPolynomial, N: int, params: ParamSet) -> SeriesSolution:
    if N < 0:
        raise ValueError(f"truncation order must be non-negative, got {N}")
    residual = validate_initial(f0)
    if not residual.is_zero():
        raise InadmissibleInitialError(residual)

    terms: List[YPolynomial] = [f0]
    zero = YPolynomial.zero()
    for n in range(1, N + 1):
        f_prev = terms[n - 1]
        f_prev2 = terms[n - 2] if n >= 2 else zero
        g = forcing_term(n, f_prev, f_prev2, params)
        terms.append(solve_order(n, g))
        logger.debug("order %d: forcing degree %d, f_n = %s", n, g.degree, terms[-1])
    logger.info("expanded f0 = %s to order %d (k1=%s, k2=%s)", f0, N, params.k1, params.k2)
    return SeriesSolution(params=params, terms=tuple(terms))
