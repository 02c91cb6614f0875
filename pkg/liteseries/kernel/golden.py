"""The closed form u*(y, z) = a (y + (k1-1) z) exp(-k2 z^2).

Every admissible initial profile is a*y, and u* solves the transformed equation
for any k1, k2, so it is an exact reference for every series the kernel builds.
"""
from fractions import Fraction
from math import factorial
from typing import Callable

import numpy as np
import sympy

from ..polynomials.rational import RationalLike, to_rational
from ..polynomials.ypolynomial import YPolynomial
from .params import ParamSet


def closed_form_defect() -> sympy.Expr:
    """Substitute u* into the equation symbolically; simplifies to 0."""
    y, z, k1, k2, a = sympy.symbols("y z k1 k2 a")
    u = a * (y + (k1 - 1) * z) * sympy.exp(-k2 * z**2)
    lhs = sympy.diff(z * u, z)
    rhs = 2 * sympy.diff(u, y, 2) + y * sympy.diff(u, y) + 2 * (k1 - 1) * z * sympy.diff(u, y) - 2 * k2 * z**2 * u
    return sympy.simplify(lhs - rhs)


def golden_coefficient(n: int, params: ParamSet, scale: RationalLike = 1) -> YPolynomial:
    """Taylor coefficient of u* in z: a((-k2)^m/m!) y for n = 2m, a(k1-1)(-k2)^m/m! for n = 2m+1."""
    a = to_rational(scale)
    m, odd = divmod(n, 2)
    c = a * (-params.k2) ** m / Fraction(factorial(m))
    if odd:
        return YPolynomial.constant(c * (params.k1 - 1))
    return YPolynomial.monomial(1, c)


def closed_form(params: ParamSet, scale: RationalLike = 1) -> Callable:
    k1, k2 = params.as_floats()
    a = float(to_rational(scale))

    def u(y, z):
        return a * (np.asarray(y, dtype=float) + (k1 - 1.0) * z) * np.exp(-k2 * z * z)

    return u


def initial_scale(f0: YPolynomial) -> Fraction:
    """a such that f0 = a*y; f0 must already be admissible."""
    if f0.degree > 1 or f0[0] != 0:
        raise ValueError(f"{f0} is not a multiple of y")
    return f0[1]
