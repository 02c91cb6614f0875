"""Sparse polynomials in (y, z) with exact rational coefficients.

Monomials are keyed by (y-degree, z-degree); zero coefficients are never stored.
"""
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..errors import DivisionByZError
from .rational import RationalLike, to_rational
from .ypolynomial import YPolynomial

Monomial = Tuple[int, int]


class BivariatePolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative degree in monomial y^{a} z^{b}")
            c = to_rational(c)
            if c != 0:
                cleaned[(int(a), int(b))] = c
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def from_y(cls, p: YPolynomial, z_degree: int = 0) -> "BivariatePolynomial":
        """p(y) * z^z_degree."""
        return cls({(a, z_degree): c for a, c in enumerate(p.coefficients)})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BivariatePolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = [f for f in (_power("y", a), _power("z", b)) if f]
            parts.append("*".join([str(c)] + factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        merged = dict(self._terms)
        for key, c in other._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + c
        return BivariatePolynomial(merged)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "BivariatePolynomial":
        factor = to_rational(factor)
        return BivariatePolynomial({k: factor * c for k, c in self._terms.items()})

    def shift(self, y_power: int = 0, z_power: int = 0) -> "BivariatePolynomial":
        """Multiply by y^y_power z^z_power."""
        return BivariatePolynomial({(a + y_power, b + z_power): c for (a, b), c in self._terms.items()})

    def diff_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(a - 1, b): a * c for (a, b), c in self._terms.items() if a > 0})

    def diff_z(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(a, b - 1): b * c for (a, b), c in self._terms.items() if b > 0})

    def integrate_z(self) -> "BivariatePolynomial":
        """Definite integral from 0 to z."""
        return BivariatePolynomial({(a, b + 1): c / (b + 1) for (a, b), c in self._terms.items()})

    def divide_by_z(self) -> "BivariatePolynomial":
        if any(b == 0 for (_, b) in self._terms):
            raise DivisionByZError(f"{self} has a monomial of z-degree 0")
        return BivariatePolynomial({(a, b - 1): c for (a, b), c in self._terms.items()})

    def z_degrees(self) -> set:
        return {b for (_, b) in self._terms}

    def min_z_degree(self) -> Optional[int]:
        return min(self.z_degrees(), default=None)

    def z_component(self, z_degree: int) -> YPolynomial:
        """Coefficient of z^z_degree as a polynomial in y."""
        size = 1 + max((a for (a, b) in self._terms if b == z_degree), default=-1)
        return YPolynomial(tuple(self._terms.get((a, z_degree), 0) for a in range(size)))

    def max_numerator_bits(self) -> int:
        return max((abs(c.numerator).bit_length() for c in self._terms.values()), default=0)

    def __call__(self, y, z):
        total = 0 * y * z
        for (a, b), c in self._terms.items():
            total = total + c * y ** a * z ** b
        return total


def _power(symbol: str, degree: int) -> str:
    if degree == 0:
        return ""
    return symbol if degree == 1 else f"{symbol}^{degree}"


def integrate_z(p: BivariatePolynomial) -> BivariatePolynomial:
    return p.integrate_z()


def divide_by_z(p: BivariatePolynomial) -> BivariatePolynomial:
    return p.divide_by_z()
