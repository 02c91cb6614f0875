"""Dense univariate polynomials in y with exact rational coefficients."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

import numpy as np

from .rational import RationalLike, format_rational, to_rational


def _trim(coefficients: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class YPolynomial:
    """c_0 + c_1 y + ... + c_d y^d, stored low degree first, trailing zeros trimmed."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(to_rational(c) for c in self.coefficients))

    @classmethod
    def zero(cls) -> "YPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> "YPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "YPolynomial":
        return cls((0,) * degree + (c,))

    @classmethod
    def y(cls) -> "YPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, degree: int) -> Fraction:
        if degree < 0:
            raise IndexError("negative degree")
        if degree >= len(self.coefficients):
            return Fraction(0)
        return self.coefficients[degree]

    def __add__(self, other: "YPolynomial") -> "YPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return YPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> "YPolynomial":
        return YPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "YPolynomial") -> "YPolynomial":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "YPolynomial":
        factor = to_rational(factor)
        return YPolynomial(tuple(factor * c for c in self.coefficients))

    def times_y(self) -> "YPolynomial":
        if self.is_zero():
            return self
        return YPolynomial((Fraction(0),) + self.coefficients)

    def derivative(self) -> "YPolynomial":
        return YPolynomial(tuple(m * c for m, c in enumerate(self.coefficients) if m > 0))

    def __call__(self, y):
        """Horner evaluation; exact for rational y, float for float y."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * y + c
        return acc if self.coefficients else 0 * y

    def evaluate_array(self, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        if self.is_zero():
            return np.zeros_like(y)
        return np.polyval([float(c) for c in reversed(self.coefficients)], y)

    def to_strings(self) -> list:
        return [format_rational(c) for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for m, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if m == 0 else ("y" if m == 1 else f"y^{m}")
            if power and c == 1:
                parts.append(power)
            elif power and c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}{'*' + power if power else ''}")
        return " + ".join(parts).replace("+ -", "- ")


def differentiate_y(p: YPolynomial) -> YPolynomial:
    return p.derivative()
