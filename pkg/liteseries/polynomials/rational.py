from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction.

    Floats are refused: coefficients must stay exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational literal: {value!r}") from e
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"
