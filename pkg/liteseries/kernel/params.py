from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..polynomials.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class ParamSet:
    """Model constants k1, k2 of the transformed equation, held exactly."""

    k1: Fraction
    k2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k1", to_rational(self.k1))
        object.__setattr__(self, "k2", to_rational(self.k2))

    @classmethod
    def of(cls, k1: RationalLike, k2: RationalLike) -> "ParamSet":
        return cls(to_rational(k1), to_rational(k2))

    @property
    def drift(self) -> Fraction:
        """2(k1 - 1), the coefficient of z * du/dy."""
        return 2 * (self.k1 - 1)

    def as_floats(self) -> Tuple[float, float]:
        return float(self.k1), float(self.k2)

    def to_dict(self) -> dict:
        return {"k1": format_rational(self.k1), "k2": format_rational(self.k2)}
