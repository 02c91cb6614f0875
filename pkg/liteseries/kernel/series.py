"""Truncated Taylor expansions u_N(y, z) = sum_{j<=N} f_j(y) z^j and their JSON form."""
import json
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import SeriesFormatError
from ..polynomials.rational import RationalLike, to_rational
from ..polynomials.ypolynomial import YPolynomial
from .params import ParamSet


@dataclass(frozen=True)
class SeriesSolution:
    params: ParamSet
    terms: Tuple[YPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a series needs at least the order-0 term")

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def term(self, n: int) -> YPolynomial:
        """f_n, with f_n = 0 for negative n."""
        if n < 0:
            return YPolynomial.zero()
        return self.terms[n]

    def scale(self, factor: RationalLike) -> "SeriesSolution":
        return SeriesSolution(self.params, tuple(f.scale(factor) for f in self.terms))

    def perturb(self, n: int, delta: YPolynomial) -> "SeriesSolution":
        """Copy with f_n replaced by f_n + delta."""
        terms = list(self.terms)
        terms[n] = terms[n] + delta
        return SeriesSolution(self.params, tuple(terms))

    def evaluate_array(self, y: np.ndarray, z: float) -> np.ndarray:
        """Float evaluation on an array of y values at a single z."""
        acc = np.zeros_like(np.asarray(y, dtype=float))
        for f in reversed(self.terms):
            acc = acc * z + f.evaluate_array(y)
        return acc

    def to_dict(self) -> dict:
        return {
            **self.params.to_dict(),
            "order": self.order,
            "terms": [f.to_strings() for f in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SeriesSolution":
        try:
            params = ParamSet.of(data["k1"], data["k2"])
            terms = tuple(YPolynomial(tuple(to_rational(c) for c in row)) for row in data["terms"])
            order = data["order"]
        except (KeyError, TypeError, ValueError) as e:
            raise SeriesFormatError(f"malformed series document: {e}") from e
        if not terms:
            raise SeriesFormatError("series document has no terms")
        if isinstance(order, bool) or not isinstance(order, int) or order != len(terms) - 1:
            raise SeriesFormatError(f"order {order!r} does not match {len(terms)} terms")
        return cls(params, terms)

    @classmethod
    def from_json(cls, text: str) -> "SeriesSolution":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SeriesFormatError(f"series file is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise SeriesFormatError("series document must be a JSON object")
        return cls.from_dict(data)


def evaluate(s: SeriesSolution, y, z):
    """Horner's scheme in z; exact for rational arguments."""
    acc = 0 * z
    for f in reversed(s.terms):
        acc = acc * z + f(y)
    return acc
