import random
from fractions import Fraction

from liteseries.kernel.params import ParamSet

GOLDEN = ParamSet.of("3/2", "1/2")


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_params(count: int = 50, seed: int = 20180349):
    rng = random.Random(seed)
    return [ParamSet(random_rational(rng), random_rational(rng)) for _ in range(count)]
