import random
from fractions import Fraction

import pytest


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9,
                  max_den: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
