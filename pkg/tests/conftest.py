import random
from fractions import Fraction

import pytest

from pfsym.pfaffian import TriangularArray, upper_pairs


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_array(rng: random.Random, two_n: int, mode: str) -> TriangularArray:
    return TriangularArray(two_n, mode, {p: random_fraction(rng) for p in upper_pairs(two_n)})


def random_int_array(rng: random.Random, two_n: int, mode: str) -> TriangularArray:
    return TriangularArray(two_n, mode, {p: rng.randint(-9, 9) for p in upper_pairs(two_n)})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
