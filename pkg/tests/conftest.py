import random
from fractions import Fraction
from math import isqrt

import pytest

from indexlab import GeodesicModel, Hyp, NBlock, NormalFormDecomposition, Rot, make
from indexlab.exact import ExactReal

NONSQUARE_D = [2, 3, 5, 6, 7, 10, 11, 13, 17, 19]


def sqrt_lower_bound(D: int, digits: int = 40) -> Fraction:
    """Rational lower bound for sqrt(D) accurate to `digits` decimals.

    Independent of ExactReal: plain integer square root of a scaled D.
    """
    scale = 10 ** digits
    return Fraction(isqrt(D * scale * scale), scale)


def approx(x: ExactReal, digits: int = 40) -> Fraction:
    """Rational approximation of x, off by less than 10**-(digits-1)."""
    lo = sqrt_lower_bound(x.D, digits) if x.D else Fraction(0)
    return (Fraction(x.a) + x.b * lo) / x.c


def random_rho(rng: random.Random, D: int) -> ExactReal:
    """Random irrational rotation number in (0, 1) within Q(sqrt(D))."""
    b = rng.randint(1, 9)
    c = rng.randint(2, 12)
    x = make(0, b, c, D)
    return x - x.floor()


def random_model(rng: random.Random, n: int | None = None) -> GeodesicModel:
    """A random valid model; every case shape is reachable."""
    if n is None:
        n = rng.randint(2, 8)
    D = rng.choice(NONSQUARE_D)
    r = rng.randint(0, (n - 1) // 2)
    slots = n - 1 - 2 * r
    blocks = [NBlock(random_rho(rng, D)) for _ in range(r)]
    n_rot = rng.randint(0, slots)
    blocks += [Rot(random_rho(rng, D)) for _ in range(n_rot)]
    blocks += [Hyp(Fraction(rng.choice([2, 3, -2, 5]), rng.choice([1, 7]))) for _ in range(slots - n_rot)]
    rng.shuffle(blocks)
    p = rng.randint(0, 4)
    return GeodesicModel(n, NormalFormDecomposition(blocks), p)


@pytest.fixture
def rng():
    return random.Random(20260824)
