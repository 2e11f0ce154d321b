import random
from fractions import Fraction

import pytest

from triring.params import is_valid, validate
from triring.ring import AFFINE_VARS, Poly


@pytest.fixture
def base_params():
    return validate(Fraction(1, 5), Fraction(1, 4), Fraction(1, 2))


@pytest.fixture
def small_params():
    return validate(Fraction(1, 6), Fraction(1, 4), Fraction(1, 2))


def random_valid_triples(count, seed=0):
    """Deterministic pseudo-random valid unit-fraction triples."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        c = rng.randint(2, 6)
        b = rng.randint(c + 1, 18)
        a = rng.randint(b + 1, 30)
        if is_valid(Fraction(1, a), Fraction(1, b), Fraction(1, c)):
            trip = validate(Fraction(1, a), Fraction(1, b), Fraction(1, c))
            if trip not in out:
                out.append(trip)
    return out


def random_poly(rng, vars=AFFINE_VARS, max_degree=2, terms=4, coeff_range=6):
    out = Poly.zero(vars)
    for _ in range(terms):
        exps = tuple(rng.randint(0, max_degree) for _ in vars)
        coef = Fraction(rng.randint(-coeff_range, coeff_range))
        out = out + Poly(vars, {exps: coef})
    return out


def random_isobaric(rng, weight, coeff_range=6):
    """Random nonzero isobaric polynomial of the given weight in y0,y1,y2."""
    vars = AFFINE_VARS
    while True:
        out = Poly.zero(vars)
        for _ in range(3):
            t0 = rng.randint(0, weight)
            t1 = rng.randint(0, weight - t0)
            t2 = weight - t0 - t1
            exps = (0, 0, t0, t1, t2)
            out = out + Poly(vars, {exps: Fraction(rng.randint(-coeff_range, coeff_range))})
        if out:
            return out
