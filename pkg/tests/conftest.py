import random
from fractions import Fraction

import pytest

from bfcorr.poly import MultiPoly
from bfcorr.ratfun import RationalFn, diff_factor, sum_factor, var_factor
from bfcorr.textio import parse_rational


def rf(text, alphabet):
    """Shorthand: build a RationalFn from its textual form."""
    return parse_rational(text, alphabet)


def random_poly(rng, alphabet, max_deg=2, terms=3):
    tmap = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_deg) for _ in alphabet)
        tmap[e] = Fraction(rng.randint(-4, 4))
    return MultiPoly(alphabet, tmap)


def random_ratfun(rng, alphabet=("z", "w"), max_den=2):
    """Random small rational function with poles among z, w, z-w, z+w."""
    num = random_poly(rng, alphabet)
    if num.is_zero():
        num = MultiPoly.const(alphabet, 1)
    atoms = [var_factor(0), var_factor(1), diff_factor(0, 1)[0], sum_factor(0, 1)]
    den = {}
    for atom in rng.sample(atoms, rng.randint(0, max_den)):
        den[atom] = rng.randint(1, 2)
    return RationalFn(num, den)


@pytest.fixture
def rng():
    return random.Random(20240811)
