import random

import pytest

from expansive.presentations import LaurentPoly, make_exponent


def random_laurent(rng: random.Random, variables=(1, 2), max_terms=6, coeff=5, exp=2):
    """Random Laurent polynomial with nonzero coefficients and at most max_terms terms."""
    s = rng.randint(1, max_terms)
    terms = {}
    while len(terms) < s:
        e = make_exponent((v, rng.randint(-exp, exp)) for v in variables)
        terms[e] = rng.choice([c for c in range(-coeff, coeff + 1) if c])
    return LaurentPoly(terms)


@pytest.fixture
def rng():
    return random.Random(20240611)
