import random

import pytest
from hypothesis import given, strategies as st

from expansive.cli.polyparse import ParseError, parse_generator, parse_polynomial, parse_univariate
from expansive.exact import UniPoly
from expansive.presentations import GeneratorFamily, LaurentPoly, format_laurent, make_exponent

x1, x2 = LaurentPoly.var(1), LaurentPoly.var(2)


@pytest.mark.parametrize("text, expected", [
    ("x1 - 2", x1 - 2),
    ("e(1)-2", x1 - 2),
    ("3 x1^2 x2^-1", 3 * x1 ** 2 * x2 ** -1),
    ("-x1*x2 + 4", -x1 * x2 + 4),
    ("  2 * e(2) ^ -3 ", 2 * x2 ** -3),
    ("x1 + x1", 2 * x1),
    ("0", LaurentPoly()),
])
def test_parses(text, expected):
    assert parse_polynomial(text) == expected


@pytest.mark.parametrize("text, needle", [
    ("", "empty"),
    ("x1 +", "expected a term"),
    ("x0", "positive"),
    ("x1^", "exponent"),
    ("x1 ^ 4294967296", "overflow"),
    ("2 x1 )", "unexpected"),
    ("e(1", "expected ')'"),
    ("x1/2", "unexpected"),
    ("1/2 x1", "integers"),
    ("y", "found 'y'"),
])
def test_errors_point_at_column(text, needle):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text)
    assert needle in str(exc.value)
    assert "column" in str(exc.value)


def test_family_syntax():
    fam = parse_generator("e(n+1) - (n+1)*e(1) + n")
    assert isinstance(fam, GeneratorFamily)
    assert fam.instantiate(2) == LaurentPoly.var(3) - 3 * x1 + 2
    with pytest.raises(ParseError):
        parse_polynomial("e(n) - 1")


def test_univariate():
    assert parse_univariate("x^2 - x - 1") == UniPoly([-1, -1, 1])
    assert parse_univariate("e(1)^3 + 1") == UniPoly([1, 0, 0, 1])
    for bad in ("x2 + 1", "x^-1 + 1"):
        with pytest.raises(ParseError):
            parse_univariate(bad)


monomials = st.dictionaries(st.integers(1, 4), st.integers(-6, 6), max_size=3)
polys = st.lists(st.tuples(monomials, st.integers(-20, 20)), max_size=6)


@given(polys)
def test_round_trip(items):
    f = LaurentPoly({make_exponent(m): c for m, c in items})
    assert parse_polynomial(format_laurent(f)) == f


def test_round_trip_seeded_batch():
    rng = random.Random(7)
    for _ in range(200):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = make_exponent((v, rng.randint(-5, 5)) for v in rng.sample(range(1, 6), rng.randint(0, 3)))
            terms[e] = rng.randint(-50, 50)
        f = LaurentPoly(terms)
        assert parse_polynomial(str(f)) == f
