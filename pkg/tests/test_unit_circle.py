import cmath
import random

import numpy as np
import pytest

from expansive.engine.unit_circle import replay_unit_circle, unit_circle_fields, unit_circle_root_count
from expansive.exact import UniPoly, cyclotomic_poly


@pytest.mark.parametrize("coeffs, count", [
    ([-2, 1], 0),                    # x - 2
    ([1, 1], 1),                     # x + 1
    ([-1, 0, 1], 2),                 # x^2 - 1
    ([1, 1, 1], 2),                  # primitive cube roots
    ([1, -3, 1], 0),                 # roots off the circle, reciprocal pair
    ([1, -1, -1, -1, 1], 2),         # two circle roots, two real
    ([1, 2, 1], 1),                  # (x + 1)^2 counted once
    ([0, 0, 1, 1], 1),               # x^2 (x + 1): zero roots ignored
    ([3], 0),
])
def test_known_counts(coeffs, count):
    cert = unit_circle_root_count(UniPoly(coeffs))
    assert cert.count == count
    assert replay_unit_circle(cert.as_dict())


@pytest.mark.parametrize("q", [1, 2, 3, 5, 7, 12, 30])
def test_cyclotomic_roots_all_on_circle(q):
    phi = cyclotomic_poly(q)
    assert unit_circle_root_count(phi).count == phi.degree


def test_tampered_certificate_fails_replay():
    cert = unit_circle_root_count(UniPoly([1, 1, 1])).as_dict()
    cert["count"] = 0
    assert not replay_unit_circle(cert)


def test_fields_locate_roots():
    p = UniPoly([1, -1, -1, -1, 1]) * UniPoly([1, 1])
    fields = unit_circle_fields(p)
    assert len(fields) == 3
    numeric = [r for r in np.roots([float(c) for c in reversed(p.coeffs)]) if abs(abs(r) - 1) < 1e-9]
    for K in fields:
        z = K.gen_complex()
        assert min(abs(z - r) for r in numeric) < 1e-9


def test_product_counts_add():
    rng = random.Random(3)
    for _ in range(20):
        a = UniPoly([rng.randint(-4, 4) for _ in range(4)] + [1])
        b = cyclotomic_poly(rng.choice([3, 4, 5]))
        g = unit_circle_root_count(a)
        both = unit_circle_root_count(a * b)
        shared = sum(1 for z in (cmath.exp(2j * cmath.pi * k / 60) for k in range(60))
                     if abs(a(z)) < 1e-9 and abs(b(z)) < 1e-9)
        assert both.count == g.count + b.degree - shared
