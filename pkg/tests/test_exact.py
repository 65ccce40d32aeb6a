from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from expansive.exact import (ComplexInterval, CyclotomicValue, Interval, MPoly, NumberField, UniPoly,
                             cyclotomic_order, cyclotomic_poly, factor_integer_poly, isolate_real_roots,
                             poly_gcd, real_root_count, reciprocal, resultant, squarefree, sturm_count)
from expansive.exact.mpoly import univariate_resultant

x = sympy.Symbol("x")
small_ints = st.integers(-9, 9)
polys = st.lists(small_ints, min_size=1, max_size=7).map(UniPoly)


def to_sympy(p: UniPoly):
    return sympy.Poly(list(reversed([int(c) for c in p.coeffs])) or [0], x)


class TestUniPoly:
    def test_coefficients_are_low_first(self):
        p = UniPoly([1, 0, -2])
        assert p.degree == 2
        assert p(Fraction(1, 2)) == Fraction(1, 2)

    @given(polys, polys)
    def test_ring_axioms(self, a, b):
        assert a * b == b * a
        assert (a + b) - b == a
        if not b.is_zero():
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.is_zero() or r.degree < b.degree

    @given(polys, polys)
    @settings(max_examples=60)
    def test_gcd_matches_sympy(self, a, b):
        if a.is_zero() and b.is_zero():
            return
        g = poly_gcd(a, b)
        ref = sympy.gcd(to_sympy(a), to_sympy(b))
        assert g.degree == ref.degree()

    def test_reciprocal(self):
        assert reciprocal(UniPoly([1, 2, 3])) == UniPoly([3, 2, 1])

    def test_squarefree_drops_repeats(self):
        p = UniPoly([-1, 1]) ** 3 * UniPoly([1, 1])
        assert squarefree(p).degree == 2


class TestSturm:
    def test_counts_roots_of_x2_minus_2(self):
        p = UniPoly([-2, 0, 1])
        assert sturm_count(p, -2, 2) == 2
        assert sturm_count(p, 0, 2) == 1
        assert real_root_count(p) == 2

    @given(polys)
    @settings(max_examples=80, deadline=None)
    def test_real_root_count_matches_sympy(self, p):
        if p.degree < 1:
            return
        assert real_root_count(p) == len(set(sympy.real_roots(to_sympy(p))))

    def test_isolation_intervals_are_disjoint_and_contain_roots(self):
        p = UniPoly([6, -5, -2, 1])      # (x-1)(x+2)(x-3)
        ivs = isolate_real_roots(p)
        assert len(ivs) == 3
        for (lo, hi), r in zip(ivs, (-2, 1, 3)):
            assert lo <= r <= hi


class TestIntervals:
    def test_exact_arithmetic_stays_exact(self):
        a = Interval(Fraction(1, 3), Fraction(1, 2))
        b = a * a - a
        assert b.exact
        assert b.lower <= Fraction(1, 9) - Fraction(1, 2)

    def test_float_operations_enclose(self):
        a = Interval(0.1)
        s = a + a + a
        assert s.lower <= Fraction(3, 10) <= s.upper

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            Interval(2, 1)

    def test_complex_product_encloses(self):
        z = ComplexInterval(Interval(0.6), Interval(0.8))
        w = z * z
        assert w.re.lower <= -0.28 <= w.re.upper
        assert w.im.lower <= 0.96 <= w.im.upper


class TestMPoly:
    def test_resultant_eliminates(self):
        X, Y = MPoly.var(2, 0), MPoly.var(2, 1)
        f = X * X + Y * Y - MPoly.const(2, 1)
        g = X - Y
        r = resultant(f, g, 0)
        assert r.degree(0) <= 0
        # 2 y^2 - 1
        assert r.degree(1) == 2

    def test_univariate_resultant_zero_iff_common_root(self):
        assert univariate_resultant(UniPoly([-1, 1]), UniPoly([-1, 0, 1])) == 0
        assert univariate_resultant(UniPoly([-2, 1]), UniPoly([-1, 0, 1])) != 0


class TestCyclotomic:
    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5, 6, 8, 12, 15])
    def test_cyclotomic_poly_matches_sympy(self, q):
        ref = sympy.Poly(sympy.cyclotomic_poly(q, x), x).all_coeffs()
        assert [int(c) for c in reversed(cyclotomic_poly(q).coeffs)] == [int(c) for c in ref]

    def test_order_detection(self):
        assert cyclotomic_order(cyclotomic_poly(12)) == 12
        assert cyclotomic_order(UniPoly([-2, 1])) is None

    def test_zeta_power_is_one(self):
        z = CyclotomicValue.zeta(5, 2)
        assert z ** 5 == CyclotomicValue(1, 1)
        assert 1 + z + z ** 2 + z ** 3 + z ** 4 == CyclotomicValue(5, 0)

    def test_lift_preserves_value(self):
        z = CyclotomicValue.zeta(3, 1)
        assert z.lift(6) == CyclotomicValue.zeta(6, 2)
        with pytest.raises(ValueError):
            z.lift(4)


class TestNumberFields:
    def test_factoring(self):
        fs = factor_integer_poly(UniPoly([-1, 0, 0, 0, 1]))
        assert sorted(f.degree for f, _ in fs) == [1, 1, 2]

    def test_circle_roots_of_salem_like_factor(self):
        # x^4 - x^3 - x^2 - x + 1 has exactly two unit-circle roots
        fields = NumberField.circle_roots(UniPoly([1, -1, -1, -1, 1]))
        assert len(fields) == 2
        for K in fields:
            assert K.certify()
            assert abs(abs(K.gen_complex()) - 1) < 1e-12

    def test_field_arithmetic_and_conjugation(self):
        K = NumberField.circle_roots(UniPoly([1, -1, 1]))[0]      # primitive sixth root
        a = K.gen()
        assert a ** 6 == K.one()
        assert a * a.conjugate() == K.one()
        assert a.inverse() == a ** 5
