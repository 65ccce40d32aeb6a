"""Exact arithmetic kernel: rationals, polynomials, roots of unity, intervals."""

from fractions import Fraction as Rational

from .cyclotomic import CyclotomicValue, cyclotomic_order, cyclotomic_poly
from .fields import FieldElement, GaussianElement, GaussianField, NumberField, factor_integer_poly
from .interval import ComplexInterval, Interval, interval_eval
from .mpoly import MPoly, exact_divide, mpoly_gcd, resultant
from .unipoly import (UniPoly, isolate_real_roots, poly_gcd, real_root_count, reciprocal,
                      squarefree, sturm_count, sturm_sequence)

__all__ = [
    "Rational", "UniPoly", "MPoly", "CyclotomicValue", "Interval", "ComplexInterval",
    "NumberField", "FieldElement", "GaussianField", "GaussianElement",
    "poly_gcd", "sturm_count", "sturm_sequence", "isolate_real_roots", "real_root_count",
    "reciprocal", "squarefree", "resultant", "mpoly_gcd", "exact_divide", "interval_eval",
    "cyclotomic_poly", "cyclotomic_order", "factor_integer_poly",
]
