import cmath
from fractions import Fraction

import pytest

from expansive.exact import UniPoly
from expansive.valuation import (AlgebraicUnitSpec, LinearUnitsSpec, check_log_map, decide_algebraic_unit,
                                 decide_linear_units, enumerate_nonexpansive_pairs, quartic_discriminant,
                                 replay_algebraic_unit, replay_linear_units)


def brute(a, b):
    """Does |a z + b| = 1 have a solution with |z| = 1?  By the triangle inequality."""
    return abs(abs(a) - abs(b)) <= 1 <= abs(a) + abs(b)


@pytest.mark.parametrize("a", range(-6, 7))
def test_discriminant_sign_matches_triangle_inequality(a):
    if a == 0:
        with pytest.raises(ValueError):
            quartic_discriminant(a, 1)
        return
    for b in range(-6, 7):
        assert (quartic_discriminant(a, b) <= 0) == brute(a, b)


def test_enumeration_small_box():
    pairs = set(enumerate_nonexpansive_pairs(3))
    assert (2, 1) in pairs and (-2, -1) in pairs and (3, 1) not in pairs
    with pytest.raises(ValueError):
        enumerate_nonexpansive_pairs(0)


def test_localization_witness():
    spec = LinearUnitsSpec(H=[(2, 1), (1, 1)], G=[(2, 1)])
    v = decide_linear_units(spec)
    assert v.non_expansive and v.witness.kind == "localization"
    assert replay_linear_units(v, spec)


def test_log_map_witness_z_minus_one():
    spec = LinearUnitsSpec(H=[(2, 1)], G=[(2, 1)])
    v = decide_linear_units(spec)
    assert v.non_expansive and v.witness.kind == "log-map"
    assert Fraction(v.witness.data["c"]) == -1
    z = -1
    assert abs(2 * z + 1) == 1
    assert replay_linear_units(v, spec)


def test_expansive_when_no_circle_solution():
    spec = LinearUnitsSpec(H=[(3, 1)], G=[(3, 1)])
    v = decide_linear_units(spec)
    assert v.expansive and replay_linear_units(v, spec)


def test_constraints_must_agree():
    # t + 1 needs Re z = -1/2, 2t + 1 needs Re z = -1
    spec = LinearUnitsSpec(H=[(1, 1), (2, 1)], G=[(1, 1), (2, 1)])
    v = decide_linear_units(spec)
    assert v.expansive and v.certificates[0]["reason"] == "constraints disagree"


def test_pure_scaling():
    v = decide_linear_units(LinearUnitsSpec(H=[(2, 0)], G=[(2, 0)], include_t=False))
    assert v.expansive
    assert v.assumptions    # outside the standard hypotheses, flagged


def test_spec_validation():
    with pytest.raises(ValueError):
        LinearUnitsSpec(H=[(1, 1)], G=[(2, 1)])
    with pytest.raises(ValueError):
        LinearUnitsSpec(H=[(1, 1), (-1, -1)], G=[(1, 1)])
    with pytest.raises(ValueError):
        LinearUnitsSpec(H=[(0, 1)], G=[(0, 1)])


def test_check_log_map_is_exact():
    assert check_log_map([(1, 1)], Fraction(-1, 2))
    assert not check_log_map([(1, 1)], Fraction(-1, 3))
    assert not check_log_map([(1, 1)], Fraction(2))


@pytest.mark.parametrize("coeffs, status", [
    ([-1, -1, 1], "expansive"),                       # golden ratio
    ([1, 0, 1], "non_expansive"),                     # i
])
def test_algebraic_units(coeffs, status):
    spec = AlgebraicUnitSpec(UniPoly(coeffs))
    v = decide_algebraic_unit(spec)
    assert v.status == status
    assert replay_algebraic_unit(v, spec)


def test_lehmer_polynomial_has_circle_roots():
    lehmer = UniPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    v = decide_algebraic_unit(AlgebraicUnitSpec(lehmer))
    assert v.non_expansive
    z = complex(*v.witness.data["approx"])
    assert abs(abs(z) - 1) < 1e-12
    assert abs(sum(float(c) * z ** k for k, c in enumerate(lehmer.coeffs))) < 1e-9


def test_non_unit_rejected():
    with pytest.raises(ValueError, match="not a unit"):
        AlgebraicUnitSpec(UniPoly([2, 0, 1]))
