import pytest

from expansive.cli.polyparse import parse_polynomial as P
from expansive.engine.witness import (NumericCandidate, TorusWitness, WitnessError, cyclotomic_form,
                                      describe_value, verify_witness)
from expansive.exact import CyclotomicValue, NumberField, UniPoly
from expansive.presentations import shift_family

Z = CyclotomicValue.zeta


def test_roots_of_unity():
    assert verify_witness([P("x1^2 + x1 + 1")], TorusWitness({1: Z(3, 1)}))
    assert not verify_witness([P("x1^2 + x1 + 1")], TorusWitness({1: Z(4, 1)}))


def test_unassigned_variables_are_one():
    assert verify_witness([P("x1 + x2 - 2")], TorusWitness({}))


def test_mixed_orders():
    w = TorusWitness({1: Z(2, 1), 2: Z(3, 1)})
    assert verify_witness([P("x1^2 - 1"), P("x2^3 - 1")], w)


def test_numeric_values_rejected():
    w = TorusWitness({1: NumericCandidate(0.25, 1e-3)})
    with pytest.raises(WitnessError):
        verify_witness([P("x1^4 - 1")], w)


def test_non_unimodular_value_rejected():
    K = NumberField.real(UniPoly([-2, 0, 1]), 1, 2)     # sqrt 2
    w = TorusWitness({1: K.gen()})
    assert not verify_witness([P("x1^2 - 2")], w)


def test_circle_field_value():
    K = NumberField.circle_roots(UniPoly([1, -1, -1, -1, 1]))[0]
    w = TorusWitness({1: K.gen()})
    assert verify_witness([P("x1^4 - x1^3 - x1^2 - x1 + 1")], w)
    d = describe_value(K.gen())
    assert "minpoly" in d


def test_family_witness():
    assert verify_witness(shift_family(), TorusWitness({}))
    assert not verify_witness(shift_family(), TorusWitness({1: Z(2, 1)}))


def test_cyclotomic_form_recognises_roots_of_unity():
    K = NumberField.circle_roots(UniPoly([1, 1, 1]))[0]
    w = cyclotomic_form(TorusWitness({1: K.gen()}))
    v = w.value(1)
    assert isinstance(v, CyclotomicValue) and v.order == 3


def test_float_values_rejected():
    with pytest.raises(WitnessError):
        verify_witness([P("x1 - 1")], TorusWitness({1: 1.0}))
