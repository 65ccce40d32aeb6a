from fractions import Fraction

import numpy as np
import pytest

from expansive.cli.polyparse import parse_polynomial as P
from expansive.dynamics import (Window, build_witness_sequence, check_relations, confirm,
                                expansiveness_constant, parse_sequence_text, reduce_mod_one, shift_orbit)
from expansive.engine import TorusWitness
from expansive.engine.witness import WitnessError
from expansive.exact import CyclotomicValue

Z = CyclotomicValue.zeta


def test_constant():
    c = expansiveness_constant([P("x1 - 3*x2 + 2"), P("x1 + 1")])
    assert c.K == 6 and c.epsilon == Fraction(1, 60)
    assert expansiveness_constant([P("x1 + 1")], factor=4).epsilon == Fraction(1, 8)


def test_window_budget():
    with pytest.raises(ValueError):
        Window((1, 2, 3), 300)
    assert Window((2, 1), 3).variables == (1, 2)


def test_reduce_mod_one_range():
    r = reduce_mod_one(np.array([0.5, -0.5, 1.25, -2.75]))
    assert np.allclose(r, [0.5, 0.5, 0.25, 0.25])


def test_zeta3_sequence():
    gens = [P("x1^2 + x1 + 1")]
    eps = expansiveness_constant(gens).epsilon
    seq = build_witness_sequence(gens, TorusWitness({1: Z(3, 1)}), eps / 2, Window((1,), 50))
    rep = confirm(gens, seq)
    assert rep.max_residual < 1e-12
    assert seq.sup_norm <= float(eps)
    assert seq.value((0,)) == pytest.approx(float(eps / 2))


def test_bad_witness_and_delta():
    gens = [P("x1^2 + x1 + 1")]
    w = Window((1,), 10)
    with pytest.raises(WitnessError):
        build_witness_sequence(gens, TorusWitness({1: Z(4, 1)}), Fraction(1, 100), w)
    with pytest.raises(ValueError):
        build_witness_sequence(gens, TorusWitness({1: Z(3, 1)}), Fraction(1, 2), w)


def test_constant_sequence_and_coefficient_sum():
    w = Window((1,), 5)
    vals = np.full(w.shape, 0.25)
    assert check_relations(vals, w, [P("x1 - 1")]).max_residual == 0
    assert check_relations(vals, w, [P("x1 + 1")]).max_residual == pytest.approx(0.5)
    assert check_relations(vals, w, [P("x1 + 3")]).max_residual == pytest.approx(0.0)


def test_window_too_small():
    with pytest.raises(ValueError, match="too small"):
        check_relations(np.zeros(3), Window((1,), 1), [P("x1^3 - 1")])


def test_shift_invariance():
    gens = [P("x1 + x2 + 1")]
    w = TorusWitness({1: Z(3, 1), 2: Z(3, 2)})
    seq = build_witness_sequence(gens, w, Fraction(1, 40), Window((1, 2), 20))
    shifted, w2 = shift_orbit(seq.values, seq.window, (3, -2))
    assert w2.N == 17
    assert check_relations(shifted, w2, gens).max_residual < 1e-12
    assert np.isclose(shifted[w2.N, w2.N], seq.value((3, -2)))
    with pytest.raises(ValueError):
        shift_orbit(seq.values, seq.window, (25, 0))


def test_text_round_trip():
    gens = [P("x1^2 + 1")]
    seq = build_witness_sequence(gens, TorusWitness({1: Z(4, 1)}), Fraction(1, 40), Window((1,), 6))
    back = parse_sequence_text(seq.to_text())
    assert back.window == seq.window and back.delta == seq.delta
    assert np.allclose(back.values, seq.values, atol=1e-12)
