import pytest
from hypothesis import given, strategies as st

from expansive.presentations import (GroupDescription, IdealSpec, LaurentPoly, ModuleSpec,
                                     augmentation_poly, family_expand, normalize_to_lambda,
                                     prune_free_variables, shift_family)

x1, x2, x3 = (LaurentPoly.var(v) for v in (1, 2, 3))

terms = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5), max_size=5)


def build(d):
    return LaurentPoly({((1, a), (2, b)): c for (a, b), c in d.items()})


@given(terms, terms)
def test_laurent_ring_laws(a, b):
    f, g = build(a), build(b)
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g).one_norm() <= f.one_norm() * g.one_norm()


def test_monomials_invert():
    m = x1 ** 2 * x2 ** -3
    assert (m * m.inverted()) == LaurentPoly.const(1)
    assert m.is_monomial()


def test_zero_coefficients_dropped():
    f = x1 - x1
    assert f.is_zero()
    assert (x1 + 2 - 2).terms == x1.terms


def test_evaluate_defaults_to_one():
    f = 3 * x1 * x2 ** -1 - x3
    assert f.evaluate({1: 2, 2: 4}) == 3 * 2 / 4 - 1


def test_ideal_checks_ambient():
    with pytest.raises(ValueError):
        IdealSpec((x1 + x2,), frozenset({1}))
    with pytest.raises(ValueError):
        IdealSpec(())


def test_prune_free_variables():
    spec = IdealSpec((x1 - 2,), frozenset({1, 2, 5}))
    pruned, free = prune_free_variables(spec)
    assert pruned.ambient_vars == frozenset({1})
    assert free == [2, 5]


def test_module_shares_ambient():
    m = ModuleSpec((IdealSpec((x1 - 2,)), IdealSpec((x3 - 1,))))
    assert all(a.ambient_vars == frozenset({1, 3}) for a in m.annihilators)


def test_normalize_adds_torsion_relations():
    g = GroupDescription(rank=2, torsion={2: 3})
    rec = normalize_to_lambda(g, [[x1 - 2]])
    gens = rec.module.annihilators[0].generators
    assert x2 ** 3 - 1 in gens
    assert rec.variable_of(2) == 2


def test_normalize_respects_generator_sequence():
    rec = normalize_to_lambda(GroupDescription(), [[x1 - x3]], generator_sequence=[3, 1])
    assert rec.module.annihilators[0].generators == (x2 - x1,)
    with pytest.raises(ValueError):
        normalize_to_lambda(GroupDescription(), [[x1 - x3]], generator_sequence=[3])
    with pytest.raises(ValueError):
        normalize_to_lambda(GroupDescription(rank=1), [[x2]])


def test_shift_family_members():
    fam = shift_family()
    f1, f2 = family_expand(fam, 2)
    assert f1 == x2 - 2 * x1 + 1
    assert f2 == x3 - 3 * x1 + 2
    assert augmentation_poly(fam).is_zero()
    with pytest.raises(ValueError):
        family_expand(fam, 0)
