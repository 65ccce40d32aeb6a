import itertools
import random

import pytest

from expansive.cli.polyparse import parse_polynomial as P
from expansive.engine import (EngineConfig, decide_cyclic, decide_family, decide_module, replay_family,
                              replay_verdict, verify_witness)
from expansive.engine.torus import UNITAL
from expansive.presentations import IdealSpec, LaurentPoly, ModuleSpec, shift_family
from expansive.cli.polyparse import parse_generator

from conftest import random_laurent

PRIMES = (2, 3, 5, 7, 11)


def chain(n):
    return IdealSpec(tuple(LaurentPoly.var(i + 1) - p for i, p in enumerate(PRIMES[:n])))


def test_principal_expansive():
    v = decide_cyclic(IdealSpec((P("x1 - 2"),)))
    assert v.expansive
    assert replay_verdict(v, IdealSpec((P("x1 - 2"),)))
    assert UNITAL in v.as_dict()["assumptions"]


def test_free_variables_extend_witness():
    spec = IdealSpec((P("x1^2 + 1"),), frozenset({1, 4}))
    v = decide_cyclic(spec)
    assert v.non_expansive
    assert verify_witness(spec.generators, v.witness)


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_ideals(n):
    v = decide_cyclic(chain(n))
    assert v.expansive and replay_verdict(v, chain(n))


def test_module_needs_every_annihilator():
    m = ModuleSpec((IdealSpec((P("x1 - 2"),)), IdealSpec((P("x1 - 1"),))))
    v = decide_module(m)
    assert v.non_expansive and v.violated == 1
    m2 = ModuleSpec((IdealSpec((P("x1 - 2"),)), IdealSpec((P("x1 - 3"),))))
    v2 = decide_module(m2)
    assert v2.expansive and len(v2.certificates) == 2
    assert replay_verdict(v2, m2)


def test_report_shape():
    d = decide_cyclic(IdealSpec((P("x1^2 + x1 + 1"),))).as_dict()
    assert d["verdict"] == "non_expansive"
    assert set(d["evidence"]) == {"witness", "annihilator"}


def test_family_all_ones():
    v = decide_family(shift_family())
    assert v.non_expansive and replay_family(v, shift_family())


def test_family_truncation_expansive():
    fam = parse_generator("e(n) - 2")
    v = decide_family(fam)
    assert v.expansive and v.certificates[0]["kind"] == "truncation"
    assert replay_family(v, fam)


def test_family_witness_must_extend():
    # f_n = e(n)^2 + 1 for all n: i at every coordinate; truncation witness extends
    fam = parse_generator("e(n)^2 + 1")
    v = decide_family(fam, n_max=2)
    assert v.status in ("non_expansive", "unknown")
    if v.non_expansive:
        assert verify_witness(fam, v.witness)


def test_permutation_and_duplication_invariance():
    rng = random.Random(5)
    for _ in range(10):
        gens = [random_laurent(rng, max_terms=4, coeff=3, exp=1) for _ in range(2)]
        base = decide_cyclic(IdealSpec(tuple(gens))).status
        for perm in itertools.permutations(gens + [gens[0]]):
            assert decide_cyclic(IdealSpec(tuple(perm))).status == base


def test_tight_budget_gives_unknown_or_answer():
    spec = IdealSpec((P("x1 + x2 + x3 - 3*x1*x2*x3 + 1"),))
    v = decide_cyclic(spec, EngineConfig(budget=5, max_depth=2))
    assert v.status in ("non_expansive", "unknown")


def test_generator_sequence_choice_does_not_change_verdicts():
    from expansive.presentations import GroupDescription, normalize_to_lambda

    rng = random.Random(11)
    for _ in range(8):
        anns = [[random_laurent(rng, variables=(1, 2, 3), max_terms=3, coeff=3, exp=1)]]
        statuses = set()
        for seq in itertools.permutations((1, 2, 3)):
            rec = normalize_to_lambda(GroupDescription(rank=3), anns, generator_sequence=seq)
            statuses.add(decide_module(rec.module).status)
        statuses.discard("unknown")
        assert len(statuses) <= 1
