"""Acceptance criteria, one test each.  Run with ``pytest -v tests/test_acceptance.py``."""

import random
import time
from fractions import Fraction

import numpy as np
import pytest
import sympy

from expansive.cli.main import decide_problem, fixture_names, fixture_text
from expansive.cli.problem import cyclic_input, generators_input, load_problem, module_spec, witness_input
from expansive.cli.polyparse import parse_polynomial, parse_univariate
from expansive.dynamics import Window, build_witness_sequence, confirm, expansiveness_constant
from expansive.engine import (EngineConfig, decide_cyclic, decide_family, replay_certificate, replay_family,
                              replay_verdict, torus_intersection, verify_witness)
from expansive.engine.unit_circle import unit_circle_root_count
from expansive.exact import UniPoly
from expansive.presentations import (IdealSpec, LaurentPoly, family_expand, format_laurent, make_exponent,
                                     shift_family)
from expansive.valuation import (AlgebraicUnitSpec, LinearUnitsSpec, decide_algebraic_unit,
                                 decide_linear_units, enumerate_nonexpansive_pairs)

from conftest import random_laurent

PRIMES = (2, 3, 5, 7, 11)


def test_criterion_1_fixture_verdicts():
    t0 = time.perf_counter()
    x1 = LaurentPoly.var(1)
    v = decide_cyclic(IdealSpec((x1 - 2,)))
    assert v.expansive and replay_verdict(v, IdealSpec((x1 - 2,)))

    fam = shift_family()
    v = decide_family(fam)
    assert v.non_expansive and v.witness.is_all_ones()
    assert replay_family(v, fam)

    for n in range(1, 6):
        ideal = IdealSpec(tuple(LaurentPoly.var(i + 1) - p for i, p in enumerate(PRIMES[:n])))
        v = decide_cyclic(ideal)
        assert v.expansive and replay_verdict(v, ideal), n

    v = decide_linear_units(LinearUnitsSpec(H=[(2, 1), (1, 1)], G=[(2, 1)]))
    assert v.non_expansive and v.witness.kind == "localization"

    v = decide_linear_units(LinearUnitsSpec(H=[(1, 0), (2, 1)], G=[(1, 0), (2, 1)]))
    assert v.non_expansive and v.witness.kind == "log-map"
    c = Fraction(v.witness.data["c"])
    assert c == -1          # Re z = -1 on the unit circle forces z = -1

    v = decide_linear_units(LinearUnitsSpec(H=[(1, 0), (3, 1)], G=[(1, 0), (3, 1)]))
    assert v.expansive
    elapsed = time.perf_counter() - t0
    print(f"criterion 1: {elapsed:.3f} s")
    assert elapsed < 5


def test_criterion_2_quartic_enumeration():
    t0 = time.perf_counter()
    got = set(enumerate_nonexpansive_pairs(50))
    elapsed = time.perf_counter() - t0
    box = [(a, b) for a in range(-50, 51) if a for b in range(-50, 51)]
    want = {(a, b) for a, b in box if a in (b + 1, -(b + 1), b - 1, -(b - 1), b, -b)}
    print(f"criterion 2: {len(got)} pairs, symmetric difference {len(got ^ want)}, {elapsed:.3f} s")
    assert got == want
    assert elapsed < 1


def _random_unipoly(rng: random.Random) -> UniPoly:
    d = rng.randint(1, 8)
    lead = rng.choice([c for c in range(-10, 11) if c])
    coeffs = [rng.randint(-10, 10) for _ in range(d)] + [lead]
    if rng.random() < 0.5:      # self-reciprocal half of the sample
        sign = rng.choice([1, -1])
        for k in range(d // 2 + 1):
            coeffs[d - k] = sign * coeffs[k] if k != d - k else (coeffs[k] if sign == 1 else 0)
        if coeffs[d] == 0:
            coeffs[d] = coeffs[0] = lead
    return UniPoly(coeffs)


def _numeric_count(p: UniPoly):
    x = sympy.Symbol("x")
    sq = sympy.Poly(list(reversed([int(c) for c in p.coeffs])), x).sqf_part()
    coeffs = [float(c) for c in sq.all_coeffs()]
    roots = np.roots(coeffs) if len(coeffs) > 1 else np.array([])
    roots = roots[np.abs(roots) > 1e-12]
    dist = np.abs(np.abs(roots) - 1)
    return int(np.sum(dist <= 1e-6)), dist


def test_criterion_3_unit_circle_oracle():
    rng = random.Random(3003)
    t0 = time.perf_counter()
    disagreements, compared, on_circle = [], 0, 0
    for _ in range(500):
        p = _random_unipoly(rng)
        exact = unit_circle_root_count(p).count
        numeric, dist = _numeric_count(p)
        if np.any((dist > 1e-9) & (dist <= 1e-6)):
            continue        # inside the numeric margin: no reliable reference
        compared += 1
        on_circle += exact > 0
        if exact != numeric:
            disagreements.append((p, exact, numeric))
    elapsed = time.perf_counter() - t0
    print(f"criterion 3: compared {compared}/500, {on_circle} with circle roots, "
          f"{len(disagreements)} disagreements, {elapsed:.2f} s")
    assert not disagreements
    assert compared >= 490
    assert elapsed < 60


GRID = 720


def test_criterion_4_torus_oracle():
    rng = random.Random(4004)
    th = np.exp(2j * np.pi * np.arange(GRID) / GRID)
    X, Y = th[:, None], th[None, :]
    counts = {"empty": 0, "nonempty": 0, "unknown": 0}
    t0 = time.perf_counter()
    done = 0
    while done < 100:
        f = random_laurent(rng, variables=(1, 2), max_terms=6, coeff=5, exp=2)
        if len(f.variables()) < 2:
            continue
        done += 1
        r = torus_intersection([f])
        counts[r.status] += 1
        vals = sum(c * X ** dict(e).get(1, 0) * Y ** dict(e).get(2, 0) for e, c in f.terms.items())
        grid_min = float(np.abs(vals).min())
        # every torus point lies within pi/GRID of a grid point in each angle
        lipschitz = sum(abs(c) * sum(abs(k) for _, k in e) for e, c in f.terms.items()) * np.pi / GRID
        if r.nonempty:
            assert verify_witness([f], r.witness), f
            assert grid_min <= lipschitz, f
        elif r.empty:
            assert replay_certificate(r.certificate, [f]), f
            assert grid_min > lipschitz, (f, grid_min, lipschitz)
    elapsed = time.perf_counter() - t0
    rate = counts["unknown"] / 100
    print(f"criterion 4: {counts}, unknown rate {rate:.0%}, {elapsed:.1f} s")
    assert rate <= 0.10
    assert elapsed < 600


DYNAMICS_FAMILY_N = 2      # 201^3 lattice points stay under the window budget


def _fixture_simulations():
    """(name, generators, exact witness) for every non-expansive fixture with a torus witness."""
    for name in fixture_names():
        p = load_problem(fixture_text(name), name)
        if p.kind == "linear-units":
            continue
        if p.kind == "algebraic-unit":
            m = parse_univariate(p.data["minpoly"])
            source = [LaurentPoly({make_exponent([(1, k)]): int(c) for k, c in enumerate(m.coeffs)})]
        elif p.kind == "module":
            v, _ = decide_problem(p, EngineConfig())
            if not v.non_expansive:
                continue
            source = list(module_spec(p).annihilators[v.violated].generators)
        elif p.kind == "cyclic":
            spec = cyclic_input(p)
            source = (spec[0], DYNAMICS_FAMILY_N) if isinstance(spec, tuple) else list(spec.generators)
        else:
            source = generators_input(p)
        w = witness_input(p, required=False) if p.kind in ("witness-check", "simulate") else None
        if isinstance(source, tuple):
            fam = source[0]
            gens = family_expand(fam, DYNAMICS_FAMILY_N)
            if w is None:
                v = decide_family(fam)
                w = v.witness if v.non_expansive else None
        else:
            gens = source
            if w is None:
                v = decide_cyclic(IdealSpec(tuple(gens)))
                w = v.witness if v.non_expansive else None
        if w is not None and w.is_exact():
            yield name, gens, w


def test_criterion_5_dynamical_confirmation():
    seen = []
    for name, gens, w in _fixture_simulations():
        const = expansiveness_constant(gens)
        window = Window.for_generators(gens, 100)
        seq = build_witness_sequence(gens, w, const.epsilon / 2, window)
        rep = confirm(gens, seq)
        seen.append((name, rep.max_residual, seq.sup_norm))
        assert rep.max_residual <= 1e-9, name
        assert seq.sup_norm <= float(const.epsilon), name
    print("criterion 5: " + ", ".join(f"{n} (residual {r:.1e})" for n, r, _ in seen))
    names = {n for n, _, _ in seen}
    assert {"example-3-4", "cyclic-zeta3", "unit-lehmer"} <= names


def _random_unit_poly(rng: random.Random) -> UniPoly:
    x = sympy.Symbol("x")
    while True:
        d = rng.randint(1, 6)
        coeffs = [rng.choice([1, -1])] + [rng.randint(-3, 3) for _ in range(d - 1)] + [1]
        if sympy.Poly(list(reversed(coeffs)), x).is_irreducible:
            return UniPoly(coeffs)


def test_criterion_6_cross_route_consistency():
    rng = random.Random(6006)
    disagreements = []
    statuses = {}
    for _ in range(50):
        m = _random_unit_poly(rng)
        a = decide_algebraic_unit(AlgebraicUnitSpec(m)).status
        f = LaurentPoly({make_exponent([(1, k)]): int(c) for k, c in enumerate(m.coeffs)})
        b = decide_cyclic(IdealSpec((f,))).status
        statuses[a] = statuses.get(a, 0) + 1
        if a != b:
            disagreements.append((m, a, b))
    print(f"criterion 6: {statuses}, {len(disagreements)} disagreements")
    assert not disagreements


def test_criterion_7_metamorphic_suite():
    rng = random.Random(7007)
    replays = 0
    for _ in range(25):
        gens = [random_laurent(rng, max_terms=4, coeff=4, exp=2) for _ in range(rng.randint(1, 2))]
        base = decide_cyclic(IdealSpec(tuple(gens)))
        # permutation and duplication
        shuffled = gens[:] + [rng.choice(gens)]
        rng.shuffle(shuffled)
        v = decide_cyclic(IdealSpec(tuple(shuffled)))
        assert v.status == base.status
        if v.non_expansive:
            assert verify_witness(gens, v.witness)
        # free-variable pruning
        ambient = frozenset().union(*(g.variables() for g in gens)) | {7, 9}
        wide = IdealSpec(tuple(gens), ambient)
        v = decide_cyclic(wide)
        assert v.status == base.status
        assert replay_verdict(v, wide)
        # certificate replay
        if base.expansive:
            assert replay_verdict(base, IdealSpec(tuple(gens)))
            replays += 1
    # parser round trip
    for _ in range(200):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = make_exponent((v, rng.randint(-5, 5)) for v in rng.sample(range(1, 6), rng.randint(0, 3)))
            terms[e] = rng.randint(-50, 50)
        f = LaurentPoly(terms)
        assert parse_polynomial(format_laurent(f)) == f
    print(f"criterion 7: {replays} expansive verdicts replayed, 200 parser round trips")
    assert replays > 0
