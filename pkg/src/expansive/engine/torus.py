"""Does the zero set of an ideal meet the unit torus?"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from ..exact.cyclotomic import CyclotomicValue
from ..exact.unipoly import UniPoly, poly_gcd
from ..presentations import IdealSpec, LaurentPoly, make_exponent, prune_free_variables
from . import boxes
from .torus2 import NotDecided, replay_2d, torus_points_2d
from .unit_circle import replay_unit_circle, unit_circle_fields, unit_circle_root_count
from .witness import (NumericCandidate, TorusWitness, WitnessError, cyclotomic_form,
                      evaluate_exact, verify_witness)

UNITAL = "unital homomorphisms assumed"


@dataclass
class EngineConfig:
    budget: int = 10 ** 6
    max_depth: int = 40
    tolerance: float = 1e-9

    def as_dict(self) -> dict:
        return {"budget": self.budget, "max_depth": self.max_depth, "tolerance": self.tolerance}


@dataclass
class TorusResult:
    status: str                       # "nonempty" | "empty" | "unknown"
    witness: TorusWitness | None = None
    certificate: dict | None = None
    reason: str = ""
    budget: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)

    @property
    def nonempty(self) -> bool:
        return self.status == "nonempty"

    @property
    def empty(self) -> bool:
        return self.status == "empty"


def _vars_of(gens: Sequence[LaurentPoly]) -> list[int]:
    return sorted(frozenset().union(*(f.variables() for f in gens))) if gens else []


def _trivial_exclusion(gens: Sequence[LaurentPoly]) -> dict | None:
    for i, f in enumerate(gens):
        if f.is_zero():
            continue
        if f.is_constant():
            kind = "trivial" if abs(f.constant_value()) == 1 else "constant"
            return {"kind": kind, "generator": i, "value": f.constant_value()}
        if f.is_monomial():
            return {"kind": "monomial", "generator": i}
    return None


def _univariate(gens: Sequence[LaurentPoly], v: int) -> UniPoly:
    g = UniPoly()
    for f in gens:
        if not f.is_zero():
            g = poly_gcd(g, f.to_unipoly(v))
    return g.primitive()


def _as_mpolys(gens: Sequence[LaurentPoly], variables: Sequence[int]):
    return [f.to_mpoly(variables) for f in gens if not f.is_zero()]


# ----------------------------------------------------------------------
# variable elimination for n >= 3
# ----------------------------------------------------------------------

def _single_occurrence(gens: Sequence[LaurentPoly]):
    """(generator index, variable, sign) for a variable met once, to the power +-1."""
    owners: dict[int, list[int]] = {}
    for i, f in enumerate(gens):
        for v in f.variables():
            owners.setdefault(v, []).append(i)
    for v in sorted(owners):
        if len(owners[v]) != 1:
            continue
        i = owners[v][0]
        terms = [(e, c) for e, c in gens[i].terms.items() if any(w == v for w, _ in e)]
        if len(terms) != 1:
            continue
        e, c = terms[0]
        k = dict(e)[v]
        if abs(k) == 1 and len(gens[i].terms) > 1:
            return i, v, k
    return None


def eliminate(gens: Sequence[LaurentPoly], i: int, v: int, k: int):
    """Remove x_v from generator i = c*mu*x_v^k + q.

    On the torus x_v^k = -q/(c mu) is unimodular iff q q(1/x) = c^2.
    Returns (reduced generators, q, c, mu).
    """
    f = gens[i]
    (e, c), = [(e, c) for e, c in f.terms.items() if any(w == v for w, _ in e)]
    mu = LaurentPoly({tuple((w, j) for w, j in e if w != v): 1})
    q = LaurentPoly({ee: cc for ee, cc in f.terms.items() if ee != e})
    r = q * q.inverted() - c * c
    reduced = [g for j, g in enumerate(gens) if j != i]
    if not r.is_zero():
        reduced.append(r)
    return reduced, q, c, mu


def _binomial(gens: Sequence[LaurentPoly]):
    """(generator index, variable) for a generator c*x_v^(+-1)*A + c'*B with |c| = |c'|.

    On the torus such a generator fixes x_v = s*(B/A)^k, a unimodular value.
    """
    for i, f in enumerate(gens):
        if len(f.terms) != 2:
            continue
        (e1, c1), (e2, c2) = sorted(f.terms.items())
        if abs(c1) != abs(c2):
            continue
        for v in sorted(f.variables()):
            k1, k2 = dict(e1).get(v, 0), dict(e2).get(v, 0)
            if {abs(k1), abs(k2)} == {0, 1}:
                return i, v
    return None


def substitute_binomial(gens: Sequence[LaurentPoly], i: int, v: int):
    """Replace x_v using generator i; returns (reduced generators, sign, exponent vector of x_v)."""
    (e1, c1), (e2, c2) = sorted(gens[i].terms.items())
    if dict(e1).get(v, 0) == 0:
        (e1, c1), (e2, c2) = (e2, c2), (e1, c1)
    k = dict(e1)[v]
    a = {u: j for u, j in e1 if u != v}
    b = dict(e2)
    sign = -c2 // c1
    image = {u: k * (b.get(u, 0) - a.get(u, 0)) for u in set(a) | set(b)}
    image = tuple(sorted((u, j) for u, j in image.items() if j))
    reduced = []
    for j, f in enumerate(gens):
        if j == i:
            continue
        out: dict = {}
        for e, c in f.terms.items():
            p = dict(e).get(v, 0)
            rest = {u: m for u, m in e if u != v}
            for u, m in image:
                rest[u] = rest.get(u, 0) + p * m
            ne = make_exponent(rest.items())
            out[ne] = out.get(ne, 0) + c * (sign if p % 2 else 1)
        reduced.append(LaurentPoly(out))
    return reduced, sign, image


# ----------------------------------------------------------------------
# main dispatch
# ----------------------------------------------------------------------

def torus_intersection(ideal: IdealSpec | Sequence[LaurentPoly],
                       config: EngineConfig | None = None) -> TorusResult:
    """Decide whether V(ideal) meets the unit torus.

    Unassigned or pruned variables of a witness take the value 1.
    """
    config = config or EngineConfig()
    gens = list(ideal.generators) if isinstance(ideal, IdealSpec) else list(ideal)
    res = _solve(gens, config)
    if res.certificate is not None:
        res.certificate = dict(res.certificate, assumptions=[UNITAL])
    return res


def _solve(gens: list[LaurentPoly], config: EngineConfig) -> TorusResult:
    live = [f for f in gens if not f.is_zero()]
    cert = _trivial_exclusion(gens)
    if cert is not None:
        return TorusResult("empty", certificate=cert)
    variables = _vars_of(live)
    n = len(variables)
    if n == 0:
        return TorusResult("nonempty", TorusWitness({}, "no constraints"))
    if n == 1:
        return _solve_1(gens, variables[0])
    blocks = _blocks(live)
    if len(blocks) > 1:
        return _solve_blocks(gens, blocks, config)
    if n == 2:
        try:
            return _solve_2(gens, variables)
        except NotDecided as exc:
            return _solve_numeric(gens, variables, config, note=str(exc))
    return _solve_many(gens, variables, config)


def _solve_1(gens, v) -> TorusResult:
    g = _univariate(gens, v)
    uc = unit_circle_root_count(g)
    if uc.count == 0:
        return TorusResult("empty", certificate={"kind": "sturm", "variable": v,
                                                 "gcd": [str(c) for c in g.coeffs],
                                                 "unit_circle": uc.as_dict()})
    K = unit_circle_fields(g)[0]
    w = cyclotomic_form(TorusWitness({v: K.gen()}, "unit-circle root of the generator gcd"))
    return TorusResult("nonempty", w)


def _solve_2(gens, variables) -> TorusResult:
    status, data = torus_points_2d(_as_mpolys(gens, variables))
    if status == "empty":
        return TorusResult("empty", certificate={"kind": "torus-2d", "variables": list(variables),
                                                 "record": data})
    x0, y0 = data
    w = cyclotomic_form(TorusWitness({variables[0]: x0, variables[1]: y0},
                                     "exact point of the two-variable intersection"))
    return TorusResult("nonempty", w)


def _blocks(gens) -> list[list[int]]:
    """Variables grouped into connected components of the 'shares a generator' graph."""
    parent: dict[int, int] = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    for f in gens:
        vs = sorted(f.variables())
        for v in vs:
            find(v)
        for a, b in zip(vs, vs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, list[int]] = {}
    for v in parent:
        comps.setdefault(find(v), []).append(v)
    return sorted(sorted(c) for c in comps.values())


def _solve_blocks(gens, blocks, config) -> TorusResult:
    witness: dict = {}
    unknown = []
    for block in blocks:
        idx = [i for i, f in enumerate(gens) if not f.is_zero() and f.variables() <= set(block)]
        sub = [gens[i] for i in idx]
        r = _solve(sub, config)
        if r.empty:
            return TorusResult("empty", certificate={"kind": "sub-ideal", "generators": idx,
                                                     "child": r.certificate})
        if r.nonempty:
            witness.update(r.witness.assignments)
        else:
            unknown.append(r)
    if unknown:
        return TorusResult("unknown", reason="; ".join(u.reason for u in unknown),
                           budget=unknown[0].budget, candidates=unknown[0].candidates)
    return TorusResult("nonempty", TorusWitness(witness, "product of independent blocks"))


def _solve_many(gens, variables, config) -> TorusResult:
    bino = _binomial(gens)
    if bino is not None:
        i, v = bino
        reduced, sign, image = substitute_binomial(gens, i, v)
        r = _solve(reduced, config)
        if r.empty:
            return TorusResult("empty", certificate={"kind": "binomial", "generator": i,
                                                     "variable": v, "child": r.certificate})
        if r.nonempty:
            w = r.witness
            try:
                xv = Fraction(1)
                for u, m in image:
                    xv = xv * _exact(w.value(u)) ** m
                if sign == -1:
                    xv = -xv
                if isinstance(xv, Fraction):
                    xv = CyclotomicValue(1, 1) if xv == 1 else CyclotomicValue.zeta(2, 1)
                full = cyclotomic_form(w.extended({v: xv}))
                if verify_witness(gens, full):
                    return TorusResult("nonempty", full)
            except (WitnessError, ZeroDivisionError, ArithmeticError, TypeError, ValueError):
                pass
        else:
            return r
    live = [(i, f) for i, f in enumerate(gens) if not f.is_zero()]
    # sub-ideals in at most two variables
    small_sets = sorted({frozenset(f.variables()) for _, f in live if len(f.variables()) <= 2},
                        key=lambda s: (len(s), sorted(s)))
    pairs = {s for s in small_sets if len(s) == 2}
    singles = [s for s in small_sets if len(s) == 1]
    for a, b in combinations(sorted(singles, key=sorted), 2):
        pairs.add(a | b)
    tried = set()
    for s in sorted(small_sets, key=lambda s: (len(s), sorted(s))) + sorted(pairs, key=sorted):
        if s in tried:
            continue
        tried.add(s)
        idx = [i for i, f in live if f.variables() <= s]
        r = _solve([gens[i] for i in idx], config)
        if r.empty:
            return TorusResult("empty", certificate={"kind": "sub-ideal", "generators": idx,
                                                     "child": r.certificate})
    # eliminate a variable that occurs once, linearly
    occ = _single_occurrence(gens)
    if occ is not None:
        i, v, k = occ
        reduced, q, c, mu = eliminate(gens, i, v, k)
        r = _solve(reduced, config)
        if r.empty:
            return TorusResult("empty", certificate={"kind": "elimination", "generator": i,
                                                     "variable": v, "child": r.certificate})
        if r.nonempty:
            try:
                w = r.witness
                val = -_exact(evaluate_exact(q, w)) / (c * evaluate_exact(mu, w))
                xv = val if k == 1 else 1 / val
                full = cyclotomic_form(w.extended({v: xv}))
                if verify_witness(gens, full):
                    return TorusResult("nonempty", full)
            except (WitnessError, ZeroDivisionError, ArithmeticError, TypeError, ValueError):
                pass
    res = _solve_numeric(gens, variables, config)
    if res.status == "unknown" and len(variables) <= MAX_SLICE_VARS:
        found = _try_slices(gens, variables, config)
        if found is not None:
            return found
    return res


MAX_SLICE_VARS = 4


def _specialize(f: LaurentPoly, v: int, sign: int) -> LaurentPoly:
    out: dict = {}
    for e, c in f.terms.items():
        k = dict(e).get(v, 0)
        rest = tuple((u, j) for u, j in e if u != v)
        out[rest] = out.get(rest, 0) + c * (sign if k % 2 else 1)
    return LaurentPoly(out)


def _slices(variables):
    for v in variables:
        for sign in (1, -1):
            yield v, ("const", sign)
    for v in variables:
        for u in variables:
            if u != v:
                for k in (1, -1):
                    yield v, ("mono", u, k)


def _exact(x):
    return Fraction(x) if isinstance(x, int) else x


def _try_slices(gens, variables, config) -> TorusResult | None:
    """Look for a torus point on a coordinate slice x_v = +-1 or x_v = x_u^(+-1).

    Slices only ever produce witnesses; an empty slice says nothing about the
    whole variety.
    """
    for v, how in _slices(variables):
        if how[0] == "const":
            sub = [_specialize(f, v, how[1]) for f in gens]
        else:
            sub = [f.substitute_monomials({v: ((how[1], how[2]),)}) for f in gens]
        r = _solve(sub, config)
        if not r.nonempty:
            continue
        w = r.witness
        try:
            if how[0] == "const":
                xv = CyclotomicValue(1, 1) if how[1] == 1 else CyclotomicValue.zeta(2, 1)
            else:
                xv = _exact(w.value(how[1])) ** how[2]
            full = cyclotomic_form(w.extended({v: xv}))
            if verify_witness(gens, full):
                full.note = f"point on the slice {_slice_name(v, how)}"
                return TorusResult("nonempty", full)
        except (WitnessError, ZeroDivisionError, ArithmeticError, TypeError, ValueError):
            continue
    return None


def _slice_name(v, how) -> str:
    if how[0] == "const":
        return f"x{v} = {how[1]}"
    return f"x{v} = x{how[1]}^{how[2]}"


def _solve_numeric(gens, variables, config, note: str = "") -> TorusResult:
    live = [f for f in gens if not f.is_zero()]
    idx = [i for i, f in enumerate(gens) if not f.is_zero()]
    cover = boxes.branch_and_bound(live, variables, config.budget, config.max_depth)
    budget = {"boxes_used": cover.boxes_used, "box_budget": config.budget,
              "max_depth": config.max_depth}
    if cover.status == "empty":
        return TorusResult("empty", certificate={"kind": "interval-cover", "variables": list(variables),
                                                 "generators": idx, "tree": cover.tree,
                                                 "leaves": sum(1 for t in cover.tree if t >= 0)},
                           budget=budget)
    candidates = []
    for box in cover.open_boxes[:16]:
        center = boxes.box_center(box)
        snapped = {v: boxes.snap_turns(t) for v, t in zip(variables, center)}
        if _worth_verifying(live, snapped):
            w = _cyclotomic_witness(snapped)
            try:
                if verify_witness(gens, w):
                    return TorusResult("nonempty", w, budget=budget)
            except WitnessError:
                pass
        candidates.append(TorusWitness({v: NumericCandidate(Fraction(t), max(b - a for a, b in box))
                                        for v, t in zip(variables, center)},
                                       "unresolved box center"))
    reason = cover.reason + (f" ({note})" if note else "")
    return TorusResult("unknown", reason=reason, budget=budget, candidates=candidates)


MAX_SNAP_ORDER = 720


def _worth_verifying(gens, turns: dict) -> bool:
    """Cheap float screen before exact verification in Z[zeta_q]."""
    q = 1
    for t in turns.values():
        q = q * t.denominator // gcd(q, t.denominator)
    if q > MAX_SNAP_ORDER:
        return False
    z = {v: cmath.exp(2j * cmath.pi * float(t)) for v, t in turns.items()}
    return all(abs(f.evaluate(z)) < 1e-6 for f in gens)


def _cyclotomic_witness(turns: dict) -> TorusWitness:
    out = {}
    for v, t in turns.items():
        q = t.denominator
        out[v] = CyclotomicValue.zeta(q, t.numerator)
    return TorusWitness(out, "root-of-unity snap of a numeric candidate")


# ----------------------------------------------------------------------
# certificate replay
# ----------------------------------------------------------------------

def replay_certificate(cert: dict, gens: Sequence[LaurentPoly]) -> bool:
    """Recheck an emptiness certificate against the generator list it was made for."""
    gens = list(gens)
    kind = cert.get("kind")
    if kind in ("trivial", "constant"):
        f = gens[cert["generator"]]
        return f.is_constant() and f.constant_value() != 0
    if kind == "monomial":
        f = gens[cert["generator"]]
        return f.is_monomial()
    if kind == "sturm":
        v = cert["variable"]
        live = [f for f in gens if not f.is_zero()]
        if _vars_of(live) != [v]:
            return False
        g = _univariate(live, v)
        uc = cert["unit_circle"]
        return ([str(c) for c in g.coeffs] == cert["gcd"] and uc["count"] == 0
                and UniPoly([Fraction(c) for c in uc["poly"]]) == g.strip_x()[0]
                and replay_unit_circle(uc))
    if kind == "torus-2d":
        variables = cert["variables"]
        if _vars_of([f for f in gens if not f.is_zero()]) != list(variables):
            return False
        try:
            return replay_2d(_as_mpolys(gens, variables), cert["record"])
        except (KeyError, ValueError, NotDecided):
            return False
    if kind == "sub-ideal":
        return replay_certificate(cert["child"], [gens[i] for i in cert["generators"]])
    if kind == "elimination":
        i, v = cert["generator"], cert["variable"]
        occ = _single_occurrence(gens)
        if occ is None or occ[:2] != (i, v):
            return False
        k = occ[2]
        reduced, *_ = eliminate(gens, i, v, k)
        return replay_certificate(cert["child"], reduced)
    if kind == "binomial":
        i, v = cert["generator"], cert["variable"]
        if _binomial(gens) != (i, v):
            return False
        reduced, *_ = substitute_binomial(gens, i, v)
        return replay_certificate(cert["child"], reduced)
    if kind == "interval-cover":
        sub = [gens[i] for i in cert["generators"]]
        return boxes.replay_cover(sub, cert["variables"], cert["tree"])
    return False
