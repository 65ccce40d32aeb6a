"""Unit-subgroup actions on integral domains.

Two classes are decided here:

* subgroups of Q(t)^* generated by degree-one polynomials a*t + b, acting on
  the ring they generate over Z[t] (``decide_linear_units``);
* the cyclic group generated by an algebraic unit xi acting on Z[xi, 1/xi]
  (``decide_algebraic_unit``).

The action is expansive iff every valuation and every logarithmic map
|phi(.)| is non-trivial on the group.  For the linear class the logarithmic
maps reduce to a point z on the unit circle with |a z + b| = 1 for every
generator, i.e. Re z = c with c = (1 - a^2 - b^2) / (2ab).  The valuation at
infinity is -1 on every degree-one polynomial, so it never witnesses
triviality and is not searched.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .engine.decide import EXPANSIVE, NON_EXPANSIVE, Verdict
from .engine.unit_circle import replay_unit_circle, unit_circle_fields, unit_circle_root_count
from .exact.unipoly import UniPoly

T = (1, 0)


def quartic_discriminant(a: int, b: int) -> int:
    """a^4 - 2(b^2+1)a^2 + (b^2-1)^2; nonpositive iff |a z + b| = 1 has a unimodular solution."""
    if a == 0:
        raise ValueError("a must be nonzero")
    return a ** 4 - 2 * (b * b + 1) * a * a + (b * b - 1) ** 2


def _canonical(pair) -> tuple[int, int]:
    a, b = int(pair[0]), int(pair[1])
    if a == 0:
        raise ValueError(f"a = 0 in pair ({a}, {b}): not a degree-one polynomial")
    return (a, b) if a > 0 else (-a, -b)


def enumerate_nonexpansive_pairs(bound: int) -> list[tuple[int, int]]:
    """All (a, b) with 1 <= |a| <= bound, |b| <= bound and a nonpositive discriminant.

    Both sign representatives of a pair are listed.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    return sorted((a, b) for a in range(-bound, bound + 1) if a
                  for b in range(-bound, bound + 1) if quartic_discriminant(a, b) <= 0)


# ----------------------------------------------------------------------
# linear units in Q(t)
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class LinearUnitsSpec:
    H: tuple
    G: tuple
    include_t: bool = True

    def __post_init__(self):
        H = [_canonical(p) for p in self.H]
        G = [_canonical(p) for p in self.G]
        if len(set(H)) != len(H):
            raise ValueError("H contains associate pairs")
        if not G and not self.include_t:
            raise ValueError("G is empty")
        if self.include_t:
            H = [T] + [p for p in H if p != T]
            G = [T] + [p for p in G if p != T]
        if not G:
            raise ValueError("G is empty")
        if not set(G) <= set(H):
            raise ValueError(f"G is not a subset of H: {sorted(set(G) - set(H))}")
        object.__setattr__(self, "H", tuple(H))
        object.__setattr__(self, "G", tuple(dict.fromkeys(G)))

    @property
    def flags(self) -> list[str]:
        if self.include_t:
            return []
        return ["t not in H: outside the stated hypotheses of the linear-unit analysis"]


@dataclass
class ValuationWitness:
    """Evidence that some valuation or logarithmic map is trivial on G.

    kind is "localization" (data: the pair whose prime is never inverted),
    "log-map" (data: c = Re z for the unimodular point z) or "embedding" (data:
    the minimal polynomial and a located unit-circle root).
    """

    kind: str
    data: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kind": self.kind, **self.data}


def _c_value(a: int, b: int) -> Fraction:
    return Fraction(1 - a * a - b * b, 2 * a * b)


def log_map_point(c: Fraction) -> complex:
    """The root of z^2 - 2cz + 1 with nonnegative imaginary part."""
    return complex(float(c), math.sqrt(max(0.0, 1 - float(c) ** 2)))


def check_log_map(pairs, c: Fraction) -> bool:
    """Exact check that z with Re z = c, |z| = 1 satisfies |a z + b| = 1 for every pair."""
    if not -1 <= c <= 1:
        return False
    return all(a * a + b * b + 2 * a * b * c - 1 == 0 for a, b in pairs)


def decide_linear_units(spec: LinearUnitsSpec) -> Verdict:
    flags = tuple(spec.flags)
    missing = [p for p in spec.H if p not in spec.G]
    if missing:
        a, b = missing[0]
        w = ValuationWitness("localization", {"pair": [a, b], "prime": _fmt_linear(a, b),
                                              "note": "the prime (a t + b) is inverted by no element of G"})
        return Verdict(NON_EXPANSIVE, witness=w, assumptions=flags)
    constraints = []
    for a, b in spec.G:
        if b == 0:
            if abs(a) != 1:
                cert = {"kind": "linear-units", "reason": "no unimodular solution",
                        "pair": [a, b], "detail": "|a z| = |a| != 1"}
                return Verdict(EXPANSIVE, certificates=[cert], assumptions=flags)
            continue
        constraints.append(((a, b), _c_value(a, b)))
    cs = sorted({c for _, c in constraints})
    record = [{"pair": [a, b], "c": str(c)} for (a, b), c in constraints]
    if not cs:
        c = Fraction(1)
    elif len(cs) == 1 and -1 <= cs[0] <= 1:
        c = cs[0]
    else:
        reason = "constraints disagree" if len(cs) > 1 else "c outside [-1, 1]"
        cert = {"kind": "linear-units", "reason": reason, "constraints": record}
        return Verdict(EXPANSIVE, certificates=[cert], assumptions=flags)
    assert check_log_map(spec.G, c)
    z = log_map_point(c)
    w = ValuationWitness("log-map", {"c": str(c), "z_minpoly": ["1", str(-2 * c), "1"],
                                     "z_approx": [z.real, z.imag], "constraints": record})
    return Verdict(NON_EXPANSIVE, witness=w, assumptions=flags)


def _fmt_linear(a: int, b: int) -> str:
    head = "t" if a == 1 else f"{a}*t"
    if b == 0:
        return head
    return f"{head} {'+' if b > 0 else '-'} {abs(b)}"


def replay_linear_units(verdict: Verdict, spec: LinearUnitsSpec) -> bool:
    """Recheck a linear-units verdict from its evidence."""
    if verdict.non_expansive:
        w = verdict.witness
        if w.kind == "localization":
            p = tuple(w.data["pair"])
            return p in spec.H and p not in spec.G
        return check_log_map(spec.G, Fraction(w.data["c"]))
    if verdict.expansive and set(spec.G) == set(spec.H):
        cert = verdict.certificates[0]
        if cert["reason"] == "no unimodular solution":
            a, b = cert["pair"]
            return (a, b) in spec.G and b == 0 and abs(a) != 1
        cs = {_c_value(a, b) for a, b in spec.G if b != 0}
        if cert["reason"] == "constraints disagree":
            return len(cs) > 1
        return len(cs) == 1 and not -1 <= next(iter(cs)) <= 1
    return False


# ----------------------------------------------------------------------
# a single algebraic unit
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicUnitSpec:
    minpoly: UniPoly

    def __post_init__(self):
        p = self.minpoly
        if not isinstance(p, UniPoly):
            p = UniPoly([Fraction(c) for c in p])
        if p.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if any(c.denominator != 1 for c in p.coeffs):
            raise ValueError("minimal polynomial must have integer coefficients")
        if abs(p.coeffs[0]) != 1:
            raise ValueError("ξ not a unit; M ≠ ℤ[ξ,ξ⁻¹] hypothesis violated")
        object.__setattr__(self, "minpoly", p)


def decide_algebraic_unit(spec: AlgebraicUnitSpec) -> Verdict:
    """Non-expansive iff some conjugate of xi lies on the unit circle."""
    uc = unit_circle_root_count(spec.minpoly)
    if uc.count == 0:
        return Verdict(EXPANSIVE, certificates=[uc.as_dict()])
    K = unit_circle_fields(spec.minpoly)[0]
    z = K.gen_complex()
    w = ValuationWitness("embedding", {
        "minpoly": [str(c) for c in spec.minpoly.coeffs],
        "root": K.describe_root(),
        "root_minpoly": [str(c) for c in K.minpoly.coeffs],
        "unit_circle_roots": uc.count,
        "approx": [z.real, z.imag],
        "argument": cmath.phase(z),
    })
    return Verdict(NON_EXPANSIVE, witness=w)


def replay_algebraic_unit(verdict: Verdict, spec: AlgebraicUnitSpec) -> bool:
    if verdict.expansive:
        cert = verdict.certificates[0]
        return cert["count"] == 0 and replay_unit_circle(cert) and \
            UniPoly([Fraction(c) for c in cert["poly"]]) == spec.minpoly.strip_x()[0]
    fields = unit_circle_fields(spec.minpoly)
    return bool(fields) and all(K.certify() for K in fields)
