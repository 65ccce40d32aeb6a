"""Counting roots of integer polynomials on the unit circle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact.fields import NumberField, factor_integer_poly, w_polynomial
from ..exact.unipoly import (UniPoly, poly_gcd, reciprocal, sign_variations, squarefree,
                             sturm_count, sturm_transcript, sign_left, sign_right, sturm_sequence)

X_MINUS_1 = UniPoly([-1, 1])
X_PLUS_1 = UniPoly([1, 1])


@dataclass
class UnitCircleCount:
    count: int
    poly: UniPoly                 # input after stripping powers of x
    core: UniPoly                 # squarefree gcd(f, reciprocal f) without the factors x -+ 1
    plus_one: bool
    minus_one: bool
    h: UniPoly                    # w-polynomial of ``core``
    transcript: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "kind": "sturm",
            "poly": [str(c) for c in self.poly.coeffs],
            "core": [str(c) for c in self.core.coeffs],
            "root_plus_one": self.plus_one,
            "root_minus_one": self.minus_one,
            "w_poly": [str(c) for c in self.h.coeffs],
            "transcript": self.transcript,
            "count": self.count,
        }


def _divide_out(p: UniPoly, lin: UniPoly) -> UniPoly:
    while p.degree >= 1:
        q, r = p.divmod(lin)
        if r:
            break
        p = q
    return p


def unit_circle_root_count(f: UniPoly) -> UnitCircleCount:
    """Number of distinct roots of f with modulus exactly 1, with Sturm evidence."""
    if f.is_zero():
        raise ValueError("unit_circle_root_count of the zero polynomial")
    f, _ = f.strip_x()
    plus = f(Fraction(1)) == 0
    minus = f(Fraction(-1)) == 0
    if f.degree <= 0:
        return UnitCircleCount(0, f, UniPoly([1]), False, False, UniPoly([1]),
                               {"count": 0, "note": "constant"})
    g = squarefree(poly_gcd(f, reciprocal(f)))
    core = _divide_out(_divide_out(g, X_MINUS_1), X_PLUS_1).monic()
    if core.degree <= 0:
        h = UniPoly([1])
        tr = {"count": 0, "note": "no self-inversive part"}
        n_open = 0
    else:
        h = squarefree(w_polynomial(core))
        tr = sturm_transcript(h, Fraction(-2), Fraction(2))
        n_open = tr["count"]
    count = 2 * n_open + int(plus) + int(minus)
    return UnitCircleCount(count, f, core, plus, minus, h, tr)


def replay_unit_circle(cert: dict) -> bool:
    """Recheck a count from its serialized evidence using exact primitives only."""
    f = UniPoly([Fraction(c) for c in cert["poly"]])
    core = UniPoly([Fraction(c) for c in cert["core"]])
    if f.is_zero():
        return False
    if (f(Fraction(1)) == 0) != cert["root_plus_one"]:
        return False
    if (f(Fraction(-1)) == 0) != cert["root_minus_one"]:
        return False
    if f.degree <= 0:
        return cert["count"] == 0
    g = squarefree(poly_gcd(f, reciprocal(f)))
    if _divide_out(_divide_out(g, X_MINUS_1), X_PLUS_1).monic() != core:
        return False
    n_open = 0
    if core.degree > 0:
        h = squarefree(w_polynomial(core))
        if [str(c) for c in h.coeffs] != cert["w_poly"]:
            return False
        tr = cert["transcript"]
        seq = sturm_sequence(h)
        s_lo = [sign_right(q, Fraction(-2)) for q in seq]
        s_hi = [sign_left(q, Fraction(2)) for q in seq]
        if s_lo != tr["signs_lo"] or s_hi != tr["signs_hi"]:
            return False
        n_open = sign_variations(s_lo) - sign_variations(s_hi)
        if n_open != sturm_count(h, -2, 2):
            return False
    return cert["count"] == 2 * n_open + int(cert["root_plus_one"]) + int(cert["root_minus_one"])


def unit_circle_fields(f: UniPoly) -> list[NumberField]:
    """One located number field per distinct unit-circle root of f."""
    f, _ = f.strip_x()
    if f.degree <= 0:
        return []
    out = []
    for m, _ in factor_integer_poly(f):
        out.extend(NumberField.circle_roots(m))
    return out
