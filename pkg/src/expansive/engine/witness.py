"""Torus witnesses and their exact verification."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..exact.cyclotomic import CyclotomicValue, cyclotomic_order
from ..exact.fields import FieldElement, GaussianElement, NumberField, RelativeElement
from ..exact.unipoly import UniPoly
from ..presentations import GeneratorFamily, LaurentPoly


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class NumericCandidate:
    """A point exp(2*pi*i*turns) known only approximately."""

    turns: Fraction
    residual: float = math.inf

    def to_complex(self) -> complex:
        return cmath.exp(2j * math.pi * float(self.turns))


@dataclass
class TorusWitness:
    """Variable index -> unit-modulus value.  Unassigned variables mean 1."""

    assignments: dict = field(default_factory=dict)
    note: str = ""

    def value(self, v: int):
        return self.assignments.get(v, 1)

    def extended(self, extra: Mapping[int, object]) -> "TorusWitness":
        a = dict(self.assignments)
        a.update(extra)
        return TorusWitness(a, self.note)

    def is_exact(self) -> bool:
        return not any(isinstance(x, NumericCandidate) for x in self.assignments.values())

    def is_all_ones(self) -> bool:
        return all(_is_one(x) for x in self.assignments.values())

    def angles(self) -> dict[int, float]:
        """Argument of each assigned value, in radians."""
        return {v: cmath.phase(to_complex(x)) for v, x in self.assignments.items()}

    def as_dict(self) -> dict:
        return {"assignments": {f"x{v}": describe_value(x) for v, x in sorted(self.assignments.items())},
                "unassigned": "1",
                "note": self.note}


def _is_one(x) -> bool:
    if isinstance(x, NumericCandidate):
        return x.turns % 1 == 0
    try:
        return x == 1
    except (ValueError, TypeError):
        return False


def to_complex(x) -> complex:
    if isinstance(x, (int, Fraction)):
        return complex(float(x))
    if isinstance(x, CyclotomicValue):
        return complex(x)
    return x.to_complex()


def _kind(x) -> tuple:
    if isinstance(x, (int, Fraction)):
        return ("rational",)
    if isinstance(x, CyclotomicValue):
        return ("cyclotomic",)
    if isinstance(x, (FieldElement, GaussianElement, RelativeElement)):
        return ("field",) + x.field.key()
    if isinstance(x, NumericCandidate):
        return ("numeric",)
    raise WitnessError(f"unsupported witness value {x!r}")


def _is_zero(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    return v.is_zero()


def _is_unimodular(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return abs(x) == 1
    if isinstance(x, CyclotomicValue):
        return x * x.conjugate() == 1
    return x.abs_squared() == 1


def _check_kinds(values: Sequence) -> None:
    kinds = {_kind(x) for x in values} - {("rational",)}
    if ("numeric",) in kinds:
        raise WitnessError("exact verification unavailable")
    if len(kinds) > 1:
        raise WitnessError("incomparable witness kinds")


def evaluate_exact(f: LaurentPoly, witness: TorusWitness):
    used = [witness.value(v) for v in f.variables()]
    _check_kinds(used)
    return f.evaluate(witness.assignments, default=1)


def verify_witness(generators, witness: TorusWitness) -> bool:
    """True iff the witness lies on the unit torus and kills every generator exactly.

    ``generators`` is a list of LaurentPoly or a GeneratorFamily; a family is
    checked for every n (see ``_verify_family``).
    """
    values = list(witness.assignments.values())
    if any(_kind(x) == ("numeric",) for x in values):
        raise WitnessError("exact verification unavailable")
    if not all(_is_unimodular(x) for x in values):
        return False
    fields = {x.field.key(): x.field for x in values if hasattr(x, "field")}
    if not all(F.certify() for F in fields.values()):
        return False
    if isinstance(generators, GeneratorFamily):
        return _verify_family(generators, witness)
    return all(_is_zero(evaluate_exact(f, witness)) for f in generators)


def _verify_family(family: GeneratorFamily, witness: TorusWitness) -> bool:
    from ..presentations import augmentation_poly

    if witness.is_all_ones():
        return augmentation_poly(family).is_zero()
    # Past the largest assigned variable every symbolic index maps to 1, so
    # f_n(witness) is a polynomial in n there; check it vanishes identically
    # and check the finitely many earlier members directly.
    top = max(witness.assignments, default=0)
    offsets = [i for t in family.terms for (kind, i), _ in t.pattern if kind == "shift"]
    n0 = max(1, top - min(offsets, default=0) + 1)
    for n in range(1, n0 + 1):
        if not _is_zero(evaluate_exact(family.instantiate(n), witness)):
            return False
    # coefficient of n^k, summed over terms with the fixed part evaluated
    for t in family.terms:
        fixed = [(i, k) for (kind, i), k in t.pattern if kind == "fixed"]
        _check_kinds([witness.value(i) for i, _ in fixed])
    den = 1
    for t in family.terms:
        for c in t.coeff.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    total = None
    for t in family.terms:
        mono = 1
        for (kind, i), k in t.pattern:
            if kind == "fixed":
                mono = mono * (witness.value(i) ** k)
        contrib = [int(c * den) * mono for c in t.coeff.coeffs]
        if total is None:
            total = contrib
        else:
            n = max(len(total), len(contrib))
            total = [(total[j] if j < len(total) else 0) + (contrib[j] if j < len(contrib) else 0)
                     for j in range(n)]
    return all(_is_zero(c) for c in (total or []))


# ----------------------------------------------------------------------
# normal forms and serialization
# ----------------------------------------------------------------------

def _root_index(field: NumberField, q: int) -> int | None:
    """k with alpha = zeta_q^k, certified by separating enclosures."""
    sep = 2 * math.sin(math.pi / q) if q > 2 else 2.0
    field.refine(Fraction(1, 10 ** 12))
    enc = field.gen_enclosure()
    if enc.radius() > sep / 8:
        return None
    z = enc.to_complex()
    k = round(cmath.phase(z) * q / (2 * math.pi)) % q
    if abs(z - cmath.exp(2j * math.pi * k / q)) > sep / 4:
        return None
    return k


def cyclotomic_form(witness: TorusWitness) -> TorusWitness:
    """Rewrite values living in a cyclotomic circle field as CyclotomicValue."""
    vals = witness.assignments
    fields = {x.field.key(): x.field for x in vals.values() if isinstance(x, FieldElement)}
    if len(fields) != 1 or any(isinstance(x, (GaussianElement, NumericCandidate))
                               for x in vals.values()):
        return _gaussian_units(witness)
    (K,) = fields.values()
    if K.kind != "circle":
        return witness
    if "exact" in K.locator:
        q, k = (1, 0) if K.locator["exact"] == 1 else (2, 1)
    else:
        q = cyclotomic_order(K.minpoly)
        if q is None:
            return witness
        k = _root_index(K, q)
        if k is None:
            return witness
    out = {}
    for v, x in vals.items():
        if not isinstance(x, FieldElement):
            out[v] = x
            continue
        if not all(c.denominator == 1 for c in x.rep.coeffs):
            return witness
        rep = UniPoly()
        for j, c in enumerate(x.rep.coeffs):
            if c:
                rep = rep + UniPoly.monomial(j * k, c)
        out[v] = CyclotomicValue(q, rep)
    return TorusWitness(out, witness.note)


def _gaussian_units(witness: TorusWitness) -> TorusWitness:
    vals = witness.assignments
    if not vals or not all(isinstance(x, GaussianElement) and x.field.base.degree == 1
                           for x in vals.values()):
        return witness
    out = {}
    for v, x in vals.items():
        re, im = x.re.rep(0), x.im.rep(0)
        if re.denominator != 1 or im.denominator != 1:
            return witness
        out[v] = CyclotomicValue(4, UniPoly([re, im]))
    return TorusWitness(out, witness.note)


def describe_value(x) -> dict:
    z = to_complex(x)
    approx = [round(z.real, 15), round(z.imag, 15)]
    if isinstance(x, (int, Fraction)):
        return {"kind": "rational", "value": str(x), "approx": approx}
    if isinstance(x, CyclotomicValue):
        ru = x.as_root_of_unity()
        return {"kind": "cyclotomic", "order": x.order,
                "coeffs": [str(c) for c in x.rep.coeffs],
                "root_of_unity": list(ru) if ru else None, "approx": approx}
    if isinstance(x, FieldElement):
        return {"kind": "algebraic", "field_minpoly": [str(c) for c in x.field.minpoly.coeffs],
                "field_root": x.field.describe_root(),
                "coeffs": [str(c) for c in x.rep.coeffs],
                "minpoly": [str(c) for c in x.minimal_polynomial().coeffs], "approx": approx}
    if isinstance(x, GaussianElement):
        return {"kind": "algebraic", "field_minpoly": [str(c) for c in x.field.base.minpoly.coeffs],
                "field_root": x.field.describe_root(),
                "re_coeffs": [str(c) for c in x.re.rep.coeffs],
                "im_coeffs": [str(c) for c in x.im.rep.coeffs],
                "minpoly": [str(c) for c in x.minimal_polynomial().coeffs], "approx": approx}
    if isinstance(x, RelativeElement):
        return {"kind": "algebraic", "field_minpoly": [str(c) for c in x.field.base.minpoly.coeffs],
                "field_root": x.field.describe_root(),
                "relative_modulus": [[str(a) for a in c.rep.coeffs] for c in x.field.modulus],
                "coeffs": [[str(a) for a in c.rep.coeffs] for c in x.coeffs],
                "minpoly": [str(c) for c in x.minimal_polynomial().coeffs], "approx": approx}
    if isinstance(x, NumericCandidate):
        return {"kind": "numeric", "turns": str(x.turns), "residual": x.residual, "approx": approx}
    raise WitnessError(f"unsupported witness value {x!r}")
