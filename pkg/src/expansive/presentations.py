"""Group-ring data: Laurent polynomials, ideals, module presentations, generator families.

Variables are 1-based, so ``x3`` is the group-ring image of the third unit
vector ``e(3)`` of the lattice of eventually-zero integer sequences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .exact.mpoly import MPoly
from .exact.unipoly import UniPoly

ExponentVector = tuple  # tuple of (variable, exponent) pairs, sorted, exponents nonzero


def make_exponent(mapping: Mapping[int, int] | Iterable[tuple[int, int]]) -> ExponentVector:
    items = mapping.items() if isinstance(mapping, Mapping) else mapping
    acc: dict[int, int] = {}
    for v, k in items:
        if v < 1:
            raise ValueError(f"variable index must be positive, got {v}")
        acc[v] = acc.get(v, 0) + k
    return tuple(sorted((v, k) for v, k in acc.items() if k != 0))


def add_exponents(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return make_exponent(list(a) + list(b))


def negate_exponent(a: ExponentVector) -> ExponentVector:
    return tuple((v, -k) for v, k in a)


def _grlex_key(e: ExponentVector, variables: Sequence[int]):
    d = dict(e)
    return (sum(d.values()), tuple(d.get(v, 0) for v in variables))


class LaurentPoly:
    """Finitely supported map ExponentVector -> nonzero integer."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[ExponentVector, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[ExponentVector, int] = {}
        for e, c in items:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("Laurent polynomial coefficients must be integers")
                c = int(c)
            e = make_exponent(e)
            d[e] = d.get(e, 0) + c
            if d[e] == 0:
                del d[e]
        self.terms: dict[ExponentVector, int] = d
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(): c})

    @classmethod
    def var(cls, v: int, power: int = 1) -> "LaurentPoly":
        return cls({((v, power),): 1})

    # structure -----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == () for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not constant")
        return self.terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> frozenset[int]:
        return frozenset(v for e in self.terms for v, _ in e)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def one_norm(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add_exponents(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not (self.is_monomial() and abs(next(iter(self.terms.values()))) == 1):
                raise ValueError("negative powers of non-units are not Laurent polynomials")
            return self.inverted() ** -n
        result = LaurentPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def mul_monomial(self, e: ExponentVector | Mapping[int, int]) -> "LaurentPoly":
        e = make_exponent(e)
        return LaurentPoly({add_exponents(k, e): c for k, c in self.terms.items()})

    def inverted(self) -> "LaurentPoly":
        """f(1/x): on the unit torus this is the complex conjugate of f."""
        return LaurentPoly({negate_exponent(e): c for e, c in self.terms.items()})

    def substitute_monomials(self, images: Mapping[int, ExponentVector]) -> "LaurentPoly":
        """Apply the monomial map x_v -> images[v] (variables not listed are kept)."""
        out: dict[ExponentVector, int] = {}
        for e, c in self.terms.items():
            parts: list[tuple[int, int]] = []
            for v, k in e:
                if v in images:
                    parts.extend((w, k * j) for w, j in images[v])
                else:
                    parts.append((v, k))
            ne = make_exponent(parts)
            out[ne] = out.get(ne, 0) + c
        return LaurentPoly(out)

    def rename(self, mapping: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly({make_exponent((mapping.get(v, v), k) for v, k in e): c
                            for e, c in self.terms.items()})

    def evaluate(self, assignment: Mapping[int, object], default=1):
        """Evaluate at ring elements; unassigned variables take ``default``."""
        acc = 0
        for e, c in self.terms.items():
            t = c
            for v, k in e:
                x = assignment.get(v, default)
                t = t * (x ** k)
            acc = t + acc
        return acc

    # conversions ------------------------------------------------------------------
    def to_mpoly(self, variables: Sequence[int], shift: bool = True) -> MPoly:
        """Positional MPoly over ``variables``; with shift, multiply by the monomial
        clearing negative exponents and any common monomial factor."""
        pos = {v: i for i, v in enumerate(variables)}
        n = len(variables)
        terms = {}
        for e, c in self.terms.items():
            t = [0] * n
            for v, k in e:
                if v not in pos:
                    raise ValueError(f"variable x{v} not among {list(variables)}")
                t[pos[v]] = k
            terms[tuple(t)] = c
        p = MPoly(n, terms)
        return p.strip_monomial() if shift else p

    @classmethod
    def from_mpoly(cls, p: MPoly, variables: Sequence[int]) -> "LaurentPoly":
        out = {}
        for e, c in p.terms.items():
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("non-integer coefficient")
                c = int(c)
            out[make_exponent(zip(variables, e))] = c
        return cls(out)

    def to_unipoly(self, v: int) -> UniPoly:
        """Univariate polynomial in x_v after clearing the lowest power."""
        if self.variables() - {v}:
            raise ValueError("polynomial involves other variables")
        return self.to_mpoly([v]).to_unipoly(0) if self.terms else UniPoly()

    # comparison / printing --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        variables = sorted(self.variables(), reverse=True)
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0], variables), reverse=True)

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text: graded-lex order, explicit signs, ``*`` between factors."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        mono = "*".join(f"x{v}" if k == 1 else f"x{v}^{k}" for v, k in sorted(e, reverse=True))
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for s, body in pieces[1:]:
        out += f" {s} {body}"
    return out


# ----------------------------------------------------------------------
# ideals and modules
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class IdealSpec:
    generators: tuple[LaurentPoly, ...]
    ambient_vars: frozenset[int] = None

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        object.__setattr__(self, "generators", gens)
        used = frozenset().union(*(g.variables() for g in gens))
        amb = used if self.ambient_vars is None else frozenset(self.ambient_vars)
        if not used <= amb:
            raise ValueError(f"generator variables {sorted(used - amb)} not in ambient_vars")
        object.__setattr__(self, "ambient_vars", amb)

    def used_vars(self) -> frozenset[int]:
        return frozenset().union(*(g.variables() for g in self.generators))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class ModuleSpec:
    annihilators: tuple[IdealSpec, ...]
    ambient_vars: frozenset[int] = None

    def __post_init__(self):
        anns = tuple(self.annihilators)
        if not anns:
            raise ValueError("a module needs at least one generator")
        amb = frozenset().union(*(a.ambient_vars for a in anns))
        if self.ambient_vars is not None:
            amb = amb | frozenset(self.ambient_vars)
        anns = tuple(IdealSpec(a.generators, amb) for a in anns)
        object.__setattr__(self, "annihilators", anns)
        object.__setattr__(self, "ambient_vars", amb)


def prune_free_variables(ideal: IdealSpec) -> tuple[IdealSpec, list[int]]:
    """Drop ambient variables that occur in no generator.

    Such variables are unconstrained, so any torus point of the pruned ideal
    extends to the original one by sending them to 1.
    """
    used = ideal.used_vars()
    pruned = sorted(ideal.ambient_vars - used)
    return IdealSpec(ideal.generators, used), pruned


# ----------------------------------------------------------------------
# group descriptions and the lift to the lattice of sequences
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GroupDescription:
    """Free abelian group of the given rank (``None`` means countably infinite
    rank) with optional finite orders for some generators."""

    rank: int | None = None
    torsion: Mapping[int, int] = field(default_factory=dict)

    def describe(self) -> str:
        base = "Lambda" if self.rank is None else f"Z^{self.rank}"
        if self.torsion:
            rel = ", ".join(f"g{i}^{k}=1" for i, k in sorted(self.torsion.items()))
            return f"{base} / <{rel}>"
        return base


@dataclass(frozen=True)
class PresentationRecord:
    group: GroupDescription
    generator_sequence: tuple[int, ...]
    module: ModuleSpec

    def variable_of(self, group_generator: int) -> int:
        return self.generator_sequence.index(group_generator) + 1


def normalize_to_lambda(group: GroupDescription,
                        annihilators: Sequence[Sequence[LaurentPoly]],
                        generator_sequence: Sequence[int] | None = None) -> PresentationRecord:
    """Lift a presentation over Z[G] to one over Z[Lambda].

    Group generator ``g_i`` is written ``x_i`` in the input data.  The chosen
    generator sequence assigns lattice variable k to group generator
    ``generator_sequence[k-1]``.  Torsion relations g^k = 1 become ideal
    generators x^k - 1 in every annihilator.
    """
    for g, k in group.torsion.items():
        if k < 1:
            raise ValueError(f"torsion order of g{g} must be >= 1, got {k}")
    used = set(group.torsion)
    for gens in annihilators:
        for f in gens:
            used |= f.variables()
    if group.rank is not None:
        if group.rank < 0:
            raise ValueError("rank must be nonnegative")
        bad = [v for v in used if v > group.rank]
        if bad:
            raise ValueError(f"generators g{sorted(bad)} exceed rank {group.rank}")
        default_seq = list(range(1, group.rank + 1))
    else:
        default_seq = sorted(used)
    seq = tuple(default_seq if generator_sequence is None else generator_sequence)
    if not seq:
        raise ValueError("empty generator sequence")
    if len(set(seq)) != len(seq):
        raise ValueError("generator sequence repeats a generator")
    missing = used - set(seq)
    if missing:
        raise ValueError(f"generator sequence omits g{sorted(missing)}")
    if not annihilators:
        raise ValueError("no annihilator data")
    relabel = {g: k + 1 for k, g in enumerate(seq)}
    torsion_gens = [LaurentPoly.var(relabel[g], k) - 1 for g, k in sorted(group.torsion.items())]
    ambient = frozenset(relabel.values())
    ideals = []
    for gens in annihilators:
        new = [f.rename(relabel) for f in gens if not f.is_zero()] + torsion_gens
        if not new:
            new = [LaurentPoly()]
        ideals.append(IdealSpec(tuple(new), ambient))
    return PresentationRecord(group, seq, ModuleSpec(tuple(ideals), ambient))


# ----------------------------------------------------------------------
# generator families f_n
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyTerm:
    """One monomial of a family member: pattern entries are ((kind, index), exponent)
    with kind "fixed" (variable index) or "shift" (variable n + index)."""

    pattern: tuple
    coeff: UniPoly  # polynomial in n

    def variable(self, key, n: int) -> int:
        kind, idx = key
        return idx if kind == "fixed" else n + idx


@dataclass(frozen=True)
class GeneratorFamily:
    terms: tuple[FamilyTerm, ...]

    def instantiate(self, n: int) -> LaurentPoly:
        out: dict = {}
        for t in self.terms:
            c = t.coeff(Fraction(n))
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient at n={n}")
            e = make_exponent((t.variable(key, n), k) for key, k in t.pattern)
            out[e] = out.get(e, 0) + int(c)
        return LaurentPoly(out)

    def __str__(self):
        parts = []
        for t in self.terms:
            mono = "*".join(
                (f"e({i})" if kind == "fixed" else (f"e(n+{i})" if i > 0 else (f"e(n-{-i})" if i < 0 else "e(n)")))
                + (f"^{k}" if k != 1 else "")
                for (kind, i), k in t.pattern)
            coeff = str(t.coeff).replace("x", "n")
            parts.append(f"({coeff})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def family_expand(family: GeneratorFamily, n_max: int) -> list[LaurentPoly]:
    """[f_1, ..., f_{n_max}]."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [family.instantiate(n) for n in range(1, n_max + 1)]


def augmentation_poly(family: GeneratorFamily) -> UniPoly:
    """Image of f_n under the map sending every variable to 1, as a polynomial in n."""
    acc = UniPoly()
    for t in family.terms:
        acc = acc + t.coeff
    return acc


def shift_family() -> GeneratorFamily:
    """f_n = e(n+1) - (n+1) e(1) + n."""
    return GeneratorFamily((
        FamilyTerm(((("shift", 1), 1),), UniPoly([1])),
        FamilyTerm(((("fixed", 1), 1),), UniPoly([-1, -1])),
        FamilyTerm((), UniPoly([0, 1])),
    ))


def integer_content(p: LaurentPoly) -> int:
    g = 0
    for c in p.terms.values():
        g = gcd(g, c)
    return g
