"""Sparse multivariate polynomials with exact coefficients.

Exponent tuples have a fixed length ``nvars``; negative exponents are allowed
for Laurent data but the elimination routines (division, gcd, resultant)
expect ordinary polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Mapping

from .unipoly import UniPoly


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / Fraction(b))


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[tuple, object] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = _norm(c)
            if c == 0:
                continue
            d[e] = _norm(d.get(e, 0) + c)
            if d[e] == 0:
                del d[e]
        self.terms: dict[tuple, object] = d

    # constructors ------------------------------------------------------
    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs: list["MPoly"], i: int) -> "MPoly":
        """Inverse of :meth:`coeffs_in`: sum coeffs[k] * x_i^k."""
        out: dict[tuple, object] = {}
        for k, c in enumerate(coeffs):
            for e, v in c.terms.items():
                e2 = list(e)
                e2[i] += k
                out[tuple(e2)] = v
        nv = coeffs[0].nvars if coeffs else 0
        return cls(nv, out)

    # properties ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_degree(self, i: int) -> int:
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"v{i}^{k}" if k != 1 else f"v{i}" for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(parts) + ")"

    # arithmetic ------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for e, c in other.terms.items():
            v = _norm(d.get(e, 0) + c)
            if v == 0:
                d.pop(e, None)
            else:
                d[e] = v
        out = MPoly(self.nvars)
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        d: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return MPoly(self.nvars, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "MPoly":
        return MPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def mul_monomial(self, e: tuple) -> "MPoly":
        out = MPoly(self.nvars)
        out.terms = {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()}
        return out

    # structure -----------------------------------------------------------
    def coeffs_in(self, i: int) -> list["MPoly"]:
        """Coefficients as polynomials in variable i (which is zeroed in them)."""
        if not self.terms:
            return []
        lo = self.min_degree(i)
        if lo < 0:
            raise ValueError("coeffs_in requires nonnegative exponents")
        deg = self.degree(i)
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            buckets[k][tuple(e2)] = c
        out = []
        for b in buckets:
            m = MPoly(self.nvars)
            m.terms = b
            out.append(m)
        return out

    def lc_in(self, i: int) -> "MPoly":
        return self.coeffs_in(i)[-1]

    def derivative(self, i: int) -> "MPoly":
        d = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                d[tuple(e2)] = c * e[i]
        return MPoly(self.nvars, d)

    def monomial_content(self) -> tuple:
        """Componentwise minimum exponent."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def strip_monomial(self) -> "MPoly":
        """Divide by the largest monomial dividing the polynomial (Laurent shifts allowed)."""
        m = self.monomial_content()
        if not any(m):
            return self
        return self.mul_monomial(tuple(-k for k in m))

    def substitute(self, i: int, value) -> "MPoly":
        """Substitute a constant for variable i (exponents must be >= 0 unless value invertible)."""
        d: dict[tuple, object] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            v = c * (Fraction(value) ** k if k < 0 else value ** k)
            t = tuple(e2)
            d[t] = d.get(t, 0) + v
        return MPoly(self.nvars, d)

    def to_unipoly(self, i: int) -> UniPoly:
        """Convert a polynomial in variable i only."""
        if self.variables() - {i}:
            raise ValueError("polynomial involves other variables")
        deg = max(self.degree(i), 0)
        cs = [0] * (deg + 1)
        for e, c in self.terms.items():
            if e[i] < 0:
                raise ValueError("negative exponent")
            cs[e[i]] = c
        return UniPoly(cs)

    @classmethod
    def from_unipoly(cls, p: UniPoly, nvars: int, i: int) -> "MPoly":
        d = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * nvars
            e[i] = k
            d[tuple(e)] = c
        return cls(nvars, d)

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of ring elements."""
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * (x ** k if k > 0 else (1 / x) ** (-k))
            acc = acc + t
        return acc

    def content_int(self):
        g = 0
        for c in self.terms.values():
            if isinstance(c, Fraction):
                return Fraction(1)
            g = igcd(g, c)
        return g or 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def integer_primitive(self) -> "MPoly":
        """Scale to an integer polynomial with unit content and positive leading term."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // igcd(den, c.denominator)
        p = self.scale(den) if den != 1 else self
        g = p.content_int()
        lead = p.terms[max(p.terms)]
        if lead < 0:
            g = -g
        return MPoly(p.nvars, {e: c // g for e, c in p.terms.items()})


# ----------------------------------------------------------------------
# exact division, pseudo-remainder, gcd
# ----------------------------------------------------------------------

def _lex_lead(p: MPoly) -> tuple:
    return max(p.terms)


def exact_divide(a: MPoly, b: MPoly) -> MPoly:
    """Quotient a / b, raising ArithmeticError when b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return MPoly(a.nvars)
    lb = _lex_lead(b)
    cb = b.terms[lb]
    r = MPoly(a.nvars)
    r.terms = dict(a.terms)
    q: dict[tuple, object] = {}
    while r.terms:
        lr = _lex_lead(r)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if any(d < 0 for d in diff):
            raise ArithmeticError("polynomial does not divide")
        c = _cdiv(r.terms[lr], cb)
        q[diff] = c
        for e, v in b.terms.items():
            t = tuple(x + y for x, y in zip(e, diff))
            nv = _norm(r.terms.get(t, 0) - c * v)
            if nv == 0:
                r.terms.pop(t, None)
            else:
                r.terms[t] = nv
        if len(q) > 100000:
            raise ArithmeticError("exact division did not terminate")
    return MPoly(a.nvars, q)


def pseudo_remainder(a: MPoly, b: MPoly, i: int) -> MPoly:
    """prem_i(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, in variable i."""
    db = b.degree(i)
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    lcb = b.lc_in(i)
    r = a
    da = r.degree(i)
    e = max(da - db + 1, 0)
    while not r.is_zero() and r.degree(i) >= db:
        dr = r.degree(i)
        lcr = r.lc_in(i)
        shift = [0] * a.nvars
        shift[i] = dr - db
        r = r * lcb - b.mul_monomial(tuple(shift)) * lcr
        e -= 1
    if e > 0:
        r = r * (lcb ** e)
    return r


def _main_var(*polys: MPoly) -> int:
    best = -1
    for p in polys:
        for v in p.variables():
            best = max(best, v)
    return best


def content_in(p: MPoly, i: int) -> MPoly:
    g = MPoly(p.nvars)
    for c in p.coeffs_in(i):
        if c:
            g = mpoly_gcd(g, c)
            if g.is_constant() and abs(g.constant_value()) == 1:
                break
    return g


def primitive_in(p: MPoly, i: int) -> MPoly:
    if p.is_zero():
        return p
    c = content_in(p, i)
    return exact_divide(p, c)


def _normalize_sign(p: MPoly) -> MPoly:
    if p.terms and p.terms[_lex_lead(p)] < 0:
        return -p
    return p


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """gcd in Z[x_1..x_n] (inputs must have integer coefficients), positive lex-leading term."""
    if a.is_zero():
        return _normalize_sign(b)
    if b.is_zero():
        return _normalize_sign(a)
    v = _main_var(a, b)
    if v < 0:
        ca, cb = a.constant_value(), b.constant_value()
        if isinstance(ca, Fraction) or isinstance(cb, Fraction):
            return MPoly.const(a.nvars, 1)
        return MPoly.const(a.nvars, igcd(ca, cb))
    if a.degree(v) <= 0:
        return mpoly_gcd(a, content_in(b, v))
    if b.degree(v) <= 0:
        return mpoly_gcd(content_in(a, v), b)
    ca, cb = content_in(a, v), content_in(b, v)
    c = mpoly_gcd(ca, cb)
    pa, pb = exact_divide(a, ca), exact_divide(b, cb)
    if pa.degree(v) < pb.degree(v):
        pa, pb = pb, pa
    while True:
        r = pseudo_remainder(pa, pb, v)
        if r.is_zero():
            g = pb
            break
        if r.degree(v) <= 0:
            g = MPoly.const(a.nvars, 1)
            break
        pa, pb = pb, primitive_in(r, v)
    g = primitive_in(g, v)
    return _normalize_sign(g * c)


def mpoly_gcd_many(polys: Iterable[MPoly]) -> MPoly:
    """gcd of several polynomials, up to an integer constant factor."""
    g = None
    for p in polys:
        g = p if g is None else mpoly_gcd(g, p)
        if g is not None and g.is_constant() and g:
            return MPoly.const(g.nvars, 1)
    return g


# ----------------------------------------------------------------------
# resultants
# ----------------------------------------------------------------------

def sylvester_matrix(f: MPoly, g: MPoly, i: int) -> list[list[MPoly]]:
    fc = f.coeffs_in(i)
    gc = g.coeffs_in(i)
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MPoly(f.nvars)
    rows = []
    for r in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[r + k] = c
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[r + k] = c
        rows.append(row)
    return rows


def bareiss_det(mat: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant over a polynomial ring."""
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    nv = mat[0][0].nvars
    a = [row[:] for row in mat]
    sign = 1
    prev = MPoly.const(nv, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return MPoly(nv)
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                num = a[r][c] * a[k][k] - a[r][k] * a[k][c]
                a[r][c] = exact_divide(num, prev) if not num.is_zero() else num
            a[r][k] = MPoly(nv)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant(f: MPoly, g: MPoly, i: int) -> MPoly:
    """Sylvester resultant of f and g with respect to variable i."""
    if f.degree(i) <= 0 or g.degree(i) <= 0:
        raise ValueError("resultant requires positive degree in the eliminated variable")
    if f.min_degree(i) < 0 or g.min_degree(i) < 0:
        raise ValueError("resultant requires nonnegative exponents")
    return bareiss_det(sylvester_matrix(f, g, i))


def univariate_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant of two univariate polynomials (a rational number)."""
    F = MPoly.from_unipoly(f, 1, 0)
    G = MPoly.from_unipoly(g, 1, 0)
    r = resultant(F, G, 0)
    return Fraction(r.constant_value()) if r else Fraction(0)
