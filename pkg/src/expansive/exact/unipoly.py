"""Dense univariate polynomials over Q, Sturm sequences and real root isolation."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Polynomial with rational coefficients, stored dense from degree 0 upward.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, deg: int, c=1) -> "UniPoly":
        return cls([0] * deg + [c])

    # basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = _frac(c)
        return UniPoly([c * a for a in self.coeffs])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if len(r) - 1 < db:
            return UniPoly(), self
        q = [Fraction(0)] * (len(r) - db)
        bc = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] -= c * bc[j]
        return UniPoly(q), UniPoly(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        return not (other % self)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift_x(self, k: int) -> "UniPoly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def strip_x(self) -> tuple["UniPoly", int]:
        """Remove the largest power of x dividing the polynomial."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        if k == len(self.coeffs):
            return self, 0
        return UniPoly(self.coeffs[k:]), k

    # integer helpers --------------------------------------------------
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def primitive(self) -> "UniPoly":
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = igcd(g, c)
        if ints[-1] < 0:
            g = -g
        return UniPoly([c // g for c in ints])

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]


# ----------------------------------------------------------------------
# gcd, squarefree part, reciprocal
# ----------------------------------------------------------------------

def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p
    return p.exact_div(poly_gcd(p, p.derivative()))


def reciprocal(f: UniPoly) -> UniPoly:
    """x^deg(f) * f(1/x)."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    if f.coeffs[0] == 0:
        raise ValueError("reciprocal requires f(0) != 0; strip powers of x first")
    return UniPoly(reversed(f.coeffs))


# ----------------------------------------------------------------------
# signs, Sturm sequences
# ----------------------------------------------------------------------

def _sign(c) -> int:
    return (c > 0) - (c < 0)


def sign_right(p: UniPoly, a: Fraction) -> int:
    """Sign of p(a + eps) for infinitesimal eps > 0."""
    q = p
    while q:
        v = q(a)
        if v != 0:
            return _sign(v)
        q = q.derivative()
    return 0


def sign_left(p: UniPoly, a: Fraction) -> int:
    """Sign of p(a - eps) for infinitesimal eps > 0."""
    q = p
    k = 0
    while q:
        v = q(a)
        if v != 0:
            return _sign(v) * (-1) ** k
        q = q.derivative()
        k += 1
    return 0


def sign_at_infinity(p: UniPoly, positive: bool = True) -> int:
    if p.is_zero():
        return 0
    s = _sign(p.lc)
    if not positive and p.degree % 2:
        s = -s
    return s


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Canonical Sturm chain p, p', -rem(...), ... ."""
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        # scaling by a positive constant keeps sign variation counts intact
        seq.append((-r).scale(1 / abs(r.lc)))
    if not seq[-1]:
        seq.pop()
    return seq


def sign_variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs(seq, a, side):
    if a is None:
        return [sign_at_infinity(q, side == "right") for q in seq]
    if side == "right":
        return [sign_right(q, a) for q in seq]
    return [sign_left(q, a) for q in seq]


def sturm_count(p: UniPoly, lo, hi, seq: list[UniPoly] | None = None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Endpoints that are roots are handled by symbolic perturbation: signs are
    taken at lo+eps and hi-eps.  ``None`` stands for -inf / +inf.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if lo is not None:
        lo = _frac(lo)
    if hi is not None:
        hi = _frac(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("sturm_count requires lo < hi")
    if seq is None:
        seq = sturm_sequence(p)
    v_lo = sign_variations(_signs(seq, lo, "right") if lo is not None
                           else [sign_at_infinity(q, False) for q in seq])
    v_hi = sign_variations(_signs(seq, hi, "left") if hi is not None
                           else [sign_at_infinity(q, True) for q in seq])
    return v_lo - v_hi


def sturm_transcript(p: UniPoly, lo, hi) -> dict:
    """Sign data backing a Sturm count, suitable for independent replay."""
    seq = sturm_sequence(p)
    lo_f, hi_f = _frac(lo), _frac(hi)
    s_lo = [sign_right(q, lo_f) for q in seq]
    s_hi = [sign_left(q, hi_f) for q in seq]
    return {
        "poly": [str(c) for c in p.coeffs],
        "lo": str(lo_f),
        "hi": str(hi_f),
        "signs_lo": s_lo,
        "signs_hi": s_hi,
        "count": sign_variations(s_lo) - sign_variations(s_hi),
    }


def cauchy_bound(p: UniPoly) -> Fraction:
    """Every complex root z of p satisfies |z| < bound."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def real_root_count(p: UniPoly) -> int:
    return sturm_count(p, None, None)


def isolate_real_roots(p: UniPoly, lo=None, hi=None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of p in (lo, hi).

    Each returned (a, b) either has a == b (an exact rational root) or
    contains exactly one root in the open interval (a, b) with p(a), p(b) != 0.
    Intervals are disjoint and sorted.
    """
    p = squarefree(p)
    if p.degree <= 0:
        return []
    seq = sturm_sequence(p)
    B = cauchy_bound(p)
    lo = -B if lo is None else max(_frac(lo), -B)
    hi = B if hi is None else min(_frac(hi), B)
    if lo >= hi:
        return []
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sturm_count(p, lo, hi, seq))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and p(a) != 0 and p(b) != 0:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if p(m) == 0:
            out.append((m, m))
            n -= 1
            left = sturm_count(p, a, m, seq)
            stack.append((m, b, n - left))
            stack.append((a, m, left))
        else:
            left = sturm_count(p, a, m, seq)
            stack.append((m, b, n - left))
            stack.append((a, m, left))
    out.sort()
    return out


def refine_root(p: UniPoly, a: Fraction, b: Fraction, width: Fraction,
                seq: list[UniPoly] | None = None) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree p below the given width."""
    if a == b:
        return a, b
    sa = _sign(p(a))
    while b - a > width:
        m = (a + b) / 2
        v = p(m)
        if v == 0:
            return m, m
        if _sign(v) == sa:
            a = m
        else:
            b = m
    return a, b


def from_ints(coeffs: Iterable[int]) -> UniPoly:
    return UniPoly(coeffs)
