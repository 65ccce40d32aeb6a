"""Simple algebraic number fields Q(alpha) with a located embedding into C.

Two embeddings are supported, which is all the torus machinery needs:

* ``circle``: alpha lies on the unit circle, so complex conjugation acts by
  alpha -> 1/alpha.  The root is located by w = alpha + 1/alpha, a real root of
  the "w-polynomial" of the (self-reciprocal) minimal polynomial, together
  with the sign of Im(alpha).
* ``real``: alpha is real, located by a rational isolating interval.

``GaussianField`` adjoins i to a real field; conjugation flips the sign of i.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

from .interval import ComplexInterval, Interval, _down, _lo_float, _hi_float, _up
from .unipoly import (UniPoly, isolate_real_roots, poly_xgcd, refine_root, squarefree,
                      sturm_count)


def factor_integer_poly(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible factors over Q (primitive integer polynomials, positive lc)."""
    if p.degree <= 0:
        return []
    x = sympy.Symbol("x")
    expr = sympy.Poly([int(c) for c in reversed(p.primitive().coeffs)], x)
    _, facs = expr.factor_list()
    out = []
    for f, mult in facs:
        cs = [int(c) for c in reversed(f.all_coeffs())]
        out.append((UniPoly(cs).primitive(), mult))
    out.sort(key=lambda t: (t[0].degree, [str(c) for c in t[0].coeffs]))
    return out


def w_polynomial(m: UniPoly) -> UniPoly:
    """h with m(x) = x^(d/2) h(x + 1/x) for a palindromic m of even degree d."""
    cs = m.coeffs
    d = m.degree
    if d % 2 or any(cs[k] != cs[d - k] for k in range(d + 1)):
        raise ValueError("w-transform needs a palindromic polynomial of even degree")
    half = d // 2
    # Dickson polynomials D_k(w) = x^k + x^-k
    dick = [UniPoly([2]), UniPoly([0, 1])]
    for k in range(2, half + 1):
        dick.append(UniPoly([0, 1]) * dick[-1] - dick[-2])
    h = UniPoly([cs[half]])
    for k in range(1, half + 1):
        h = h + dick[k].scale(cs[half + k])
    return h


def _sqrt_interval(iv: Interval) -> Interval:
    lo, hi = _lo_float(iv.lower), _hi_float(iv.upper)
    lo = max(lo, 0.0)
    hi = max(hi, 0.0)
    return Interval(max(_down(math.sqrt(lo)), 0.0), _up(math.sqrt(hi)))


def _pad(p: UniPoly, d: int) -> list[Fraction]:
    return list(p.coeffs) + [Fraction(0)] * (d - len(p.coeffs))


def _power_dependency(elem, to_vec, max_k: int) -> UniPoly:
    """First Q-linear relation among 1, b, b^2, ... (the minimal polynomial of b)."""
    basis: list[tuple[list[Fraction], list[Fraction], int]] = []
    power = elem.field.one()
    for k in range(max_k + 1):
        v = to_vec(power)
        combo = [Fraction(0)] * k + [Fraction(1)]
        for row, rc, piv in basis:
            if v[piv] != 0:
                f = v[piv] / row[piv]
                v = [a - f * b for a, b in zip(v, row)]
                rc_ext = rc + [Fraction(0)] * (k + 1 - len(rc))
                combo = [a - f * b for a, b in zip(combo, rc_ext)]
        if all(c == 0 for c in v):
            return UniPoly(combo).primitive()
        piv = next(i for i, c in enumerate(v) if c != 0)
        basis.append((v, combo, piv))
        power = power * elem
    raise ArithmeticError("no linear dependency among powers")


class NumberField:
    """Q[x]/(minpoly) with alpha = the located root of minpoly."""

    def __init__(self, minpoly: UniPoly, kind: str, locator: dict):
        if kind not in ("circle", "real"):
            raise ValueError(f"unknown embedding kind {kind!r}")
        self.minpoly = minpoly.primitive()
        self.kind = kind
        self.locator = dict(locator)
        self.degree = self.minpoly.degree
        self._monic = self.minpoly.monic()
        loc = tuple(sorted((k, str(v)) for k, v in self.locator.items() if k != "h"))
        self._key = (tuple(self.minpoly.coeffs), self.kind, loc)

    # constructors ---------------------------------------------------------
    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(UniPoly([0, 1]), "real", {"lo": Fraction(0), "hi": Fraction(0)})

    @classmethod
    def real(cls, minpoly: UniPoly, lo: Fraction, hi: Fraction) -> "NumberField":
        return cls(minpoly, "real", {"lo": Fraction(lo), "hi": Fraction(hi)})

    @classmethod
    def circle(cls, minpoly: UniPoly, w_lo=None, w_hi=None, sign: int = 1) -> "NumberField":
        m = minpoly.primitive()
        if m.degree == 1:
            root = -m.coeffs[0] / m.coeffs[1]
            if abs(root) != 1:
                raise ValueError("degree-1 circle field must have root +-1")
            return cls(m, "circle", {"exact": root})
        return cls(m, "circle", {"h": w_polynomial(m), "w_lo": Fraction(w_lo),
                                 "w_hi": Fraction(w_hi), "sign": sign})

    @classmethod
    def circle_roots(cls, minpoly: UniPoly) -> list["NumberField"]:
        """One field per root of minpoly on the unit circle (minpoly irreducible)."""
        m = minpoly.primitive()
        if m.degree == 1:
            root = -m.coeffs[0] / m.coeffs[1]
            return [cls.circle(m)] if abs(root) == 1 else []
        if m.degree % 2 or m.coeffs != tuple(reversed(m.coeffs)):
            return []
        h = w_polynomial(m)
        out = []
        for lo, hi in isolate_real_roots(h, Fraction(-2), Fraction(2)):
            if lo == hi and abs(lo) == 2:
                continue
            for sign in (1, -1):
                out.append(cls(m, "circle", {"h": h, "w_lo": lo, "w_hi": hi, "sign": sign}))
        return out

    # identity ---------------------------------------------------------------
    def key(self):
        return self._key

    def same_as(self, other) -> bool:
        return isinstance(other, NumberField) and self.key() == other.key()

    def __repr__(self):
        return f"NumberField({self.minpoly}, {self.kind}, {self.describe_root()})"

    def describe_root(self) -> str:
        if "exact" in self.locator:
            return f"root {self.locator['exact']}"
        if self.kind == "real":
            return f"real root in [{self.locator['lo']}, {self.locator['hi']}]"
        sgn = "+" if self.locator["sign"] > 0 else "-"
        return (f"unit-circle root with 2Re in [{self.locator['w_lo']}, {self.locator['w_hi']}],"
                f" Im {sgn}")

    # elements ----------------------------------------------------------------
    def element(self, rep) -> "FieldElement":
        if not isinstance(rep, UniPoly):
            rep = UniPoly(rep if isinstance(rep, (list, tuple)) else [rep])
        return FieldElement(self, rep)

    def gen(self) -> "FieldElement":
        return self.element(UniPoly([0, 1]))

    def one(self) -> "FieldElement":
        return self.element(UniPoly([1]))

    def zero(self) -> "FieldElement":
        return self.element(UniPoly())

    def reduce(self, p: UniPoly) -> UniPoly:
        if p.degree < self.degree:
            return p
        return p % self._monic

    def conj_gen_rep(self) -> UniPoly:
        if self.kind == "real":
            return UniPoly([0, 1])
        return self.gen().inverse().rep

    # embedding ---------------------------------------------------------------
    def refine(self, width: Fraction) -> None:
        loc = self.locator
        if "exact" in loc:
            return
        if self.kind == "real":
            if loc["lo"] == loc["hi"]:
                return
            loc["lo"], loc["hi"] = refine_root(self.minpoly, loc["lo"], loc["hi"], width)
        else:
            h = loc["h"]
            a, b = loc["w_lo"], loc["w_hi"]
            if h(a) == 0 or h(b) == 0 or a == b:
                return
            loc["w_lo"], loc["w_hi"] = refine_root(h, a, b, width)

    def gen_enclosure(self) -> ComplexInterval:
        loc = self.locator
        if "exact" in loc:
            return ComplexInterval(Interval(loc["exact"]))
        if self.kind == "real":
            return ComplexInterval(Interval(loc["lo"], loc["hi"]))
        w = Interval(loc["w_lo"], loc["w_hi"])
        re = w * Fraction(1, 2)
        im2 = Interval(1) - (w ** 2) * Fraction(1, 4)
        im = _sqrt_interval(im2)
        if loc["sign"] < 0:
            im = -im
        return ComplexInterval(re.to_float(), im)

    def gen_complex(self) -> complex:
        self.refine(Fraction(1, 10 ** 30))
        return self.gen_enclosure().to_complex()

    def certify(self) -> bool:
        """Recheck that the locator isolates a root of the claimed kind."""
        loc = self.locator
        if "exact" in loc:
            return self.minpoly(loc["exact"]) == 0 and (self.kind == "real" or abs(loc["exact"]) == 1)
        if self.kind == "real":
            lo, hi = loc["lo"], loc["hi"]
            if lo == hi:
                return self.minpoly(lo) == 0
            return self.minpoly(lo) != 0 and self.minpoly(hi) != 0 and \
                sturm_count(squarefree(self.minpoly), lo, hi) == 1
        h = loc["h"]
        lo, hi = loc["w_lo"], loc["w_hi"]
        if not (-2 <= lo <= hi <= 2):
            return False
        if w_polynomial(self.minpoly) != h:
            return False
        if lo == hi:
            return h(lo) == 0
        return h(lo) != 0 and h(hi) != 0 and sturm_count(squarefree(h), lo, hi) == 1


class FieldElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: UniPoly):
        self.field = field
        self.rep = field.reduce(rep)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and not other.field.same_as(self.field):
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, UniPoly([other]))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.rep)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.rep * other.rep)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.rep.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(self.rep, self.field.minpoly)
        if g.degree != 0:
            raise ArithmeticError("minimal polynomial is reducible")
        return FieldElement(self.field, s)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def conjugate(self) -> "FieldElement":
        if self.field.kind == "real":
            return self
        cg = FieldElement(self.field, self.field.conj_gen_rep())
        acc = self.field.zero()
        for c in reversed(self.rep.coeffs):
            acc = acc * cg + c
        return acc

    def abs_squared(self) -> "FieldElement":
        return self * self.conjugate()

    def enclosure(self) -> ComplexInterval:
        a = self.field.gen_enclosure()
        acc = ComplexInterval(Interval(0))
        for c in reversed(self.rep.coeffs):
            acc = acc * a + ComplexInterval(Interval(c))
        return acc

    def to_complex(self) -> complex:
        a = self.field.gen_complex()
        acc = 0j
        for c in reversed(self.rep.coeffs):
            acc = acc * a + float(c)
        return acc

    def minimal_polynomial(self) -> UniPoly:
        """Minimal polynomial over Q (primitive, integer)."""
        d = self.field.degree
        return _power_dependency(self, lambda e: _pad(e.rep, d), d)

    def __repr__(self):
        return f"FieldElement({self.rep} in {self.field!r})"


class GaussianField:
    """K(i) for a real field K."""

    def __init__(self, base: NumberField):
        if base.kind != "real":
            raise ValueError("Gaussian extension needs a real base field")
        self.base = base

    def key(self):
        return ("gaussian",) + self.base.key()

    def same_as(self, other) -> bool:
        return isinstance(other, GaussianField) and self.key() == other.key()

    def element(self, re, im=0) -> "GaussianElement":
        if not isinstance(re, FieldElement):
            re = self.base.element(re)
        if not isinstance(im, FieldElement):
            im = self.base.element(im)
        return GaussianElement(self, re, im)

    def one(self):
        return self.element(1)

    def zero(self):
        return self.element(0)

    def i(self):
        return self.element(0, 1)

    def __repr__(self):
        return f"GaussianField({self.base!r})"

    def describe_root(self) -> str:
        return "i adjoined to " + self.base.describe_root()

    @property
    def degree(self) -> int:
        return 2 * self.base.degree

    def certify(self) -> bool:
        return self.base.certify()


class GaussianElement:
    __slots__ = ("field", "re", "im")

    def __init__(self, field: GaussianField, re: FieldElement, im: FieldElement):
        self.field = field
        self.re = re
        self.im = im

    def _lift(self, other):
        if isinstance(other, GaussianElement):
            if other.field is not self.field and not other.field.same_as(self.field):
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussianElement(self.field, self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianElement(self.field, -self.re, -self.im)

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
        return GaussianElement(self.field, self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianElement":
        return GaussianElement(self.field, self.re, -self.im)

    def abs_squared(self) -> FieldElement:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianElement":
        n = self.abs_squared()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ninv = n.inverse()
        return GaussianElement(self.field, self.re * ninv, -self.im * ninv)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def enclosure(self) -> ComplexInterval:
        r = self.re.enclosure().re
        i = self.im.enclosure().re
        return ComplexInterval(r, i)

    def to_complex(self) -> complex:
        return complex(self.re.to_complex().real, self.im.to_complex().real)

    def minimal_polynomial(self) -> UniPoly:
        d = self.field.base.degree
        return _power_dependency(self, lambda e: _pad(e.re.rep, d) + _pad(e.im.rep, d), 2 * d)

    def __repr__(self):
        return f"GaussianElement({self.re.rep} + i*({self.im.rep}) in {self.field!r})"


# ----------------------------------------------------------------------
# relative extensions K[y]/(h) with a root located on the unit circle
# ----------------------------------------------------------------------

def _circle_point(s: Fraction) -> ComplexInterval:
    d = 1 + s * s
    return ComplexInterval(Interval((1 - s * s) / d), Interval(2 * s / d))


def _mag_upper(z: ComplexInterval) -> float:
    r = max(abs(_lo_float(z.re.lower)), abs(_hi_float(z.re.upper)))
    i = max(abs(_lo_float(z.im.lower)), abs(_hi_float(z.im.upper)))
    return _up(math.hypot(r, i) * (1 + 4e-16))


def _mag_lower(z: ComplexInterval) -> float:
    def dist(iv):
        lo, hi = _lo_float(iv.lower), _hi_float(iv.upper)
        if lo <= 0 <= hi:
            return 0.0
        return min(abs(lo), abs(hi))
    return _down(math.hypot(dist(z.re), dist(z.im)) * (1 - 4e-16))


def pellet_single_root(coeffs: list[ComplexInterval], center: ComplexInterval, rho: float) -> bool:
    """True if the polynomial (coefficient enclosures, low degree first) has exactly
    one root, counted with multiplicity, in the open disc |y - center| < rho."""
    n = len(coeffs)
    a = list(coeffs)
    taylor = []
    # repeated synthetic division gives the Taylor coefficients at the center
    for _ in range(n):
        acc = ComplexInterval(Interval(0))
        out = []
        for c in reversed(a):
            acc = acc * center + c
            out.append(acc)
        taylor.append(out[-1])
        a = list(reversed(out[:-1]))
    if len(taylor) < 2:
        return False
    lhs = _mag_lower(taylor[1]) * rho
    rhs = 0.0
    for j, t in enumerate(taylor):
        if j != 1:
            rhs = _up(rhs + _mag_upper(t) * _up(rho ** j * (1 + 1e-15)))
    return lhs > rhs


class RelativeField:
    """K[y]/(h) for a circle field K and a squarefree h in K[y].

    The distinguished root y0 of h is the unique root in a small disc around a
    point exactly on the unit circle.  Since the roots of h are closed under
    y -> 1/conj(y), uniqueness in two nested discs forces |y0| = 1, so complex
    conjugation acts on the chosen embedding by alpha -> 1/alpha, y -> 1/y.
    """

    def __init__(self, base: NumberField, modulus: list, s: Fraction, rho: float):
        if base.kind != "circle":
            raise ValueError("relative fields are built over circle fields")
        lead = modulus[-1].inverse()
        self.base = base
        self.modulus = [c * lead for c in modulus]
        self.s = Fraction(s)
        self.rho = rho
        self.degree = len(self.modulus) - 1
        self._key = ("relative",) + base.key() + (tuple(tuple(c.rep.coeffs) for c in self.modulus),
                                                 str(self.s), rho)

    def key(self):
        return self._key

    def same_as(self, other) -> bool:
        return isinstance(other, RelativeField) and self.key() == other.key()

    def describe_root(self) -> str:
        c = _circle_point(self.s).to_complex()
        return (f"root of a degree-{self.degree} polynomial over ({self.base.describe_root()}),"
                f" unique within {self.rho:g} of {c.real:.15g}{c.imag:+.15g}i")

    def element(self, coeffs) -> "RelativeElement":
        out = [c if isinstance(c, FieldElement) else self.base.element(c) for c in coeffs]
        return RelativeElement(self, out)

    def gen(self):
        return self.element([0, 1])

    def one(self):
        return self.element([1])

    def zero(self):
        return self.element([])

    def lift(self, x: FieldElement):
        return self.element([x])

    def reduce(self, p: list) -> list:
        p = list(p)
        d = self.degree
        while len(p) > d:
            q = p.pop()
            if not q.is_zero():
                for j in range(d):
                    p[len(p) - d + j] = p[len(p) - d + j] - q * self.modulus[j]
        while p and p[-1].is_zero():
            p.pop()
        return p

    def certify(self) -> bool:
        if not self.base.certify():
            return False
        self.base.refine(Fraction(1, 10 ** 30))
        enc = [self.base.element(c.rep).enclosure() for c in self.modulus]
        center = _circle_point(self.s)
        r2 = self.rho / (1 - self.rho)
        return self.rho < 0.25 and pellet_single_root(enc, center, self.rho) and \
            pellet_single_root(enc, center, _up(r2 * (1 + 1e-12)))


def _kp_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [a[0].field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _kp_divmod(a: list, b: list):
    a = list(a)
    inv = b[-1].inverse()
    q = [b[0].field.zero()] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = a[shift + j] - c * y
        a.pop()
        while a and a[-1].is_zero():
            a.pop()
    return q, a


class RelativeElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: RelativeField, coeffs: list):
        self.field = field
        self.coeffs = field.reduce(coeffs)

    def _lift(self, other):
        if isinstance(other, RelativeElement):
            if other.field is not self.field and not other.field.same_as(self.field):
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        if isinstance(other, FieldElement) and other.field.same_as(self.field.base):
            return self.field.lift(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.base.zero()
        a = self.coeffs + [z] * (n - len(self.coeffs))
        b = other.coeffs + [z] * (n - len(other.coeffs))
        return RelativeElement(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return RelativeElement(self.field, [-c for c in self.coeffs])

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
        return RelativeElement(self.field, _kp_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "RelativeElement":
        """Inverse via the extended Euclidean algorithm over K."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        one = [self.field.base.one()]
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        s0, s1 = [], one
        while len(r1) > 1:
            q, r = _kp_divmod(r0, r1)
            qs = _kp_mul(q, s1)
            n = max(len(s0), len(qs))
            z = self.field.base.zero()
            s2 = [(s0[j] if j < len(s0) else z) - (qs[j] if j < len(qs) else z) for j in range(n)]
            r0, r1, s0, s1 = r1, r, s1, s2
        if not r1:
            raise ArithmeticError("element is a zero divisor modulo the relative modulus")
        inv = r1[0].inverse()
        return RelativeElement(self.field, [c * inv for c in s1])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and \
            all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def conjugate(self) -> "RelativeElement":
        """alpha -> 1/alpha and y -> 1/y, valid at the certified unit-circle root."""
        yinv = self.field.gen().inverse()
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * yinv + self.field.lift(c.conjugate())
        return acc

    def abs_squared(self) -> "RelativeElement":
        return self * self.conjugate()

    def to_complex(self) -> complex:
        import numpy as np
        base_coeffs = [c.to_complex() for c in self.field.modulus]
        roots = np.roots(list(reversed(base_coeffs)))
        center = _circle_point(self.field.s).to_complex()
        y0 = complex(min(roots, key=lambda r: abs(r - center)))
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * y0 + c.to_complex()
        return acc

    def minimal_polynomial(self) -> UniPoly:
        d = self.field.degree * self.field.base.degree
        db = self.field.base.degree

        def vec(e):
            out = []
            for j in range(self.field.degree):
                c = e.coeffs[j].rep if j < len(e.coeffs) else UniPoly()
                out.extend(_pad(c, db))
            return out
        return _power_dependency(self, vec, d)

    def __repr__(self):
        return f"RelativeElement({[str(c.rep) for c in self.coeffs]} in {self.field.describe_root()})"
