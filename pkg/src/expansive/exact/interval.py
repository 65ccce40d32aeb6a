"""Closed intervals with exact rational or outward-rounded float endpoints."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _lo_float(x) -> float:
    if isinstance(x, float):
        return x
    f = float(x)
    return f if Fraction(f) <= x else _down(f)


def _hi_float(x) -> float:
    if isinstance(x, float):
        return x
    f = float(x)
    return f if Fraction(f) >= x else _up(f)


class Interval:
    """[lower, upper].

    Endpoints are exact (int/Fraction) unless a float enters the computation;
    float results are rounded outward by one ulp per operation.
    """

    __slots__ = ("lower", "upper")

    def __init__(self, lower, upper=None):
        if upper is None:
            upper = lower
        if isinstance(lower, int):
            lower = Fraction(lower)
        if isinstance(upper, int):
            upper = Fraction(upper)
        if lower > upper:
            raise ValueError(f"empty interval [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper

    @property
    def exact(self) -> bool:
        return not (isinstance(self.lower, float) or isinstance(self.upper, float))

    def _binary(self, other):
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction, float)):
            return Interval(other, other)
        return NotImplemented

    def _float_pair(self):
        return _lo_float(self.lower), _hi_float(self.upper)

    def __add__(self, other):
        other = self._binary(other)
        if other is NotImplemented:
            return other
        if self.exact and other.exact:
            return Interval(self.lower + other.lower, self.upper + other.upper)
        a, b = self._float_pair()
        c, d = other._float_pair()
        return Interval(_down(a + c), _up(b + d))

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.upper, -self.lower)

    def __sub__(self, other):
        other = self._binary(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._binary(other)
        if other is NotImplemented:
            return other
        if self.exact and other.exact:
            ps = (self.lower * other.lower, self.lower * other.upper,
                  self.upper * other.lower, self.upper * other.upper)
            return Interval(min(ps), max(ps))
        a, b = self._float_pair()
        c, d = other._float_pair()
        ps = [x * y for x in (a, b) for y in (c, d)]
        ps = [0.0 if math.isnan(p) else p for p in ps]
        return Interval(_down(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lower <= 0 <= self.upper:
            raise ZeroDivisionError("interval contains zero")
        if self.exact:
            return Interval(1 / self.upper, 1 / self.lower)
        a, b = self._float_pair()
        return Interval(_down(1 / b), _up(1 / a))

    def __truediv__(self, other):
        other = self._binary(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._binary(other) * self.reciprocal()

    def __pow__(self, n: int):
        if n < 0:
            return (self ** (-n)).reciprocal()
        if n == 0:
            return Interval(1, 1)
        if n % 2 == 1 or self.lower >= 0:
            lo, hi = self.lower, self.upper
        elif self.upper <= 0:
            lo, hi = -self.upper, -self.lower
        else:
            lo, hi = 0, max(-self.lower, self.upper)
        if self.exact:
            return Interval(lo ** n, hi ** n)
        a, b = _lo_float(lo), _hi_float(hi)
        res_lo = a ** n
        res_hi = b ** n
        # repeated multiplication error is bounded by n ulps
        for _ in range(n):
            res_lo, res_hi = _down(res_lo), _up(res_hi)
        return Interval(res_lo, res_hi)

    def contains(self, x) -> bool:
        return self.lower <= x <= self.upper

    __contains__ = contains

    def excludes_zero(self) -> bool:
        return self.lower > 0 or self.upper < 0

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def mid(self):
        return (self.lower + self.upper) / 2

    @property
    def mag(self):
        return max(abs(self.lower), abs(self.upper))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lower, other.lower), max(self.upper, other.upper))

    def to_float(self) -> "Interval":
        return Interval(*self._float_pair())

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lower == other.lower and self.upper == other.upper

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return f"Interval({self.lower}, {self.upper})"


def _cos_turns(lo: float, hi: float) -> tuple[float, float]:
    """Enclosure of cos(2*pi*t) for t in [lo, hi] (t in turns)."""
    if hi - lo >= 1:
        return -1.0, 1.0
    vals = [math.cos(2 * math.pi * lo), math.cos(2 * math.pi * hi)]
    tol = 4e-16 * (1 + abs(lo) + abs(hi)) * 2 * math.pi
    c_lo = min(vals) - tol
    c_hi = max(vals) + tol
    # maxima at integers, minima at half-integers
    if math.floor(hi) >= math.ceil(lo):
        c_hi = 1.0
    if math.floor(hi - 0.5) >= math.ceil(lo - 0.5):
        c_lo = -1.0
    return max(c_lo, -1.0), min(c_hi, 1.0)


def cos_turns(t: Interval) -> Interval:
    lo, hi = t._float_pair()
    return Interval(*_cos_turns(lo, hi))


def sin_turns(t: Interval) -> Interval:
    lo, hi = t._float_pair()
    return Interval(*_cos_turns(_down(lo - 0.25), _up(hi - 0.25)))


class ComplexInterval:
    """Rectangle re + i*im in the complex plane."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval | None = None):
        self.re = re if isinstance(re, Interval) else Interval(re)
        self.im = im if im is not None else Interval(0)
        if not isinstance(self.im, Interval):
            self.im = Interval(self.im)

    def _c(self, other):
        if isinstance(other, ComplexInterval):
            return other
        if isinstance(other, Interval):
            return ComplexInterval(other)
        if isinstance(other, (int, Fraction, float)):
            return ComplexInterval(Interval(other))
        return NotImplemented

    def __add__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        return ComplexInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __sub__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        return ComplexInterval(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        result = ComplexInterval(Interval(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "ComplexInterval":
        den = self.re ** 2 + self.im ** 2
        inv = den.reciprocal()
        return ComplexInterval(self.re * inv, -self.im * inv)

    def __truediv__(self, other):
        other = self._c(other)
        return self * other.reciprocal()

    def contains_zero(self) -> bool:
        return 0 in self.re and 0 in self.im

    def to_complex(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    def radius(self) -> float:
        return float(max(self.re.width, self.im.width)) / 2

    def __repr__(self):
        return f"ComplexInterval({self.re}, {self.im})"


def interval_eval(f, box: Mapping) -> Interval:
    """Enclosure of the range of a polynomial over a box.

    ``f`` is an MPoly (box keyed by position) or anything with a ``terms``
    mapping whose keys are sequences of (variable, exponent) pairs (box keyed
    by variable index).
    """
    from .mpoly import MPoly

    acc = Interval(0)
    if isinstance(f, MPoly):
        items = [(tuple((i, k) for i, k in enumerate(e) if k), c) for e, c in f.terms.items()]
    else:
        items = list(f.terms.items())
    for mono, c in items:
        t = Interval(c) if not isinstance(c, float) else Interval(c, c)
        for v, k in mono:
            if v not in box:
                raise KeyError(f"no interval bound for variable {v}")
            b = box[v]
            if not isinstance(b, Interval):
                b = Interval(b)
            t = t * (b ** k)
        acc = acc + t
    return acc
