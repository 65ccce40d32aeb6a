"""Exact arithmetic with roots of unity, reduced modulo cyclotomic polynomials."""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, pi

from .unipoly import UniPoly


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> UniPoly:
    """The q-th cyclotomic polynomial."""
    if q < 1:
        raise ValueError("cyclotomic order must be positive")
    p = UniPoly([-1] + [0] * (q - 1) + [1])
    for d in range(1, q):
        if q % d == 0:
            p = p.exact_div(cyclotomic_poly(d))
    return p


def euler_phi(q: int) -> int:
    return sum(1 for k in range(1, q + 1) if gcd(k, q) == 1)


def cyclotomic_order(m: UniPoly, max_order: int = 400) -> int | None:
    """Return q if m is (a scalar multiple of) the q-th cyclotomic polynomial."""
    if m.degree < 1:
        return None
    target = m.monic()
    deg = m.degree
    for q in range(1, max_order + 1):
        if euler_phi(q) == deg and cyclotomic_poly(q) == target:
            return q
    return None


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CyclotomicValue:
    """An element of Z[zeta_q], stored as an integer polynomial of degree < phi(q)."""

    __slots__ = ("order", "rep")

    def __init__(self, order: int, rep: UniPoly | list | int = 0):
        if order < 1:
            raise ValueError("order must be positive")
        if isinstance(rep, int):
            rep = UniPoly([rep])
        elif not isinstance(rep, UniPoly):
            rep = UniPoly(rep)
        self.order = order
        self.rep = rep % cyclotomic_poly(order) if rep.degree >= euler_phi(order) else rep

    @classmethod
    def zeta(cls, q: int, k: int = 1) -> "CyclotomicValue":
        """zeta_q ** k with zeta_q = exp(2 pi i / q)."""
        k %= q
        return cls(q, UniPoly.monomial(k))

    def lift(self, order: int) -> "CyclotomicValue":
        """Re-express in Z[zeta_order]; order must be a multiple of self.order."""
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        out = UniPoly()
        for k, c in enumerate(self.rep.coeffs):
            if c:
                out = out + UniPoly.monomial(k * step, c)
        return CyclotomicValue(order, out)

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicValue(self.order, other)
        elif isinstance(other, Fraction):
            if other.denominator != 1:
                raise ValueError("non-integral constant")
            other = CyclotomicValue(self.order, int(other))
        if not isinstance(other, CyclotomicValue):
            return None, None
        L = _lcm(self.order, other.order)
        a = self if self.order == L else self.lift(L)
        b = other if other.order == L else other.lift(L)
        return a, b

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicValue(a.order, a.rep + b.rep)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.order, -self.rep)

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicValue(a.order, a.rep - b.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicValue(a.order, a.rep * b.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicValue(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CyclotomicValue":
        """Inverse of a unit-modulus value, which is its complex conjugate."""
        c = self.conjugate()
        if self * c == 1:
            return c
        raise ArithmeticError("only unit-modulus values are inverted in Z[zeta]")

    def conjugate(self) -> "CyclotomicValue":
        out = UniPoly()
        for k, c in enumerate(self.rep.coeffs):
            if c:
                out = out + UniPoly.monomial((-k) % self.order, c)
        return CyclotomicValue(self.order, out)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.rep == b.rep

    def __hash__(self):
        return hash((self.order, self.rep))

    def __complex__(self):
        z = cmath.exp(2j * pi / self.order)
        return complex(sum(float(c) * z ** k for k, c in enumerate(self.rep.coeffs)))

    def as_root_of_unity(self) -> tuple[int, int] | None:
        """(q, k) if the value is exactly zeta_q^k with gcd reduced, else None."""
        for k in range(self.order):
            if self == CyclotomicValue.zeta(self.order, k):
                g = gcd(k, self.order)
                return self.order // g, k // g
        return None

    def __repr__(self):
        return f"CyclotomicValue({self.order}, {self.rep})"
