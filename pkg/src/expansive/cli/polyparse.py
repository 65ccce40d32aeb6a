"""Parser for Laurent polynomial and generator-family strings.

    polynomial := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*'? factor)*
    factor     := integer | var ['^' signed-integer]
                | 'n' ['^' integer] | '(' n-polynomial ')'      (families only)
    var        := 'x' index | 'e(' index ')' | 'e(n' [('+'|'-') integer] ')'

Whitespace is insignificant.  A string using 'n' anywhere is a family.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact.unipoly import UniPoly
from ..presentations import FamilyTerm, GeneratorFamily, LaurentPoly, make_exponent

EXP_LIMIT = 2 ** 31
N_POLY = UniPoly([0, 1])


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(str(self))

    def __str__(self):
        return f"{self.message} at column {self.pos + 1}\n  {self.text}\n  {' ' * self.pos}^"


class _Parser:
    def __init__(self, text: str, bare_x: bool = False):
        self.text = text
        self.pos = 0
        self.family = False
        self.bare_x = bare_x

    # lexing helpers -----------------------------------------------------
    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}" + (f", found {self.peek()!r}" if self.peek() else ", found end of input"))
        self.pos += 1

    def integer(self, what: str = "integer") -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def signed_integer(self) -> int:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        start = self.pos
        value = sign * self.integer("exponent")
        if abs(value) >= EXP_LIMIT:
            self.error("exponent overflow (|exponent| must be below 2^31)", start)
        return value

    # grammar --------------------------------------------------------------
    def polynomial(self, closing: str = ""):
        """List of (coefficient UniPoly in n, {key: exponent})."""
        terms = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        terms.append(self.term(sign))
        while True:
            ch = self.peek()
            if ch in ("+", "-"):
                self.pos += 1
                terms.append(self.term(-1 if ch == "-" else 1))
            elif ch == closing:
                return terms
            else:
                self.error(f"unexpected character {ch!r}")

    def _starts_factor(self, ch: str) -> bool:
        return ch.isdigit() or ch in ("x", "e", "n", "(")

    def term(self, sign: int):
        coeff = UniPoly([sign])
        mono: dict = {}
        if not self._starts_factor(self.peek()):
            ch = self.peek()
            self.error(f"expected a term, found {ch!r}" if ch else "expected a term, found end of input")
        while True:
            c, key, k = self.factor()
            if key is None:
                coeff = coeff * c
            else:
                mono[key] = mono.get(key, 0) + k
                if abs(mono[key]) >= EXP_LIMIT:
                    self.error("exponent overflow (|exponent| must be below 2^31)")
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if not self._starts_factor(self.peek()):
                    self.error("expected a factor after '*'")
            elif not self._starts_factor(ch):
                return coeff, {key: k for key, k in mono.items() if k}

    def factor(self):
        ch = self.peek()
        start = self.pos
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.peek() == "/":
                self.pos += 1
                den = self.integer("denominator")
                if den == 0:
                    self.error("zero denominator")
                value /= den
            return UniPoly([value]), None, 0
        if ch == "n":
            self.pos += 1
            self.family = True
            k = 1
            if self.peek() == "^":
                self.pos += 1
                k = self.integer("exponent")
            return N_POLY ** k, None, 0
        if ch == "(":
            self.pos += 1
            self.family = True
            inner = self.polynomial(closing=")")
            self.take(")")
            if any(m for _, m in inner):
                self.error("only polynomials in n may appear in parentheses", start)
            total = UniPoly()
            for c, _ in inner:
                total = total + c
            return total, None, 0
        if ch == "x":
            self.pos += 1
            if self.bare_x and not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                idx = 1
            else:
                idx = self.index(start)
            key = ("fixed", idx)
        elif ch == "e":
            self.pos += 1
            self.take("(")
            if self.peek() == "n":
                self.pos += 1
                self.family = True
                off = 0
                if self.peek() in "+-":
                    s = -1 if self.peek() == "-" else 1
                    self.pos += 1
                    off = s * self.integer("offset")
                key = ("shift", off)
            else:
                key = ("fixed", self.index(start))
            self.take(")")
        else:
            self.error(f"unexpected character {ch!r}")
        k = 1
        if self.peek() == "^":
            self.pos += 1
            k = self.signed_integer()
        return None, key, k

    def index(self, start: int) -> int:
        if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
            self.error("expected a variable index", self.pos)
        idx = self.integer("variable index")
        if idx < 1:
            self.error("variable index must be positive", start)
        if idx >= EXP_LIMIT:
            self.error("variable index too large", start)
        return idx


def _parse(text: str, bare_x: bool = False):
    p = _Parser(text, bare_x)
    if not text.strip():
        p.error("empty polynomial")
    terms = p.polynomial()
    if p.peek():
        p.error("trailing input")
    return p.family, terms


def parse_generator(text: str, bare_x: bool = False) -> LaurentPoly | GeneratorFamily:
    """A LaurentPoly, or a GeneratorFamily when the string mentions n."""
    family, terms = _parse(text, bare_x)
    if not family:
        out: dict = {}
        for c, mono in terms:
            if c.coeffs and c.coeffs[0].denominator != 1:
                raise ParseError("coefficients must be integers", text, 0)
            e = make_exponent((idx, k) for (_, idx), k in mono.items())
            out[e] = out.get(e, 0) + int(c.coeffs[0] if c.coeffs else 0)
        return LaurentPoly(out)
    merged: dict = {}
    for c, mono in terms:
        key = tuple(sorted(mono.items()))
        merged[key] = merged.get(key, UniPoly()) + c
    return GeneratorFamily(tuple(FamilyTerm(k, c) for k, c in merged.items() if not c.is_zero()))


def parse_polynomial(text: str) -> LaurentPoly:
    g = parse_generator(text)
    if isinstance(g, GeneratorFamily):
        raise ParseError("family syntax (n) is not allowed here", text, text.find("n"))
    return g


def parse_univariate(text: str) -> UniPoly:
    """Integer polynomial in one variable, written x, x1 or e(1)."""
    p = parse_generator(text, bare_x=True)
    if isinstance(p, GeneratorFamily):
        raise ParseError("family syntax (n) is not allowed here", text, text.find("n"))
    if p.variables() - {1}:
        raise ParseError("a univariate polynomial may only use one variable", text, 0)
    if any(k < 0 for e in p.terms for _, k in e):
        raise ParseError("negative exponents are not allowed here", text, 0)
    return p.to_unipoly(1)
