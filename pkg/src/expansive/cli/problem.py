"""Problem files: TOML documents with a ``kind`` key and kind-specific keys."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import tomli

from ..engine.witness import TorusWitness
from ..exact.cyclotomic import CyclotomicValue
from ..presentations import GeneratorFamily, IdealSpec, LaurentPoly, ModuleSpec
from .polyparse import ParseError, parse_generator, parse_univariate

KINDS = ("module", "cyclic", "linear-units", "algebraic-unit", "witness-check", "simulate")
COMMON = {"kind", "name", "description", "expect", "engine"}
ALLOWED = {
    "module": {"annihilators", "variables"},
    "cyclic": {"annihilator", "family", "truncation", "variables"},
    "linear-units": {"H", "G", "include_t"},
    "algebraic-unit": {"minpoly"},
    "witness-check": {"generators", "family", "witness"},
    "simulate": {"generators", "family", "truncation", "witness", "delta", "window", "factor"},
}
ENGINE_KEYS = {"budget", "tolerance", "depth"}
VERDICTS = ("expansive", "non_expansive", "unknown")


class ProblemError(ValueError):
    """Invalid problem file; the message names the offending key."""


@dataclass
class Problem:
    kind: str
    data: dict
    name: str = ""
    expect: str | None = None
    engine: dict = field(default_factory=dict)
    source: str = ""


def load_problem(text: str, source: str = "<input>") -> Problem:
    try:
        raw = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        msg = str(exc)
        if msg.startswith("Cannot overwrite") or msg.startswith("Cannot declare"):
            msg = "duplicate key: " + msg
        raise ProblemError(f"{source}: {msg}") from None
    return build_problem(raw, source)


def build_problem(raw: dict, source: str = "<input>") -> Problem:
    kind = raw.get("kind")
    if kind not in KINDS:
        raise ProblemError(f"{source}: 'kind' must be one of {', '.join(KINDS)}; got {kind!r}")
    unknown = set(raw) - COMMON - ALLOWED[kind]
    if unknown:
        raise ProblemError(f"{source}: unknown key(s) for kind {kind!r}: {', '.join(sorted(unknown))}")
    engine = raw.get("engine", {})
    if not isinstance(engine, dict) or set(engine) - ENGINE_KEYS:
        raise ProblemError(f"{source}: [engine] accepts only {', '.join(sorted(ENGINE_KEYS))}")
    expect = raw.get("expect")
    if expect is not None and expect not in VERDICTS:
        raise ProblemError(f"{source}: 'expect' must be one of {', '.join(VERDICTS)}")
    data = {k: v for k, v in raw.items() if k not in COMMON}
    prob = Problem(kind, data, str(raw.get("name", "")), expect, dict(engine), source)
    _validate(prob)
    return prob


def _validate(p: Problem) -> None:
    """Parse every polynomial eagerly so that errors surface before any engine runs."""
    d = p.data
    if p.kind == "module":
        module_spec(p)
    elif p.kind == "cyclic":
        cyclic_input(p)
    elif p.kind == "linear-units":
        for key in ("H", "G"):
            if key not in d:
                raise ProblemError(f"{p.source}: missing key {key!r}")
            if not all(isinstance(x, list) and len(x) == 2 and all(isinstance(v, int) for v in x)
                       for x in d[key]):
                raise ProblemError(f"{p.source}: {key!r} must be a list of [a, b] integer pairs")
    elif p.kind == "algebraic-unit":
        _require(p, "minpoly", str)
        _parse(p, "minpoly", d["minpoly"], univariate=True)
    elif p.kind == "witness-check":
        generators_input(p)
        witness_input(p, required=True)
    elif p.kind == "simulate":
        generators_input(p)
        witness_input(p, required=False)
        if "delta" in d:
            delta_input(p)
        if "window" in d and not (isinstance(d["window"], int) and d["window"] >= 1):
            raise ProblemError(f"{p.source}: 'window' must be a positive integer")


def _require(p: Problem, key: str, typ):
    if key not in p.data:
        raise ProblemError(f"{p.source}: missing key {key!r}")
    if not isinstance(p.data[key], typ):
        raise ProblemError(f"{p.source}: {key!r} has the wrong type")
    return p.data[key]


def _parse(p: Problem, key: str, text, univariate: bool = False):
    if not isinstance(text, str):
        raise ProblemError(f"{p.source}: {key!r} entries must be strings")
    try:
        return parse_univariate(text) if univariate else parse_generator(text)
    except ParseError as exc:
        raise ProblemError(f"{p.source}: in {key!r}: {exc}") from None


def _poly_list(p: Problem, key: str, value) -> list[LaurentPoly]:
    items = [value] if isinstance(value, str) else value
    if not isinstance(items, list) or not items:
        raise ProblemError(f"{p.source}: {key!r} must be a nonempty list of polynomial strings")
    out = []
    for s in items:
        g = _parse(p, key, s)
        if isinstance(g, GeneratorFamily):
            raise ProblemError(f"{p.source}: {key!r} uses family syntax; put it under 'family'")
        out.append(g)
    return out


def _variables(p: Problem) -> frozenset | None:
    vs = p.data.get("variables")
    if vs is None:
        return None
    out = set()
    for v in vs:
        if isinstance(v, int) and v >= 1:
            out.add(v)
        elif isinstance(v, str) and re.fullmatch(r"x[1-9][0-9]*|e\([1-9][0-9]*\)", v):
            out.add(int(re.sub(r"\D", "", v)))
        else:
            raise ProblemError(f"{p.source}: bad variable name {v!r}")
    return frozenset(out)


def module_spec(p: Problem) -> ModuleSpec:
    anns = _require(p, "annihilators", list)
    if not anns:
        raise ProblemError(f"{p.source}: 'annihilators' is empty")
    ideals = [_poly_list(p, "annihilators", a) for a in anns]
    amb = _variables(p)
    if amb is None:
        amb = frozenset().union(*(g.variables() for gens in ideals for g in gens))
    try:
        return ModuleSpec(tuple(IdealSpec(tuple(g), amb) for g in ideals), amb)
    except ValueError as exc:
        raise ProblemError(f"{p.source}: {exc}") from None


def cyclic_input(p: Problem):
    """IdealSpec, or (GeneratorFamily, truncation)."""
    d = p.data
    if ("annihilator" in d) == ("family" in d):
        raise ProblemError(f"{p.source}: give exactly one of 'annihilator' or 'family'")
    if "family" in d:
        return _family(p)
    gens = _poly_list(p, "annihilator", d["annihilator"])
    amb = _variables(p)
    try:
        return IdealSpec(tuple(gens), amb)
    except ValueError as exc:
        raise ProblemError(f"{p.source}: {exc}") from None


def _family(p: Problem):
    fam = _parse(p, "family", p.data["family"])
    if not isinstance(fam, GeneratorFamily):
        raise ProblemError(f"{p.source}: 'family' must use the symbol n")
    trunc = p.data.get("truncation", 3)
    if not isinstance(trunc, int) or trunc < 1:
        raise ProblemError(f"{p.source}: 'truncation' must be a positive integer")
    return fam, trunc


def generators_input(p: Problem):
    """A list of LaurentPoly, or (GeneratorFamily, truncation)."""
    d = p.data
    if ("generators" in d) == ("family" in d):
        raise ProblemError(f"{p.source}: give exactly one of 'generators' or 'family'")
    if "family" in d:
        return _family(p)
    return _poly_list(p, "generators", d["generators"])


_ZETA = re.compile(r"\s*zeta\(\s*([0-9]+)\s*,\s*(-?[0-9]+)\s*\)\s*")


def parse_unit_value(text) -> CyclotomicValue:
    """'1', '-1', 'i', '-i' or 'zeta(q,k)' = exp(2 pi i k/q)."""
    if isinstance(text, int) and text in (1, -1):
        return CyclotomicValue(1, 1) if text == 1 else CyclotomicValue.zeta(2, 1)
    if not isinstance(text, str):
        raise ValueError(f"bad witness value {text!r}")
    t = text.strip()
    table = {"1": (1, 0), "-1": (2, 1), "i": (4, 1), "-i": (4, 3)}
    if t in table:
        return CyclotomicValue.zeta(*table[t])
    m = _ZETA.fullmatch(t)
    if not m or int(m.group(1)) < 1:
        raise ValueError(f"bad witness value {text!r}; use 1, -1, i, -i or zeta(q,k)")
    return CyclotomicValue.zeta(int(m.group(1)), int(m.group(2)))


def witness_input(p: Problem, required: bool) -> TorusWitness | None:
    w = p.data.get("witness")
    if w is None:
        if required:
            raise ProblemError(f"{p.source}: missing [witness] table")
        return None
    if not isinstance(w, dict):
        raise ProblemError(f"{p.source}: 'witness' must be a table of variable = value")
    vals = {}
    for key, val in w.items():
        m = re.fullmatch(r"x([1-9][0-9]*)|e\(([1-9][0-9]*)\)", key)
        if not m:
            raise ProblemError(f"{p.source}: bad witness variable {key!r}")
        try:
            vals[int(m.group(1) or m.group(2))] = parse_unit_value(val)
        except ValueError as exc:
            raise ProblemError(f"{p.source}: {exc}") from None
    q = 1
    for v in vals.values():
        q = q * v.order // math.gcd(q, v.order)
    return TorusWitness({k: v.lift(q) for k, v in vals.items()}, "from problem file")


def delta_input(p: Problem) -> Fraction:
    try:
        delta = Fraction(str(p.data["delta"]))
    except (ValueError, ZeroDivisionError):
        raise ProblemError(f"{p.source}: 'delta' must be a rational number such as \"1/60\"") from None
    if delta <= 0:
        raise ProblemError(f"{p.source}: 'delta' must be positive")
    return delta
