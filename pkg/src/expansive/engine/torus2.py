"""Exact unit-torus intersection for ideals in two variables.

Torus points satisfy f = 0 and f* = 0, where f* = x^a y^b f(1/x, 1/y) is the
conjugate of f on the torus.  With S the generators plus their stars and
g = gcd(S), the torus part of V(S) splits as

* the torus points of the self-inversive curve g = 0, and
* the torus points of the finite set V(S/g).

The curve is handled by sampling the circle in x between the critical values
of the projection (where the number of unit roots in y can change) and by
the finite pipeline applied to its singular points.  The finite part is
projected to one coordinate by resultants after a shear (x, y) -> (x y^k, y)
that makes the projection injective; each fiber is computed over the number
field of the projected coordinate.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from math import gcd

import numpy as np

from ..exact.fields import (FieldElement, GaussianField, NumberField, RelativeField,
                            factor_integer_poly)
from ..exact.mpoly import MPoly, content_in, exact_divide, mpoly_gcd, mpoly_gcd_many, resultant
from ..exact.unipoly import (UniPoly, isolate_real_roots, poly_gcd, real_root_count,
                             refine_root, squarefree, sturm_count)
from .unit_circle import replay_unit_circle, unit_circle_root_count

SHEARS = (0, 1, -1, 2, -2, 3, -3, 4)
MAX_PAIRS = 10


class NotDecided(Exception):
    pass


def _p2s(p: UniPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _s2p(cs) -> UniPoly:
    return UniPoly([Fraction(c) for c in cs])


def star(p: MPoly) -> MPoly:
    return MPoly(p.nvars, {tuple(-k for k in e): c for e, c in p.terms.items()}).strip_monomial()


def shear(p: MPoly, k: int) -> MPoly:
    """p(u y^-k, y) as a polynomial in (u, y)."""
    if k == 0:
        return p
    return MPoly(2, {(e[0], e[1] - k * e[0]): c for e, c in p.terms.items()}).strip_monomial()


def _univariate(p: MPoly, i: int) -> UniPoly:
    return p.to_unipoly(i)


def _normalize_set(polys) -> list[MPoly]:
    out, seen = [], set()
    for p in polys:
        if p.is_zero():
            continue
        p = p.strip_monomial().integer_primitive()
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def star_closure(gens: list[MPoly]) -> list[MPoly]:
    return _normalize_set(list(gens) + [star(g) for g in gens])


# ----------------------------------------------------------------------
# arithmetic in Q(i) and the Cayley map
# ----------------------------------------------------------------------

def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _geval(p: UniPoly, z) -> tuple:
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p.coeffs):
        acc = _gmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def cayley_point(s: Fraction) -> tuple:
    """(1 + i s) / (1 - i s) as (re, im)."""
    d = 1 + s * s
    return ((1 - s * s) / d, 2 * s / d)


def _gpoly_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cayley_split(cs: list[tuple]) -> tuple[UniPoly, UniPoly]:
    """Real and imaginary parts of sum_k c_k (1 + i t)^k (1 - i t)^(d - k)."""
    d = len(cs) - 1
    one = (UniPoly([1]), UniPoly())
    A, B = (UniPoly([1]), UniPoly([0, 1])), (UniPoly([1]), UniPoly([0, -1]))
    apow, bpow = [one], [one]
    for _ in range(d):
        apow.append(_gpoly_mul(apow[-1], A))
        bpow.append(_gpoly_mul(bpow[-1], B))
    re, im = UniPoly(), UniPoly()
    for k, (cr, ci) in enumerate(cs):
        if cr == 0 and ci == 0:
            continue
        pr, pi = _gpoly_mul(apow[k], bpow[d - k])
        re = re + pr.scale(cr) - pi.scale(ci)
        im = im + pr.scale(ci) + pi.scale(cr)
    return re, im


def _real_part_gcd(cs: list[tuple]) -> UniPoly:
    re, im = cayley_split(cs)
    return poly_gcd(re, im)


# ----------------------------------------------------------------------
# fibers over a number field
# ----------------------------------------------------------------------

def _kpoly_trim(p: list) -> list:
    while p and p[-1].is_zero():
        p = p[:-1]
    return p


def _kpoly_mod(a: list, b: list) -> list:
    a = list(a)
    inv = b[-1].inverse()
    while len(a) >= len(b):
        q = a[-1] * inv
        shift = len(a) - len(b)
        for j, c in enumerate(b):
            a[shift + j] = a[shift + j] - q * c
        a = _kpoly_trim(a[:-1])
    return a


def kpoly_gcd(a: list, b: list) -> list:
    a, b = _kpoly_trim(a), _kpoly_trim(b)
    while b:
        a, b = b, _kpoly_mod(a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _kpoly_derivative(p: list) -> list:
    return _kpoly_trim([c * k for k, c in enumerate(p)][1:])


def kpoly_squarefree(p: list) -> list:
    if len(p) <= 2:
        return p
    g = kpoly_gcd(p, _kpoly_derivative(p))
    if len(g) <= 1:
        return p
    # exact division by long division
    q = [None] * (len(p) - len(g) + 1)
    r = list(p)
    for i in range(len(q) - 1, -1, -1):
        q[i] = r[i + len(g) - 1] / g[-1]
        for j, c in enumerate(g):
            r[i + j] = r[i + j] - q[i] * c
    return _kpoly_trim(q)


def fiber(K: NumberField, polys: list[MPoly]) -> list:
    """gcd over K[y] of p(alpha, y), monic and squarefree ([] means identically zero)."""
    h: list = []
    for p in polys:
        cs = [K.element(_univariate(c, 0)) for c in p.coeffs_in(1)]
        h = kpoly_gcd(h, cs)
        if len(h) == 1:
            return h
    return kpoly_squarefree(h)


# ----------------------------------------------------------------------
# finite part
# ----------------------------------------------------------------------

def _eliminant(B: list[MPoly], seed: int) -> tuple[UniPoly, list]:
    """Nonzero univariate polynomial in u vanishing on the u-projection of V(B)."""
    direct = [p for p in B if p.degree(1) <= 0]
    moving = [p for p in B if p.degree(1) > 0]
    R = UniPoly()
    steps: list = []
    for p in direct:
        R = poly_gcd(R, _univariate(p, 0))
        steps.append(("direct", B.index(p)))
    pairs = [(i, j) for i in range(len(B)) for j in range(i + 1, len(B))
             if B[i].degree(1) > 0 and B[j].degree(1) > 0][:MAX_PAIRS]
    for i, j in pairs:
        r = resultant(B[i], B[j], 1)
        if r:
            R = poly_gcd(R, _univariate(r.strip_monomial(), 0))
            steps.append(("pair", i, j))
            if R.degree == 0:
                break
    if R.is_zero() and len(moving) >= 2:
        rng = random.Random(seed)
        for _ in range(4):
            a = [rng.randint(1, 9) for _ in B]
            b = [rng.randint(1, 9) for _ in B]
            p1 = sum((B[k].scale(a[k]) for k in range(len(B))), MPoly(2))
            p2 = sum((B[k].scale(b[k]) for k in range(len(B))), MPoly(2))
            if p1.degree(1) > 0 and p2.degree(1) > 0:
                r = resultant(p1, p2, 1)
                if r:
                    R = _univariate(r.strip_monomial(), 0)
                    steps.append(("combo", a, b))
                    break
    if R.is_zero():
        raise NotDecided("all eliminants vanish")
    return R.primitive(), steps


def _replay_eliminant(B: list[MPoly], steps: list) -> UniPoly:
    R = UniPoly()
    for st in steps:
        if st[0] == "direct":
            R = poly_gcd(R, _univariate(B[st[1]], 0))
        elif st[0] == "pair":
            r = resultant(B[st[1]], B[st[2]], 1)
            R = poly_gcd(R, _univariate(r.strip_monomial(), 0))
        else:
            a, b = st[1], st[2]
            p1 = sum((B[k].scale(a[k]) for k in range(len(B))), MPoly(2))
            p2 = sum((B[k].scale(b[k]) for k in range(len(B))), MPoly(2))
            R = _univariate(resultant(p1, p2, 1).strip_monomial(), 0)
    return R.primitive() if R else R


def fiber_norm(m: UniPoly, h: list) -> UniPoly:
    """Res_u(m(u), h(u, y)): vanishes at every fiber root over every conjugate of u."""
    terms = {}
    for j, c in enumerate(h):
        for i, a in enumerate(c.rep.coeffs):
            if a:
                terms[(i, j)] = Fraction(a)
    den = 1
    for a in terms.values():
        den = den * a.denominator // gcd(den, a.denominator)
    H = MPoly(2, {e: int(a * den) for e, a in terms.items()})
    if H.degree(0) <= 0:
        return _univariate(H, 1).primitive()
    M = MPoly(2, {(i, 0): int(a) for i, a in enumerate(m.coeffs) if a})
    return _univariate(resultant(M, H, 0), 1).primitive()


def _relative_witness(fields: list, B: list[MPoly]):
    """A certified unit-circle root of a fiber of degree >= 2, if one is found."""
    for K in fields:
        h = fiber(K, B)
        while len(h) > 1 and h[0].is_zero():
            h = h[1:]
        if len(h) <= 2:
            continue
        K.refine(Fraction(1, 10 ** 30))
        coeffs = [c.to_complex() for c in reversed(h)]
        for r in np.roots(coeffs):
            r = complex(r)
            if abs(abs(r) - 1) > 1e-6:
                continue
            s = Fraction(math.tan(cmath.phase(r) / 2))
            for rho in (1e-3, 1e-5, 1e-7, 1e-9):
                F = RelativeField(K, h, s, rho)
                if F.certify():
                    return F, F.gen()
    return None


def _unshear(u0, y0, k: int):
    return u0 * (y0 ** (-k)) if k else u0


def finite_points(A: list[MPoly]):
    """Torus points of the finite set V(A), A closed under star.

    Returns ("nonempty", (x0, y0)) or ("empty", record); raises NotDecided.
    """
    for c in A:
        if c.is_constant():
            return "empty", {"kind": "constant", "value": str(c.constant_value())}
    for k in SHEARS:
        B = _normalize_set(shear(a, k) for a in A)
        try:
            R, steps = _eliminant(B, seed=k)
        except NotDecided:
            continue
        rec = {"kind": "resultant-chain", "shear": k, "steps": steps,
               "eliminant": _p2s(R), "factors": []}
        if R.degree <= 0:
            return "empty", rec
        ambiguous = False
        for m, mult in factor_integer_poly(R):
            fields = NumberField.circle_roots(m)
            entry = {"factor": _p2s(m), "multiplicity": mult}
            if not fields:
                entry["unit_circle"] = unit_circle_root_count(m).as_dict()
                rec["factors"].append(entry)
                continue
            # the fiber and the unimodularity test are identities in Q[u]/(m),
            # so one circle embedding decides all of them
            K = fields[0]
            h = fiber(K, B)
            if not h:
                u0 = K.gen()
                return "nonempty", (_unshear(u0, K.one(), k), K.one())
            if len(h) == 1:
                entry["fiber_degree"] = 0
                rec["factors"].append(entry)
                continue
            if len(h) > 2:
                hit = _relative_witness(fields, B)
                if hit is not None:
                    F, y0 = hit
                    return "nonempty", (_unshear(F.lift(F.base.gen()), y0, k), y0)
                N = fiber_norm(m, h)
                uc = unit_circle_root_count(N)
                if uc.count:
                    ambiguous = True
                    break
                entry["fiber_degree"] = len(h) - 1
                entry["fiber_norm"] = uc.as_dict()
                rec["factors"].append(entry)
                continue
            y0 = -h[0]
            if y0.is_zero() or not y0.abs_squared() == 1:
                entry["fiber_degree"] = 1
                entry["fiber_abs_squared"] = _p2s(y0.abs_squared().rep)
                rec["factors"].append(entry)
                continue
            return "nonempty", (_unshear(K.gen(), y0, k), y0)
        if not ambiguous:
            return "empty", rec
    raise NotDecided("no shear separates the finite fiber")


def replay_finite(A: list[MPoly], rec: dict) -> bool:
    if rec["kind"] == "constant":
        return any(c.is_constant() and str(c.constant_value()) == rec["value"] for c in A)
    k = rec["shear"]
    B = _normalize_set(shear(a, k) for a in A)
    R = _replay_eliminant(B, rec["steps"])
    if _p2s(R) != rec["eliminant"]:
        return False
    if R.degree <= 0:
        return R.degree == 0
    prod = UniPoly([1])
    for entry in rec["factors"]:
        prod = prod * _s2p(entry["factor"]) ** entry["multiplicity"]
    if prod.primitive() != R:
        return False
    for entry in rec["factors"]:
        m = _s2p(entry["factor"])
        if "unit_circle" in entry:
            uc = entry["unit_circle"]
            if _s2p(uc["poly"]).primitive() != m or uc["count"] != 0 or not replay_unit_circle(uc):
                return False
            continue
        fields = NumberField.circle_roots(m)
        if not fields:
            return False
        h = fiber(fields[0], B)
        if "fiber_norm" in entry:
            uc = entry["fiber_norm"]
            if len(h) <= 2 or _s2p(uc["poly"]).primitive() != fiber_norm(m, h).primitive() \
                    or uc["count"] != 0 or not replay_unit_circle(uc):
                return False
        elif entry["fiber_degree"] == 0:
            if len(h) != 1:
                return False
        else:
            if len(h) != 2:
                return False
            y0 = -h[0]
            if not y0.is_zero() and y0.abs_squared() == 1:
                return False
    return True


# ----------------------------------------------------------------------
# curve part
# ----------------------------------------------------------------------

def _content_fields(c: MPoly, i: int):
    """Circle roots of a univariate content polynomial in variable i."""
    if c.is_constant():
        return None, None
    p = _univariate(c.strip_monomial(), i)
    uc = unit_circle_root_count(p)
    if uc.count == 0:
        return None, uc.as_dict()
    for m, _ in factor_integer_poly(p):
        fs = NumberField.circle_roots(m)
        if fs:
            return fs[0], None
    raise AssertionError("unit-circle count and factorization disagree")


def critical_poly(g: MPoly) -> UniPoly:
    """lc_y * tc_y * disc_y of g, a polynomial in x."""
    cs = g.coeffs_in(1)
    lc, tc = _univariate(cs[-1], 0), _univariate(cs[0], 0)
    D = lc * tc
    if g.degree(1) >= 2:
        D = D * _univariate(resultant(g, g.derivative(1), 1).strip_monomial(), 0)
    return D


def arc_samples(E: UniPoly) -> list[Fraction]:
    """Rational points in every gap between (and beyond) the real roots of E."""
    if E.degree <= 0:
        return [Fraction(0)]
    roots = isolate_real_roots(E)
    if not roots:
        return [Fraction(0)]
    sq = squarefree(E)
    refined = []
    for a, b in roots:
        refined.append(refine_root(sq, a, b, Fraction(1, 2 ** 8)) if a != b else (a, b))
    out = [refined[0][0] - 1]
    for (a0, b0), (a1, b1) in zip(refined, refined[1:]):
        out.append((b0 + a1) / 2)
    out.append(refined[-1][1] + 1)
    return out


def _gauss_coeffs(g: MPoly, z) -> list[tuple]:
    return [_geval(_univariate(c, 0), z) for c in g.coeffs_in(1)]


def _fiber_unit_root(g: MPoly, s: Fraction):
    """A unit root of g(x0, y) for x0 = cayley(s), as Gaussian-field elements, or None."""
    z = cayley_point(s)
    cs = _gauss_coeffs(g, z)
    while cs and cs[-1] == (0, 0):
        cs.pop()
    p_m1 = (Fraction(0), Fraction(0))
    for k, c in enumerate(cs):
        sgn = -1 if k % 2 else 1
        p_m1 = (p_m1[0] + sgn * c[0], p_m1[1] + sgn * c[1])
    if p_m1 == (0, 0):
        F = GaussianField(NumberField.rationals())
        return F.element(z[0], z[1]), F.element(-1)
    E2 = _real_part_gcd(cs)
    if E2.degree <= 0 or real_root_count(E2) == 0:
        return None
    for m, _ in factor_integer_poly(E2):
        iv = isolate_real_roots(m)
        if not iv:
            continue
        lo, hi = iv[0]
        if m.degree == 1:
            r = -m.coeffs[0] / m.coeffs[1]
            lo = hi = r
        K = NumberField.real(m, lo, hi)
        F = GaussianField(K)
        t0 = F.element(K.gen())
        y0 = (F.one() + F.i() * t0) / (F.one() - F.i() * t0)
        return F.element(z[0], z[1]), y0
    raise AssertionError("real root count and factorization disagree")


def _fiber_has_unit_root(g: MPoly, s: Fraction) -> int:
    z = cayley_point(s)
    cs = _gauss_coeffs(g, z)
    while cs and cs[-1] == (0, 0):
        cs.pop()
    p_m1 = sum(((-1) ** k) * c[0] for k, c in enumerate(cs)), sum(((-1) ** k) * c[1] for k, c in enumerate(cs))
    E2 = _real_part_gcd(cs)
    n = real_root_count(E2) if E2.degree > 0 else 0
    return n + (1 if p_m1 == (0, 0) else 0)


def curve_points(g: MPoly):
    """Torus points of the self-inversive curve g = 0."""
    rec: dict = {"kind": "curve"}
    # squarefree part
    gsq = exact_divide(g, mpoly_gcd_many([g, g.derivative(0), g.derivative(1)]))
    gsq = gsq.integer_primitive()
    rec["curve"] = repr(gsq)
    cy = content_in(gsq, 1)      # polynomial in x
    cx = content_in(gsq, 0)      # polynomial in y
    K, cert = _content_fields(cy, 0)
    if K is not None:
        return "nonempty", (K.gen(), K.one())
    rec["content_x"] = cert
    K, cert = _content_fields(cx, 1)
    if K is not None:
        return "nonempty", (K.one(), K.gen())
    rec["content_y"] = cert
    core = gsq
    if not cy.is_constant():
        core = exact_divide(core, cy)
    if not cx.is_constant():
        core = exact_divide(core, cx)
    core = core.integer_primitive()
    if core.is_constant():
        rec["core"] = "constant"
        return "empty", rec
    D = critical_poly(core)
    Dc = [(c, Fraction(0)) for c in D.coeffs]
    E = _real_part_gcd(Dc)
    samples = arc_samples(E)
    rec["critical"] = _p2s(D)
    rec["cayley_gcd"] = _p2s(E)
    rec["samples"] = [str(s) for s in samples]
    for s in samples:
        hit = _fiber_unit_root(core, s)
        if hit is not None:
            return "nonempty", hit
    # isolated torus points of a self-inversive curve are singular points
    sing = star_closure([core, core.derivative(0), core.derivative(1)])
    status, data = finite_points(sing)
    if status == "nonempty":
        return status, data
    rec["singular"] = data
    return "empty", rec


def replay_curve(g: MPoly, rec: dict) -> bool:
    gsq = exact_divide(g, mpoly_gcd_many([g, g.derivative(0), g.derivative(1)])).integer_primitive()
    if repr(gsq) != rec["curve"]:
        return False
    cy, cx = content_in(gsq, 1), content_in(gsq, 0)
    for c, key in ((cy, "content_x"), (cx, "content_y")):
        if c.is_constant():
            if rec[key] is not None:
                return False
        elif not (rec[key] and rec[key]["count"] == 0 and replay_unit_circle(rec[key])):
            return False
    core = gsq
    if not cy.is_constant():
        core = exact_divide(core, cy)
    if not cx.is_constant():
        core = exact_divide(core, cx)
    core = core.integer_primitive()
    if core.is_constant():
        return rec.get("core") == "constant"
    D = critical_poly(core)
    E = _real_part_gcd([(c, Fraction(0)) for c in D.coeffs])
    if _p2s(D) != rec["critical"] or _p2s(E) != rec["cayley_gcd"]:
        return False
    samples = sorted(Fraction(s) for s in rec["samples"])
    if not samples:
        return False
    # every gap between critical values, including both unbounded ones, holds a sample
    if E.degree > 0:
        if any(E(s) == 0 for s in samples):
            return False
        if sturm_count(E, None, samples[0]) or sturm_count(E, samples[-1], None):
            return False
        if any(sturm_count(E, a, b) > 1 for a, b in zip(samples, samples[1:])):
            return False
    if any(_fiber_has_unit_root(core, s) for s in samples):
        return False
    sing = star_closure([core, core.derivative(0), core.derivative(1)])
    return replay_finite(sing, rec["singular"])


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------

def split_curve(gens: list[MPoly]):
    S = star_closure(gens)
    g = mpoly_gcd_many(S)
    if g.is_constant():
        return S, None, S
    A = _normalize_set(exact_divide(s, g) for s in S)
    return S, g.integer_primitive(), A


def torus_points_2d(gens: list[MPoly]):
    """("nonempty", (x0, y0)) | ("empty", record); raises NotDecided."""
    S, g, A = split_curve(gens)
    rec: dict = {"kind": "torus-2d"}
    if g is not None:
        status, data = curve_points(g)
        if status == "nonempty":
            return status, data
        rec["curve"] = data
    status, data = finite_points(A)
    if status == "nonempty":
        return status, data
    rec["finite"] = data
    return "empty", rec


def replay_2d(gens: list[MPoly], rec: dict) -> bool:
    S, g, A = split_curve(gens)
    if g is not None:
        if "curve" not in rec or not replay_curve(g, rec["curve"]):
            return False
    elif "curve" in rec:
        return False
    return replay_finite(A, rec["finite"])
