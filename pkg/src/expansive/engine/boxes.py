"""Branch and bound over angle boxes of the unit torus.

Angles are measured in turns (theta in [0, 1) means exp(2 pi i theta)).  A box
is discarded when the enclosure of the real or imaginary part of some
generator excludes 0.  Splitting is deterministic: the widest side is halved,
lowest index first on ties, and boxes are processed depth first.

The cover is recorded as a preorder list: SPLIT for an inner node, the index
of the excluding generator for a discarded leaf, OPEN for a leaf that hit the
depth limit or the budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exact.interval import _cos_turns, _down, _up
from ..presentations import LaurentPoly

SPLIT = -1
OPEN = -2
TWO_PI = math.nextafter(2 * math.pi, math.inf)  # just above 2 pi


def _iv_add(a, b):
    return (_down(a[0] + b[0]), _up(a[1] + b[1]))


def _iv_scale(c: float, a):
    lo, hi = c * a[0], c * a[1]
    if lo > hi:
        lo, hi = hi, lo
    return (_down(lo), _up(hi))


def _iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (_down(min(ps)), _up(max(ps)))


def _cos_iv(lo, hi):
    return _cos_turns(lo, hi)


def _sin_iv(lo, hi):
    return _cos_turns(_down(lo - 0.25), _up(hi - 0.25))


class CompiledPoly:
    """A Laurent polynomial restricted to the torus, in angle coordinates."""

    def __init__(self, f: LaurentPoly, variables: Sequence[int]):
        pos = {v: i for i, v in enumerate(variables)}
        self.terms = []
        for e, c in f.terms.items():
            vec = [0] * len(variables)
            for v, k in e:
                vec[pos[v]] = k
            self.terms.append((float(c), tuple(vec)))

    def _angle(self, vec, box):
        lo = hi = 0.0
        for k, (a, b) in zip(vec, box):
            if k > 0:
                lo, hi = lo + k * a, hi + k * b
            elif k < 0:
                lo, hi = lo + k * b, hi + k * a
        # box endpoints are dyadic with few bits, so these sums are exact
        return lo, hi

    def natural(self, box):
        re = (0.0, 0.0)
        im = (0.0, 0.0)
        for c, vec in self.terms:
            lo, hi = self._angle(vec, box)
            re = _iv_add(re, _iv_scale(c, _cos_iv(lo, hi)))
            im = _iv_add(im, _iv_scale(c, _sin_iv(lo, hi)))
        return re, im

    def centered(self, box):
        """Mean-value form around the box center."""
        mid = [(a + b) / 2 for a, b in box]
        point = [(m, m) for m in mid]
        re, im = self.natural(point)
        for j, (a, b) in enumerate(box):
            rad = (b - a) / 2
            if rad == 0:
                continue
            dre = (0.0, 0.0)
            dim = (0.0, 0.0)
            for c, vec in self.terms:
                k = vec[j]
                if not k:
                    continue
                lo, hi = self._angle(vec, box)
                w = math.copysign(_up(abs(c * k) * TWO_PI), c * k)
                # d/dtheta of c e^{2 pi i k.theta} = 2 pi i c k e^{...}
                dre = _iv_add(dre, _iv_scale(-w, _sin_iv(lo, hi)))
                dim = _iv_add(dim, _iv_scale(w, _cos_iv(lo, hi)))
            r = (-rad, rad)
            re = _iv_add(re, _iv_mul(dre, r))
            im = _iv_add(im, _iv_mul(dim, r))
        return re, im


def _excludes(iv) -> bool:
    return iv[0] > 0 or iv[1] < 0


def box_excluded_by(poly: CompiledPoly, box) -> bool:
    for form in (poly.natural, poly.centered):
        re, im = form(box)
        if _excludes(re) or _excludes(im):
            return True
    return False


def _split(box):
    widths = [b - a for a, b in box]
    j = max(range(len(box)), key=lambda i: (widths[i], -i))
    a, b = box[j]
    m = (a + b) / 2
    left = list(box)
    right = list(box)
    left[j] = (a, m)
    right[j] = (m, b)
    return tuple(left), tuple(right)


@dataclass
class CoverResult:
    status: str                 # "empty" | "open"
    tree: list = field(default_factory=list)
    open_boxes: list = field(default_factory=list)
    boxes_used: int = 0
    reason: str = ""


def branch_and_bound(gens: Sequence[LaurentPoly], variables: Sequence[int],
                     budget: int = 10 ** 6, max_depth: int = 40,
                     max_open: int = 64) -> CoverResult:
    polys = [CompiledPoly(f, variables) for f in gens]
    root = tuple((0.0, 1.0) for _ in variables)
    tree: list[int] = []
    open_boxes: list = []
    stack = [(root, 0)]
    used = 0
    exhausted = False
    while stack:
        box, depth = stack.pop()
        used += 1
        if exhausted:
            tree.append(OPEN)
            open_boxes.append(box)
            continue
        hit = next((k for k, p in enumerate(polys) if box_excluded_by(p, box)), None)
        if hit is not None:
            tree.append(hit)
            continue
        if depth >= max_depth or used >= budget or len(open_boxes) >= max_open:
            tree.append(OPEN)
            open_boxes.append(box)
            if used >= budget or len(open_boxes) >= max_open:
                exhausted = True
            continue
        tree.append(SPLIT)
        left, right = _split(box)
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    if not open_boxes:
        return CoverResult("empty", tree, [], used)
    if not exhausted:
        reason = f"depth limit {max_depth} reached"
    elif used >= budget:
        reason = "box budget exhausted"
    else:
        reason = f"{max_open} boxes could not be excluded"
    return CoverResult("open", tree, open_boxes, used, reason)


def replay_cover(gens: Sequence[LaurentPoly], variables: Sequence[int], tree: Sequence[int]) -> bool:
    """Rebuild the boxes from the preorder record and recheck every leaf."""
    polys = [CompiledPoly(f, variables) for f in gens]
    stack = [tuple((0.0, 1.0) for _ in variables)]
    for node in tree:
        if not stack:
            return False
        box = stack.pop()
        if node == SPLIT:
            left, right = _split(box)
            stack.append(right)
            stack.append(left)
        elif node == OPEN:
            return False
        elif not (0 <= node < len(polys) and box_excluded_by(polys[node], box)):
            return False
    return not stack


def snap_turns(x: float, max_den: int = 60) -> Fraction:
    return Fraction(x).limit_denominator(max_den) % 1


def box_center(box) -> list[float]:
    return [(a + b) / 2 for a, b in box]
