"""Points of the dual system on finite windows.

A point of the dual of Z[Lambda]/a is a family x = (x_l) in R/Z indexed by
exponent vectors l, subject to sum_l c_l(f) x_{l+m} = 0 mod 1 for every
generator f and every shift m.  A torus witness z gives the small point
x_l = delta * Re(z^l), for which each of those sums is exactly 0 in R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .engine.witness import TorusWitness, WitnessError, to_complex, verify_witness
from .presentations import LaurentPoly

DEFAULT_POINT_BUDGET = 10 ** 7
UNIT_ROUNDOFF = 2.0 ** -53


@dataclass(frozen=True)
class Window:
    """The hypercube [-N, N]^d over the listed variables."""

    variables: tuple
    N: int
    budget: int = DEFAULT_POINT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(sorted(set(self.variables))))
        if self.N < 1:
            raise ValueError("window half-width N must be >= 1")
        if self.size > self.budget:
            raise ValueError(f"window has {self.size} points, above the budget {self.budget}")

    @classmethod
    def for_generators(cls, generators: Sequence[LaurentPoly], N: int, **kw) -> "Window":
        vs = set()
        for f in generators:
            vs |= f.variables()
        return cls(tuple(vs), N, **kw)

    @property
    def dim(self) -> int:
        return len(self.variables)

    @property
    def shape(self) -> tuple:
        return (2 * self.N + 1,) * self.dim

    @property
    def size(self) -> int:
        return (2 * self.N + 1) ** len(set(self.variables))

    def axis(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)


@dataclass(frozen=True)
class ExpansivenessConstant:
    K: int
    epsilon: Fraction
    factor: int = 10


def expansiveness_constant(generators: Sequence[LaurentPoly], factor: int = 10) -> ExpansivenessConstant:
    """K = max coefficient 1-norm, epsilon = 1/(factor*K)."""
    if not generators:
        raise ValueError("expansiveness_constant needs at least one generator")
    K = max(f.one_norm() for f in generators)
    if K == 0:
        raise ValueError("all generators are zero")
    return ExpansivenessConstant(K, Fraction(1, factor * K), factor)


def reduce_mod_one(x: np.ndarray) -> np.ndarray:
    """Representatives in (-1/2, 1/2]."""
    r = x - np.round(x)
    return np.where(r <= -0.5, r + 1.0, r)


@dataclass
class WitnessSequence:
    window: Window
    values: np.ndarray
    delta: Fraction
    source: TorusWitness | None = None
    angles: dict = field(default_factory=dict)

    @property
    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def value(self, l: Sequence[int]) -> float:
        return float(self.values[tuple(k + self.window.N for k in l)])

    def to_text(self) -> str:
        """Header lines, then one ``l_1 ... l_d value`` row per lattice point."""
        w = self.window
        lines = [f"# variables: {' '.join(f'x{v}' for v in w.variables)}",
                 f"# N: {w.N}",
                 f"# delta: {self.delta}",
                 "# theta: " + " ".join(f"x{v}={self.angles.get(v, 0.0):.15g}" for v in w.variables)]
        axis = w.axis()
        for idx in np.ndindex(*w.shape):
            l = " ".join(str(axis[i]) for i in idx)
            lines.append(f"{l} {self.values[idx]:.12f}")
        return "\n".join(lines) + "\n"


def parse_sequence_text(text: str) -> WitnessSequence:
    header = {}
    rows = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            header[key.strip()] = val.strip()
        elif line.strip():
            rows.append(line.split())
    variables = tuple(int(t[1:]) for t in header["variables"].split())
    w = Window(variables, int(header["N"]))
    vals = np.zeros(w.shape)
    for r in rows:
        idx = tuple(int(k) + w.N for k in r[:-1])
        vals[idx] = float(r[-1])
    angles = {}
    for item in header.get("theta", "").split():
        k, _, v = item.partition("=")
        angles[int(k[1:])] = float(v)
    return WitnessSequence(w, vals, Fraction(header["delta"]), None, angles)


def build_witness_sequence(generators: Sequence[LaurentPoly], witness: TorusWitness,
                           delta, window: Window, factor: int = 10) -> WitnessSequence:
    delta = Fraction(delta)
    eps = expansiveness_constant(generators, factor).epsilon
    if delta > eps:
        raise ValueError(f"delta {delta} exceeds epsilon {eps}")
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not verify_witness(list(generators), witness):
        raise WitnessError("witness fails verification")
    angles = {}
    for v in window.variables:
        z = to_complex(witness.value(v))
        angles[v] = math.atan2(z.imag, z.real)
    axis = window.axis().astype(float)
    phase = np.zeros(window.shape)
    for j, v in enumerate(window.variables):
        shape = [1] * window.dim
        shape[j] = -1
        phase = phase + angles[v] * axis.reshape(shape)
    values = reduce_mod_one(float(delta) * np.cos(phase))
    return WitnessSequence(window, values, delta, witness, angles)


@dataclass
class ResidualReport:
    max_residual: float
    per_generator: list
    shifts_checked: int
    rounding_bound: float | None = None

    def as_dict(self) -> dict:
        return {"max_residual": self.max_residual, "per_generator": self.per_generator,
                "shifts_checked": self.shifts_checked, "rounding_bound": self.rounding_bound}


def _support_slices(f: LaurentPoly, window: Window):
    pos = {v: j for j, v in enumerate(window.variables)}
    missing = f.variables() - set(pos)
    if missing:
        raise ValueError(f"generator {f} uses variables outside the window: {sorted(missing)}")
    d = window.dim
    vecs = []
    for e, c in f.terms.items():
        vec = [0] * d
        for v, k in e:
            vec[pos[v]] = k
        vecs.append((c, vec))
    lo = [min(vec[j] for _, vec in vecs) for j in range(d)]
    hi = [max(vec[j] for _, vec in vecs) for j in range(d)]
    counts = [2 * window.N - (hi[j] - lo[j]) + 1 for j in range(d)]
    if any(n <= 0 for n in counts):
        raise ValueError(f"window N={window.N} too small for generator {f}")
    out = []
    for c, vec in vecs:
        sl = tuple(slice(vec[j] - lo[j], vec[j] - lo[j] + counts[j]) for j in range(d))
        out.append((c, sl))
    return out, int(np.prod(counts)) if counts else 1


def check_relations(values: np.ndarray, window: Window, generators: Sequence[LaurentPoly],
                    tolerance: float = 1e-9) -> ResidualReport:
    """Max over generators and admissible shifts of the distance of sum c_l x_{l+m} to Z."""
    worst = 0.0
    per = []
    total = 0
    for f in generators:
        slices, count = _support_slices(f, window)
        acc = np.zeros(())
        for c, sl in slices:
            acc = acc + float(c) * values[sl]
        res = float(np.max(np.abs(acc - np.round(acc)))) if np.size(acc) else 0.0
        per.append(res)
        worst = max(worst, res)
        total += count
    return ResidualReport(worst, per, total)


def rounding_bound(generators: Sequence[LaurentPoly], seq: WitnessSequence) -> float:
    """A priori bound on the floating-point error of every relation sum.

    Each stored value is delta*cos(phase) with the phase a sum of at most d
    products |l_j theta_j| <= N*pi; the error of the argument, of cos and of the
    final combination are all bounded by small multiples of the unit roundoff.
    """
    w = seq.window
    K = max(f.one_norm() for f in generators)
    per_value = float(seq.delta) * UNIT_ROUNDOFF * (4 + 2 * w.dim * (w.N * math.pi + 1))
    return K * per_value + K * UNIT_ROUNDOFF * (len(generators) + 4)


def confirm(generators: Sequence[LaurentPoly], seq: WitnessSequence,
            tolerance: float = 1e-9) -> ResidualReport:
    """check_relations plus the rounding bound when the measured residual is close to tolerance."""
    rep = check_relations(seq.values, seq.window, generators, tolerance)
    if rep.max_residual > tolerance / 10:
        rep.rounding_bound = rounding_bound(generators, seq)
    return rep


def shift_orbit(values: np.ndarray, window: Window, m: Sequence[int]) -> tuple[np.ndarray, Window]:
    """x'_l = x_{l+m} on the window shrunk by max |m_j|."""
    if len(m) != window.dim:
        raise ValueError("shift has the wrong dimension")
    r = max((abs(k) for k in m), default=0)
    if r >= window.N:
        raise ValueError(f"shift {tuple(m)} exceeds the window margin N={window.N}")
    N2 = window.N - r
    sl = tuple(slice(window.N + k - N2, window.N + k + N2 + 1) for k in m)
    return values[sl].copy(), Window(window.variables, N2, window.budget)
