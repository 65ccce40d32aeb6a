"""Expansiveness verdicts for cyclic and finitely generated modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..presentations import IdealSpec, ModuleSpec, prune_free_variables
from .torus import UNITAL, EngineConfig, TorusResult, replay_certificate, torus_intersection
from .witness import TorusWitness, WitnessError, verify_witness

EXPANSIVE = "expansive"
NON_EXPANSIVE = "non_expansive"
UNKNOWN = "unknown"


@dataclass
class Verdict:
    status: str
    certificates: list = field(default_factory=list)   # one per annihilator when expansive
    witness: TorusWitness | None = None
    violated: int | None = None                        # annihilator index for a witness
    reason: str = ""
    budget: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)
    assumptions: tuple = (UNITAL,)

    @property
    def expansive(self) -> bool:
        return self.status == EXPANSIVE

    @property
    def non_expansive(self) -> bool:
        return self.status == NON_EXPANSIVE

    @property
    def unknown(self) -> bool:
        return self.status == UNKNOWN

    def as_dict(self) -> dict:
        out = {"verdict": self.status, "assumptions": list(self.assumptions)}
        if self.expansive:
            out["evidence"] = {"certificates": self.certificates}
        elif self.non_expansive:
            out["evidence"] = {"witness": self.witness.as_dict()}
            if self.violated is not None:
                out["evidence"]["annihilator"] = self.violated
        else:
            out["evidence"] = {"reason": self.reason, "budget": self.budget,
                               "candidates": [c.as_dict() for c in self.candidates]}
        return out


def decide_cyclic(ideal: IdealSpec, config: EngineConfig | None = None) -> Verdict:
    """Verdict for the cyclic module Z[Lambda]/ideal."""
    pruned, free = prune_free_variables(ideal)
    res: TorusResult = torus_intersection(pruned, config)
    if res.empty:
        return Verdict(EXPANSIVE, certificates=[res.certificate])
    if res.nonempty:
        w = res.witness.extended({v: 1 for v in free if v not in res.witness.assignments})
        try:
            ok = verify_witness(ideal.generators, w)
        except WitnessError as exc:
            return Verdict(UNKNOWN, reason=f"witness check failed: {exc}")
        if not ok:
            return Verdict(UNKNOWN, reason="internal witness did not verify")
        return Verdict(NON_EXPANSIVE, witness=w, violated=0)
    return Verdict(UNKNOWN, reason=res.reason, budget=res.budget, candidates=res.candidates)


def decide_module(spec: ModuleSpec, config: EngineConfig | None = None) -> Verdict:
    """Expansive iff every annihilator is; the first witness found otherwise."""
    cache: dict = {}
    certs = []
    unknown: Verdict | None = None
    for k, ideal in enumerate(spec.annihilators):
        key = frozenset(ideal.generators)
        if key not in cache:
            cache[key] = decide_cyclic(ideal, config)
        v = cache[key]
        if v.non_expansive:
            return Verdict(NON_EXPANSIVE, witness=v.witness, violated=k)
        if v.unknown:
            unknown = unknown or Verdict(UNKNOWN, reason=f"annihilator {k}: {v.reason}",
                                         budget=v.budget, candidates=v.candidates)
        else:
            certs.append(v.certificates[0])
    if unknown is not None:
        return unknown
    return Verdict(EXPANSIVE, certificates=certs)


def replay_verdict(verdict: Verdict, spec: ModuleSpec | IdealSpec) -> bool:
    """Recheck the evidence of a verdict against its input."""
    ideals = spec.annihilators if isinstance(spec, ModuleSpec) else (spec,)
    if verdict.expansive:
        if len(verdict.certificates) != len(ideals):
            return False
        return all(replay_certificate(c, prune_free_variables(i)[0].generators)
                   for c, i in zip(verdict.certificates, ideals))
    if verdict.non_expansive:
        return verify_witness(ideals[verdict.violated].generators, verdict.witness)
    return True


def decide_family(family, config: EngineConfig | None = None, n_max: int = 3) -> Verdict:
    """Verdict for Z[Lambda] modulo the ideal generated by every member of a family.

    A witness must kill f_n for all n, so candidates are checked with the
    family-aware verifier.  Emptiness of a truncation is emptiness of the whole
    ideal, since the truncation generates a smaller ideal.
    """
    from ..presentations import augmentation_poly, family_expand

    if augmentation_poly(family).is_zero():
        w = TorusWitness({}, "all-ones point")
        return Verdict(NON_EXPANSIVE, witness=w, violated=0)
    gens = family_expand(family, n_max)
    ambient = sorted({v for f in gens for v in f.variables()})
    v = decide_cyclic(IdealSpec(tuple(gens), tuple(ambient)), config)
    if v.expansive:
        v.certificates[0] = {"kind": "truncation", "n_max": n_max, "certificate": v.certificates[0]}
        return v
    if v.non_expansive:
        try:
            if verify_witness(family, v.witness):
                return v
        except WitnessError:
            pass
        return Verdict(UNKNOWN, reason=f"witness for the first {n_max} members does not extend to the family")
    return v


def replay_family(verdict: Verdict, family) -> bool:
    from ..presentations import family_expand

    if verdict.non_expansive:
        return verify_witness(family, verdict.witness)
    if verdict.expansive:
        cert = verdict.certificates[0]
        if cert.get("kind") != "truncation":
            return False
        gens = family_expand(family, cert["n_max"])
        ideal = IdealSpec(tuple(gens))
        return replay_certificate(cert["certificate"], prune_free_variables(ideal)[0].generators)
    return True
