"""Unit-circle counts, torus intersection and module verdicts."""

from .decide import (EXPANSIVE, NON_EXPANSIVE, UNKNOWN, Verdict, decide_cyclic, decide_family,
                     decide_module, replay_family, replay_verdict)
from .torus import EngineConfig, TorusResult, replay_certificate, torus_intersection
from .unit_circle import UnitCircleCount, replay_unit_circle, unit_circle_root_count
from .witness import NumericCandidate, TorusWitness, WitnessError, verify_witness

__all__ = [
    "EXPANSIVE", "NON_EXPANSIVE", "UNKNOWN", "Verdict", "decide_cyclic", "decide_family",
    "decide_module", "replay_family", "replay_verdict", "EngineConfig", "TorusResult",
    "replay_certificate", "torus_intersection", "UnitCircleCount", "replay_unit_circle",
    "unit_circle_root_count", "NumericCandidate", "TorusWitness", "WitnessError", "verify_witness",
]
