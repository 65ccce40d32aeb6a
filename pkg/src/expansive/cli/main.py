"""Command-line front end.

Exit codes: 0 expansive, 1 non-expansive, 2 unknown; 64 usage error,
65 invalid problem file, 66 unreadable input, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from importlib import resources

from .. import dynamics
from ..engine.decide import (Verdict, decide_cyclic, decide_family, decide_module, replay_family,
                             replay_verdict)
from ..engine.torus import EngineConfig
from ..engine.witness import WitnessError, cyclotomic_form, verify_witness
from ..presentations import IdealSpec, family_expand
from ..valuation import (AlgebraicUnitSpec, LinearUnitsSpec, decide_algebraic_unit,
                         decide_linear_units, enumerate_nonexpansive_pairs, replay_algebraic_unit,
                         replay_linear_units)
from .problem import (Problem, ProblemError, cyclic_input, delta_input, generators_input,
                      load_problem, module_spec, witness_input)
from .polyparse import parse_univariate
from .report import validate_report

EXIT = {"expansive": 0, "non_expansive": 1, "unknown": 2}
EX_USAGE, EX_DATAERR, EX_NOINPUT, EX_SOFTWARE = 64, 65, 66, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _config(args, problem: Problem | None = None) -> EngineConfig:
    eng = dict(problem.engine) if problem else {}
    budget = args.budget if args.budget is not None else eng.get("budget", 10 ** 6)
    depth = args.depth if args.depth is not None else eng.get("depth", 40)
    tol = args.tolerance if args.tolerance is not None else eng.get("tolerance", 1e-9)
    if budget < 1 or depth < 1 or tol <= 0:
        raise UsageError("budget, depth and tolerance must be positive")
    return EngineConfig(int(budget), int(depth), float(tol))


# ----------------------------------------------------------------------
# dispatch
# ----------------------------------------------------------------------

def decide_problem(p: Problem, cfg: EngineConfig, args=None) -> tuple[Verdict, dict]:
    """The verdict plus kind-specific extra report fields."""
    extra: dict = {}
    if p.kind == "module":
        return decide_module(module_spec(p), cfg), extra
    if p.kind == "cyclic":
        spec = cyclic_input(p)
        if isinstance(spec, tuple):
            fam, n = spec
            extra["family"] = str(fam)
            return decide_family(fam, cfg, n), extra
        return decide_cyclic(spec, cfg), extra
    if p.kind == "linear-units":
        spec = _linear_spec(p)
        extra["flags"] = spec.flags
        return decide_linear_units(spec), extra
    if p.kind == "algebraic-unit":
        return decide_algebraic_unit(_unit_spec(p)), extra
    if p.kind == "witness-check":
        return _witness_check(p), extra
    return _simulate(p, cfg, args, extra), extra


def _linear_spec(p: Problem) -> LinearUnitsSpec:
    try:
        return LinearUnitsSpec(tuple(map(tuple, p.data["H"])), tuple(map(tuple, p.data["G"])),
                               bool(p.data.get("include_t", True)))
    except ValueError as exc:
        raise ProblemError(f"{p.source}: {exc}") from None


def _unit_spec(p: Problem) -> AlgebraicUnitSpec:
    try:
        return AlgebraicUnitSpec(parse_univariate(p.data["minpoly"]))
    except ValueError as exc:
        raise ProblemError(f"{p.source}: {exc}") from None


def _witness_check(p: Problem) -> Verdict:
    gens = generators_input(p)
    target = gens[0] if isinstance(gens, tuple) else gens
    w = witness_input(p, required=True)
    try:
        ok = verify_witness(target, w)
    except WitnessError as exc:
        raise ProblemError(f"{p.source}: {exc}") from None
    if ok:
        return Verdict("non_expansive", witness=w, violated=0)
    return Verdict("unknown", reason="the witness does not lie on the torus or does not kill every generator")


def _simulate(p: Problem, cfg: EngineConfig, args, extra: dict) -> Verdict:
    src = generators_input(p)
    if isinstance(src, tuple):
        fam, n = src
        gens = family_expand(fam, n)
    else:
        fam, gens = None, src
    w = witness_input(p, required=False)
    if w is None:
        v = decide_family(fam, cfg, n) if fam is not None else decide_cyclic(IdealSpec(tuple(gens)), cfg)
        if not v.non_expansive:
            extra["simulation"] = {"skipped": "no torus witness to simulate"}
            return v
        w = v.witness
    factor = int(p.data.get("factor", 10))
    const = dynamics.expansiveness_constant(gens, factor)
    if args is not None and args.delta is not None:
        delta = Fraction(args.delta)
    elif "delta" in p.data:
        delta = delta_input(p)
    else:
        delta = const.epsilon / 2
    N = args.window if args is not None and args.window is not None else p.data.get("window", 100)
    try:
        window = dynamics.Window.for_generators(gens, N)
        seq = dynamics.build_witness_sequence(gens, w, delta, window, factor)
    except (ValueError, WitnessError) as exc:
        raise ProblemError(f"{p.source}: {exc}") from None
    rep = dynamics.confirm(gens, seq, cfg.tolerance)
    extra["simulation"] = {"K": const.K, "epsilon": str(const.epsilon), "delta": str(delta),
                           "window": N, "variables": [f"x{v}" for v in window.variables],
                           "sup_norm": seq.sup_norm, **rep.as_dict()}
    if args is not None and getattr(args, "export", None):
        with open(args.export, "w") as fh:
            fh.write(seq.to_text())
    certified = rep.max_residual <= cfg.tolerance or \
        (rep.rounding_bound is not None and rep.rounding_bound <= cfg.tolerance)
    if certified and seq.sup_norm <= float(const.epsilon):
        return Verdict("non_expansive", witness=w, violated=0)
    return Verdict("unknown", reason=f"residual {rep.max_residual:.3g} above tolerance")


def replay_problem(p: Problem, verdict: Verdict, cfg: EngineConfig) -> bool:
    if p.kind == "module":
        return replay_verdict(verdict, module_spec(p))
    if p.kind == "cyclic":
        spec = cyclic_input(p)
        if isinstance(spec, tuple):
            return replay_family(verdict, spec[0])
        return replay_verdict(verdict, spec)
    if p.kind == "linear-units":
        return replay_linear_units(verdict, _linear_spec(p))
    if p.kind == "algebraic-unit":
        return replay_algebraic_unit(verdict, _unit_spec(p))
    if verdict.non_expansive:
        gens = generators_input(p)
        return verify_witness(gens[0] if isinstance(gens, tuple) else gens, verdict.witness)
    return True


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------

def _jsonable(obj):
    return json.loads(json.dumps(obj, default=str))


def verdict_report(command: str, p: Problem, v: Verdict, extra: dict, cfg: EngineConfig,
                   seconds: float) -> dict:
    if v.witness is not None and hasattr(v.witness, "assignments"):
        v.witness = cyclotomic_form(v.witness)
    body = v.as_dict()
    rep = {"command": command, "kind": p.kind, "name": p.name or p.source,
           "verdict": body["verdict"], "evidence": body["evidence"],
           "assumptions": body["assumptions"], "engine": cfg.as_dict(),
           "timing": {"seconds": round(seconds, 6)}}
    rep.update(extra)
    if p.expect is not None:
        rep["expected"] = p.expect
        rep["matches_expected"] = p.expect == rep["verdict"]
    return _jsonable(rep)


def _emit(report: dict, pretty: bool = True) -> None:
    validate_report(report)
    sys.stdout.write(json.dumps(report, indent=2 if pretty else None, sort_keys=True) + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc.strerror}") from None


def cmd_decide(args, command: str = "decide") -> int:
    return _run(load_problem(_read(args.file), args.file), args, command)


def _run(p: Problem, args, command: str) -> int:
    cfg = _config(args, p)
    t = time.perf_counter()
    v, extra = decide_problem(p, cfg, args)
    if command == "verify":
        extra["replayed"] = bool(replay_problem(p, v, cfg))
    rep = verdict_report(command, p, v, extra, cfg, time.perf_counter() - t)
    _emit(rep)
    if command == "verify" and not extra["replayed"]:
        print("evidence failed to replay", file=sys.stderr)
        return EX_SOFTWARE
    return EXIT[rep["verdict"]]


def cmd_simulate(args) -> int:
    p = load_problem(_read(args.file), args.file)
    if p.kind not in ("simulate", "cyclic"):
        raise ProblemError(f"{args.file}: simulate needs a problem of kind 'simulate' or 'cyclic'")
    if p.kind == "cyclic":
        spec = cyclic_input(p)
        data = {"family": p.data["family"], "truncation": spec[1]} if isinstance(spec, tuple) \
            else {"generators": p.data["annihilator"]}
        p = Problem("simulate", data, p.name, p.expect, p.engine, p.source)
    return _run(p, args, "simulate")


def cmd_enumerate(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    t = time.perf_counter()
    pairs = enumerate_nonexpansive_pairs(args.bound)
    fam = {(a, b) for a in range(-args.bound, args.bound + 1) if a
           for b in range(-args.bound, args.bound + 1)
           if a in (b + 1, -(b + 1), b - 1, -(b - 1), b, -b)}
    rep = {"command": "enumerate-quartic", "bound": args.bound,
           "pairs": [list(x) for x in pairs], "count": len(pairs),
           "matches_families": set(pairs) == fam,
           "timing": {"seconds": round(time.perf_counter() - t, 6)}}
    _emit(rep)
    return 0


def fixture_names() -> list[str]:
    root = resources.files("expansive.cli").joinpath("fixtures")
    return sorted(f.name[:-5] for f in root.iterdir() if f.name.endswith(".toml"))


def fixture_text(name: str) -> str:
    return resources.files("expansive.cli").joinpath("fixtures", f"{name}.toml").read_text("utf-8")


def run_fixtures(names=None, cfg: EngineConfig | None = None) -> list[dict]:
    cfg = cfg or EngineConfig()
    rows = []
    for name in names or fixture_names():
        p = load_problem(fixture_text(name), name)
        t = time.perf_counter()
        v, _ = decide_problem(p, cfg)
        replayed = replay_problem(p, v, cfg)
        rows.append({"name": name, "kind": p.kind, "expected": p.expect, "verdict": v.status,
                     "replayed": bool(replayed),
                     "passed": v.status == p.expect and bool(replayed),
                     "seconds": round(time.perf_counter() - t, 6)})
    return rows


def cmd_fixtures(args) -> int:
    cfg = _config(args)
    names = args.only or None
    if names:
        missing = set(names) - set(fixture_names())
        if missing:
            raise UsageError(f"unknown fixture(s): {', '.join(sorted(missing))}")
    rows = run_fixtures(names, cfg)
    ok = all(r["passed"] for r in rows)
    for r in rows:
        print(f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']:<28} expected {r['expected']:<14}"
              f" got {r['verdict']:<14} {r['seconds']:.3f}s", file=sys.stderr)
    _emit({"command": "fixtures", "fixtures": rows, "all_passed": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="expansive", description="Decide expansiveness of algebraic actions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def engine_flags(sp):
        sp.add_argument("--budget", type=int, help="box budget for branch and bound (default 1000000)")
        sp.add_argument("--depth", type=int, help="branch-and-bound depth limit (default 40)")
        sp.add_argument("--tolerance", type=float, help="residual tolerance (default 1e-9)")
        sp.add_argument("--window", type=int, help="simulation window half-width N (default 100)")
        sp.add_argument("--delta", type=str, help="simulation amplitude, e.g. 1/60 (default epsilon/2)")

    for name, helptext in (("decide", "decide a problem file"),
                           ("verify", "decide a problem file and replay its evidence"),
                           ("simulate", "build and check a witness sequence")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        engine_flags(sp)
        if name == "simulate":
            sp.add_argument("--export", help="write the sequence in the text format to this path")
    sp = sub.add_parser("enumerate-quartic", help="list (a, b) with a nonpositive quartic discriminant")
    sp.add_argument("--bound", type=int, required=True)
    sp = sub.add_parser("fixtures", help="run the bundled fixtures")
    sp.add_argument("--only", nargs="*", help="fixture names to run")
    engine_flags(sp)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("decide", "verify"):
            return cmd_decide(args, args.command)
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "enumerate-quartic":
            return cmd_enumerate(args)
        return cmd_fixtures(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ProblemError as exc:
        print(f"invalid problem: {exc}", file=sys.stderr)
        return EX_DATAERR
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EX_NOINPUT
    except (ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
