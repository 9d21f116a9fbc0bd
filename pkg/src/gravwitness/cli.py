"""Command-line surface: phases, state, witness, constraints, decoherence,
field-model demonstration, parameter sweeps and the default configuration.

Exit codes: 0 success, 1 computation/infeasibility error, 2 usage or
configuration error.  Results go to standard output (or --out) in json, csv
or table form; diagnostics go to standard error.  Identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys

from . import constraints as constraints_mod
from . import decoherence as decoherence_mod
from . import gravfield, gravphase, spinstate, sweep as sweep_mod
from .core import (ConfigError, ExperimentConfig, RegimeError, config_from_dict,
                   config_to_dict, load_config, paper_defaults, validate)


class CliUsageError(Exception):
    pass


# ---------------------------------------------------------------- rendering

def _flat_items(obj, prefix=""):
    """Depth-first (key, scalar) pairs with dotted paths."""
    if isinstance(obj, dict):
        out = []
        for key, value in obj.items():
            out.extend(_flat_items(value, f"{prefix}{key}."))
        return out
    if isinstance(obj, (list, tuple)):
        out = []
        for i, value in enumerate(obj):
            out.extend(_flat_items(value, f"{prefix}{i}."))
        return out
    return [(prefix[:-1], obj)]


def _fmt_scalar(value, sig=12):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{sig}g}"
    return str(value)


def render_payload(payload, fmt: str) -> str:
    """One serialization layer shared by every subcommand."""
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    rows = payload if isinstance(payload, list) else None
    if rows is not None:
        header = list(rows[0].keys()) if rows else []
        table = [[_fmt_scalar(r.get(k, "")) for k in header] for r in rows]
    else:
        flat = _flat_items(payload)
        header = ["key", "value"]
        table = [[k, _fmt_scalar(v)] for k, v in flat]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        return buf.getvalue()
    widths = [max(len(str(h)), *(len(row[i]) for row in table)) if table
              else len(str(h)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
              for row in table]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ config loading

def _parse_overrides(pairs) -> dict:
    overrides = {}
    for item in pairs or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise CliUsageError(f"--set expects key=value, got {item!r}")
        try:
            overrides[key] = float(value)
        except ValueError:
            raise CliUsageError(f"--set {key}: value {value!r} is not a number") from None
    return overrides


def _build_config(args) -> ExperimentConfig:
    if args.config and args.paper_defaults:
        raise CliUsageError("--config and --paper-defaults are mutually exclusive")
    base = load_config(args.config) if args.config else validate(paper_defaults())
    overrides = _parse_overrides(args.set)
    if overrides:
        return config_from_dict(overrides, base=base)
    return base


# ---------------------------------------------------------------- commands

def _cmd_defaults(args):
    return config_to_dict(paper_defaults())


def _cmd_phases(args):
    cfg = _build_config(args)
    phases = gravphase.static_phases(cfg)
    payload = dataclasses.asdict(phases)
    payload["separations"] = gravphase.pairwise_separations(cfg)
    payload["mutualAcceleration"] = gravphase.mutual_acceleration(cfg)
    if cfg.dx / cfg.d < 0.1:
        payload["smallSplitPhase"] = gravphase.small_split_phase(cfg)
    if args.dynamic_steps:
        payload["dynamic"] = dataclasses.asdict(
            gravphase.dynamic_phases(cfg, args.dynamic_steps))
    return payload


def _cmd_state(args):
    cfg = _build_config(args)
    phases = gravphase.static_phases(cfg)
    state = spinstate.entangled_state(phases.dPhiLR, phases.dPhiRL)
    return {
        "dPhiLR": phases.dPhiLR,
        "dPhiRL": phases.dPhiRL,
        "negativity": spinstate.negativity(state),
        "purity": state.purity(),
        "rhoRe": [[float(x) for x in row] for row in state.rho.real],
        "rhoIm": [[float(x) for x in row] for row in state.rho.imag],
    }


def _cmd_witness(args):
    cfg = _build_config(args)
    phases = gravphase.static_phases(cfg)
    state = spinstate.entangled_state(phases.dPhiLR, phases.dPhiRL)
    default = spinstate.witness(state)
    settings, optimized = spinstate.optimize_witness(state)
    report = constraints_mod.feasibility_report(cfg)
    payload = {
        "dPhiLR": phases.dPhiLR,
        "dPhiRL": phases.dPhiRL,
        "w": default.w,
        "expXZ": default.expXZ,
        "expYZ": default.expYZ,
        "wOptimized": optimized.w,
        "thetaZ1Optimized": settings.thetaZ1,
        "negativity": default.negativity,
        "entangledByNegativity": default.entangledByNegativity,
        "feasibility": {
            "feasible": report.feasible,
            "cpRatio": report.cpRatio,
            "reasons": list(report.reasons),
        },
    }
    try:
        budget = decoherence_mod.dephasing_budget(cfg)
        dephased = spinstate.apply_dephasing(
            state, budget.totalDephasing, budget.totalDephasing)
        payload["totalDephasing"] = budget.totalDephasing
        payload["wDephased"] = spinstate.witness(dephased).w
        payload["negativityDephased"] = spinstate.negativity(dephased)
    except RegimeError as err:
        payload["dephasingRegimeError"] = str(err)
    return payload


def _cmd_constraints(args):
    cfg = _build_config(args)
    report = constraints_mod.feasibility_report(
        cfg, targetRatio=args.target_ratio, bResidual=args.b_residual)
    payload = dataclasses.asdict(report)
    payload["reasons"] = list(report.reasons)
    return payload


def _cmd_decoherence(args):
    cfg = _build_config(args)
    budget = decoherence_mod.dephasing_budget(cfg)
    payload = dataclasses.asdict(budget)
    payload["experimentDuration"] = cfg.tau + 2.0 * cfg.tauAcc
    payload["gasDeBroglieWavelength"] = decoherence_mod.gas_de_broglie_wavelength(cfg)
    payload["thermalWavelength"] = decoherence_mod.thermal_wavelength(cfg.tEnv)
    return payload


def _cmd_field(args):
    cfg = _build_config(args)
    separation = args.separation if args.separation else cfg.d - cfg.dx
    t = args.time if args.time else cfg.tau
    target = gravfield.newtonian_phase(cfg, separation, t)
    steps = []
    n = max(2, args.n_modes // 16)
    while n < args.n_modes:
        steps.append(n)
        n *= 2
    steps.append(args.n_modes)
    convergence = []
    for n_modes in steps:
        modes = gravfield.modes_for_separation(separation, nModes=n_modes,
                                               kCutTimesR=args.k_cut_times_r)
        phase = gravfield.branch_phase(modes, cfg, separation, t)
        convergence.append({"nModes": n_modes, "phase": phase,
                            "newtonian": target, "ratio": phase / target})

    modes = gravfield.modes_for_separation(separation, nModes=args.n_modes,
                                           kCutTimesR=args.k_cut_times_r)
    branches = gravfield.branch_displacement_set(modes, cfg, t)
    quantum = gravfield.reduced_mass_state(branches)
    classical = gravfield.classicalize(branches)
    overlaps = [abs(gravfield.branch_overlap(branches[a], branches[b]))
                for a in gravphase.BRANCHES for b in gravphase.BRANCHES if a < b]
    phases = gravphase.static_phases(cfg)
    spin_reference = spinstate.negativity(
        spinstate.entangled_state(phases.dPhiLR, phases.dPhiRL))
    return {
        "separation": separation,
        "time": t,
        "convergence": convergence,
        "minOverlapMagnitude": min(overlaps),
        "negativityQuantum": spinstate.negativity(quantum),
        "negativityClassicalized": spinstate.negativity(classical),
        "negativitySpinstateReference": spin_reference,
    }


def _parse_axis(text: str) -> sweep_mod.SweepAxis:
    parts = text.split(":")
    if len(parts) not in (4, 5):
        raise CliUsageError(
            f"--axis expects name:min:max:count[:log|linear], got {text!r}")
    name, lo, hi, count = parts[:4]
    spacing = parts[4] if len(parts) == 5 else "linear"
    try:
        return sweep_mod.SweepAxis(name=name, min=float(lo), max=float(hi),
                                   count=int(count), spacing=spacing)
    except ValueError as err:
        raise CliUsageError(f"--axis {text!r}: {err}") from None


def _cmd_sweep(args):
    if not args.axis:
        raise CliUsageError("sweep needs at least one --axis")
    axes = tuple(_parse_axis(a) for a in args.axis)
    try:
        spec = sweep_mod.SweepSpec(axes=axes, objective=args.objective,
                                   cpRatioMax=args.cp_ratio_max,
                                   requireTauCollOver=args.tau_coll_over)
    except ValueError as err:
        raise CliUsageError(str(err)) from None
    cfg = _build_config(args)
    if args.maximize:
        best_config, best_row = sweep_mod.maximize(spec, cfg)
        return {
            "bestParams": best_row.params,
            "objective": best_row.objective,
            "row": {**best_row.params, "dPhiLR": best_row.dPhiLR,
                    "dPhiRL": best_row.dPhiRL, "objective": best_row.objective,
                    "cpRatio": best_row.cpRatio, "tauColl": best_row.tauColl,
                    "feasible": best_row.feasible},
            "config": config_to_dict(best_config),
        }
    result = sweep_mod.run_sweep(spec, cfg)
    if args.format == "csv":
        return result
    return [
        {**{a.name: row.params[a.name] for a in spec.axes},
         "dPhiLR": row.dPhiLR, "dPhiRL": row.dPhiRL, "objective": row.objective,
         "cpRatio": row.cpRatio, "tauColl": row.tauColl,
         "feasible": row.feasible, "reason": row.reason}
        for row in result.rows
    ]


# -------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravwitness",
        description="Gravitationally induced entanglement: phases, witness, "
                    "feasibility and parameter search.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="path to a flat JSON config")
        p.add_argument("--paper-defaults", action="store_true",
                       help="use the built-in reference scenario")
        p.add_argument("--format", choices=("json", "csv", "table"),
                       default="json")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config field (repeatable)")
        p.add_argument("--out", help="write output to a file instead of stdout")

    add_common(sub.add_parser("defaults", help="print the default config"))

    p = sub.add_parser("phases", help="branch phases and differentials")
    add_common(p)
    p.add_argument("--dynamic-steps", type=int, default=0,
                   help="also integrate phases over split/hold/recombine "
                        "with this many panels per stage")

    add_common(sub.add_parser("state", help="post-interferometer two-spin state"))
    add_common(sub.add_parser("witness", help="witness, optimized witness, negativity"))

    p = sub.add_parser("constraints", help="Casimir-Polder / magnetic feasibility")
    add_common(p)
    p.add_argument("--target-ratio", type=float, default=0.1)
    p.add_argument("--b-residual", type=float, default=0.0)

    add_common(sub.add_parser("decoherence", help="collisional and thermal budget"))

    p = sub.add_parser("field", help="field-mode convergence and classicalization")
    add_common(p)
    p.add_argument("--n-modes", type=int, default=4000)
    p.add_argument("--k-cut-times-r", type=float, default=2e3)
    p.add_argument("--separation", type=float, default=0.0,
                   help="branch separation (default: d - dx)")
    p.add_argument("--time", type=float, default=0.0,
                   help="interaction time (default: tau)")

    p = sub.add_parser("sweep", help="grid sweep / constrained maximization")
    add_common(p)
    p.add_argument("--axis", action="append", metavar="NAME:MIN:MAX:COUNT[:SPACING]")
    p.add_argument("--objective", choices=sweep_mod.OBJECTIVES,
                   default="negativity")
    p.add_argument("--cp-ratio-max", type=float, default=0.1)
    p.add_argument("--tau-coll-over", type=float, default=1.0)
    p.add_argument("--maximize", action="store_true",
                   help="refine the best feasible grid point")
    return parser


_COMMANDS = {
    "defaults": _cmd_defaults,
    "phases": _cmd_phases,
    "state": _cmd_state,
    "witness": _cmd_witness,
    "constraints": _cmd_constraints,
    "decoherence": _cmd_decoherence,
    "field": _cmd_field,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _COMMANDS[args.command](args)
    except (CliUsageError, ConfigError, FileNotFoundError,
            json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (RegimeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    if isinstance(payload, sweep_mod.SweepResult):
        text = payload.to_csv()
    else:
        text = render_payload(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
