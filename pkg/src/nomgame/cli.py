"""Command-line front end.

Exit codes: 0 success, 1 verification discrepancy, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace

from . import analysis, closed_form, fixtures
from .closed_form import EquilibriumOutcome, Game
from .config import ConfigError, RunConfig, load_config, with_flags
from .model import (
    PARAM_FIELDS,
    ElectionResult,
    ModelParams,
    Party,
    Platform,
    expected_median_utility,
    expected_party_utility,
)
from .oracle import GridError, GridSpec, verify_closed_form

EXIT_OK, EXIT_DISCREPANCY, EXIT_CONFIG = 0, 1, 2


def _platform(p: Platform | None):
    return None if p is None else {"policy": p.policy, "rent": p.rent}


def _result(res: ElectionResult) -> dict:
    return {
        "lottery": res.is_lottery,
        "tickets": [{"party": t.party.value, "candidate": t.candidate.value,
                     "policy": t.policy, "rent": t.rent} for t in res.tickets],
    }


def outcome_json(out: EquilibriumOutcome, params: ModelParams) -> dict:
    return {
        "case": str(out.case),
        "offer_l": _platform(out.offer_l),
        "offer_r": _platform(out.offer_r),
        "offer_o": _platform(out.offer_o),
        "result": _result(out.result),
        "winner": out.winner,
        "winning_policy": out.winning_policy,
        "winning_rent": out.winning_rent,
        "xbar": out.xbar,
        "u_median": expected_median_utility(out.result, params),
        "u_partyR": expected_party_utility(Party.R, out.result, params),
    }


def comparison_json(w: analysis.WelfareComparison, tags) -> dict:
    return {
        "u_median_insider": w.u_median_insider,
        "u_median_outsider": w.u_median_outsider,
        "u_partyR_insider": w.u_partyR_insider,
        "u_partyR_outsider": w.u_partyR_outsider,
        "voter_effect": w.voter_effect.value,
        "party_effect": w.party_effect.value,
        "polarization_effect": w.polarization_effect.value,
        "cases": [str(c) for c in w.cases],
        "welfare_tags": list(tags),
    }


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def _need_params(cfg: RunConfig) -> ModelParams:
    if cfg.params is None:
        raise ConfigError(f"this command needs all model parameters: {', '.join(PARAM_FIELDS)}")
    return cfg.params


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_solve(cfg: RunConfig, args) -> int:
    p = _need_params(cfg)
    outs = [closed_form.solve(p, g, cfg.tie_eps) for g in (Game.INSIDER, Game.OUTSIDER)]
    if (cfg.format or "json") == "csv":
        rows = []
        for o in outs:
            d = outcome_json(o, p)
            rows.append([d["case"], d["winner"], analysis.fmt(d["winning_policy"]),
                         analysis.fmt(d["winning_rent"]), analysis.fmt(d["u_median"]),
                         analysis.fmt(d["u_partyR"])])
        _emit(_csv(["case", "winner", "policy", "rent", "u_median", "u_partyR"], rows), cfg)
        return EXIT_OK
    w = analysis.compare_games(p, cfg.tie_eps)
    report = {
        "params": p.to_dict(),
        "V_r": p.V_r,
        "V_o": p.V_o,
        "InsiderOnly": outcome_json(outs[0], p),
        "WithOutsider": outcome_json(outs[1], p),
        "comparison": comparison_json(w, analysis.welfare_reduction_condition(p, cfg.tie_eps)),
    }
    _emit(_dumps(report), cfg)
    return EXIT_OK


def corrupt(out: EquilibriumOutcome, shift: float = 0.5) -> EquilibriumOutcome:
    """Negative control: move every winning R ticket's policy right by ``shift``."""
    tickets = tuple(
        replace(t, platform=Platform(t.policy + shift, t.rent)) if t.party is Party.R else t
        for t in out.result.tickets
    )
    if all(t.party is Party.L for t in tickets):
        tickets = tuple(replace(t, platform=Platform(t.policy - shift, t.rent)) for t in tickets)
    return replace(out, result=ElectionResult(tickets))


def _verify_one(job):
    name, params, cfg, negative_control = job
    grid = GridSpec.default(params, cfg.policy_steps, cfg.rent_steps, cfg.epsilon)
    override = None
    if negative_control:
        override = {g: corrupt(closed_form.solve(params, g, cfg.tie_eps)) for g in Game}
    rep = verify_closed_form(params, grid, cfg.timing, closed=override, tie_eps=cfg.tie_eps)
    return name, rep, closed_form.boundary_distance(params), grid.policy_step


def cmd_verify(cfg: RunConfig, args) -> int:
    if cfg.params is not None:
        jobs = [("config", cfg.params)]
    elif cfg.seed is not None:
        jobs = [(f"draw{i}", p) for i, p in enumerate(fixtures.random_draws(cfg.seed, cfg.draws))]
    else:
        jobs = []
        for game, i, p in fixtures.all_fixtures():
            jobs.append((f"{game.value}/{i}", p))
    work = [(name, p, cfg, args.negative_control) for name, p in jobs]
    results = analysis.parallel_map(_verify_one, work)
    entries, failed = [], 0
    for name, rep, dist, step in results:
        failed += not rep.ok
        entries.append({
            "instance": name,
            "ok": rep.ok,
            "boundary_distance": dist,
            "near_boundary": dist <= 2 * step,
            "tolerance_policy": rep.tol_policy,
            "tolerance_rent": rep.tol_rent,
            "checks": [{
                "game": c.game.value,
                "case": str(c.closed.case),
                "closed_form": _result(c.closed.result),
                "agree_winner": c.agree_winner,
                "agree_policy": c.agree_policy,
                "agree_rent": c.agree_rent,
                "oracle_equilibria": len(c.oracle.equilibria),
                "diagnostic": c.oracle.diagnostic,
            } for c in rep.checks],
            "discrepancies": rep.discrepancies,
        })
    if (cfg.format or "json") == "csv":
        rows = [[e["instance"], c["game"], c["case"], c["agree_winner"], c["agree_policy"],
                 c["agree_rent"], analysis.fmt(e["tolerance_policy"]),
                 analysis.fmt(e["tolerance_rent"])]
                for e in entries for c in e["checks"]]
        _emit(_csv(["instance", "game", "case", "agree_winner", "agree_policy", "agree_rent",
                    "tol_policy", "tol_rent"], rows), cfg)
    else:
        _emit(_dumps({"timing": cfg.timing, "instances": len(entries), "failed": failed,
                      "results": entries}), cfg)
    for e in entries:
        for d in e["discrepancies"]:
            print(f"discrepancy [{e['instance']}]: {d}", file=sys.stderr)
    return EXIT_DISCREPANCY if failed else EXIT_OK


def _axis(text: str) -> analysis.Axis:
    try:
        name, lo, hi, steps = text.split(":")
        return analysis.Axis(name, float(lo), float(hi), int(steps))
    except ValueError as exc:
        raise ConfigError(f"bad axis {text!r}: expected NAME:LO:HI:STEPS ({exc})") from exc


def cmd_sweep(cfg: RunConfig, args) -> int:
    p = _need_params(cfg)
    a1, a2 = _axis(args.axis1), _axis(args.axis2)
    region = analysis.sweep(p, a1, a2, cfg.tie_eps)
    if (cfg.format or "csv") == "csv":
        _emit(analysis.region_csv(region), cfg)
    else:
        cells = []
        for c in region.cells:
            cell = {"axis1": c.v1, "axis2": c.v2, "feasible": c.feasible}
            if c.feasible:
                cell.update(comparison_json(c.comparison, c.tags))
                cell["WithOutsider"] = outcome_json(c.comparison.outsider,
                                                    analysis.apply_axis(analysis.apply_axis(
                                                        p, a1.name, c.v1), a2.name, c.v2))
            else:
                cell["error"] = c.error
            cells.append(cell)
        _emit(_dumps({"axis1": a1.__dict__, "axis2": a2.__dict__, "cells": cells}), cfg)
    if not any(c.feasible for c in region.cells):
        print("error: every sweep cell is infeasible", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def cmd_regions(cfg: RunConfig, args) -> int:
    reg = analysis.median_voter_indifference_region(args.resolution, args.lo, args.hi, cfg.tie_eps)
    rows = [[analysis.fmt(float(V)), analysis.fmt(float(X)), reg.labels[i][j].value]
            for i, V in enumerate(reg.values) for j, X in enumerate(reg.values)]
    if (cfg.format or "csv") == "csv":
        _emit(_csv(["V", "X", "preference"], rows), cfg)
    else:
        _emit(_dumps([{"V": float(r[0]), "X": float(r[1]), "preference": r[2]} for r in rows]), cfg)
    return EXIT_OK


def cmd_dump_config(cfg: RunConfig, args) -> int:
    _emit(cfg.dump(), cfg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat YAML file of parameters and settings")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="override one config key (repeatable)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--grid-steps", type=int, help="policy grid points for the oracle")
    common.add_argument("--epsilon", type=float, help="rent offset used by the oracle")
    common.add_argument("--tie-eps", type=float, help="tie band for float comparisons")
    common.add_argument("--seed", type=int, help="seed for a randomized verification batch")

    parser = argparse.ArgumentParser(prog="nomgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="closed-form equilibria of both games")
    v = sub.add_parser("verify", parents=[common], help="check the closed form against the grid oracle")
    v.add_argument("--negative-control", action="store_true",
                   help="corrupt the closed-form outcomes; verification must fail")
    s = sub.add_parser("sweep", parents=[common], help="region map over two parameters")
    s.add_argument("--axis1", required=True, metavar="NAME:LO:HI:STEPS")
    s.add_argument("--axis2", required=True, metavar="NAME:LO:HI:STEPS")
    r = sub.add_parser("regions", parents=[common], help="median voter preference over (V, X)")
    r.add_argument("--resolution", type=int, default=21)
    r.add_argument("--lo", type=float, default=-1.0)
    r.add_argument("--hi", type=float, default=1.0)
    sub.add_parser("dump-config", parents=[common], help="print the effective configuration")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "regions": cmd_regions,
    "dump-config": cmd_dump_config,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, args.set)
        cfg = with_flags(cfg, format=args.format, out=args.out, policy_steps=args.grid_steps,
                         epsilon=args.epsilon, tie_eps=args.tie_eps, seed=args.seed)
        return COMMANDS[args.command](cfg, args)
    except (ConfigError, GridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
