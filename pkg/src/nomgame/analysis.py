"""Comparative statics between the insider-only game and the outsider game."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from . import closed_form
from .closed_form import CaseLabel, EquilibriumOutcome
from .model import (
    PARAM_FIELDS,
    TIE_EPS,
    InvalidParams,
    ModelParams,
    Party,
    expected_median_utility,
    expected_party_utility,
)


class Effect(str, Enum):
    NEGATIVE = "Negative"
    NULL = "Null"
    POSITIVE = "Positive"


class Polarization(str, Enum):
    MORE_CENTRIST = "MoreCentrist"
    UNCHANGED = "Unchanged"
    MORE_EXTREME = "MoreExtreme"


def _effect(before: float, after: float, tie_eps: float) -> Effect:
    if before > after + tie_eps:
        return Effect.NEGATIVE
    if after > before + tie_eps:
        return Effect.POSITIVE
    return Effect.NULL


@dataclass(frozen=True)
class WelfareComparison:
    u_median_insider: float
    u_median_outsider: float
    u_partyR_insider: float
    u_partyR_outsider: float
    voter_effect: Effect
    party_effect: Effect
    polarization_effect: Polarization
    cases: tuple[CaseLabel, CaseLabel]
    insider: EquilibriumOutcome
    outsider: EquilibriumOutcome

    def labels(self) -> tuple[str, str, str]:
        return self.voter_effect.value, self.party_effect.value, self.polarization_effect.value


def compare_games(params: ModelParams, tie_eps: float = TIE_EPS) -> WelfareComparison:
    ins = closed_form.solve_insider(params, tie_eps)
    out = closed_form.solve_outsider(params, tie_eps)
    um_i = expected_median_utility(ins.result, params)
    um_o = expected_median_utility(out.result, params)
    up_i = expected_party_utility(Party.R, ins.result, params)
    up_o = expected_party_utility(Party.R, out.result, params)
    dist_i = ins.result.expect(lambda t: abs(t.policy))
    dist_o = out.result.expect(lambda t: abs(t.policy))
    if dist_o < dist_i - tie_eps:
        pol = Polarization.MORE_CENTRIST
    elif dist_o > dist_i + tie_eps:
        pol = Polarization.MORE_EXTREME
    else:
        pol = Polarization.UNCHANGED
    return WelfareComparison(um_i, um_o, up_i, up_o, _effect(um_i, um_o, tie_eps),
                             _effect(up_i, up_o, tie_eps), pol, (ins.case, out.case), ins, out)


VOTER_TAGS = ("C-Case6", "C-Case9", "C-Case10", "C-Case11")
PARTY_TAG = "C-Case11-party"


def welfare_reduction_condition(params: ModelParams, tie_eps: float = TIE_EPS) -> tuple[str, ...]:
    """Tags of the listed welfare-reducing conditions that hold for ``params``.

    Voter tags come from ``VOTER_TAGS``; ``PARTY_TAG`` marks the single listed
    party-welfare reduction.  An empty tuple means no condition holds.
    """
    p = params
    V_r, V_o, b_R, k_r = p.V_r, p.V_o, p.b_R, p.k_r
    case = closed_form.classify_outsider(p, tie_eps).index
    tags = []
    if case == 6 and p.nu_o < (p.alpha_R * p.nu_r + p.alpha_L * p.nu_l) / 2 + 2 * b_R:
        tags.append("C-Case6")
    if b_R <= V_o < b_R - k_r + V_r and k_r < V_r < b_R:
        tags.append("C-Case9")
    orderings = (
        k_r < V_o < V_r < b_R,
        V_o < k_r < V_r < b_R,
        k_r < V_o < b_R < V_r,
        V_o < k_r < b_R < V_r,
    )
    if case == 10 and any(orderings):
        tags.append("C-Case10")
    if case == 11 and k_r < b_R <= V_r:
        tags.append("C-Case11")
    if case == 11 and abs(min(k_r, V_r) - b_R) > tie_eps:
        tags.append(PARTY_TAG)
    return tuple(tags)


def has_voter_tag(tags) -> bool:
    return any(t in VOTER_TAGS for t in tags)


# sweeps -------------------------------------------------------------------

DERIVED_AXES = ("V_r", "V_o")


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.name not in PARAM_FIELDS + DERIVED_AXES:
            raise ValueError(f"unknown sweep axis {self.name!r}")
        if self.steps < 1:
            raise ValueError("axis needs at least one step")

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class Cell:
    v1: float
    v2: float
    comparison: WelfareComparison | None
    tags: tuple[str, ...] = ()
    error: str | None = None

    @property
    def feasible(self) -> bool:
        return self.comparison is not None


@dataclass(frozen=True)
class RegionMap:
    axis1: Axis
    axis2: Axis
    cells: tuple[Cell, ...]

    def __post_init__(self):
        assert len(self.cells) == self.axis1.steps * self.axis2.steps


def apply_axis(params: ModelParams, name: str, value: float) -> ModelParams:
    """Set a parameter or a derived valence gap, pinning the alphas."""
    if name == "V_r":
        if params.alpha_R == 0:
            raise InvalidParams("alpha_R > 0 to target V_r", "alpha_R", params.alpha_R)
        return replace(params, nu_r=(value + params.alpha_L * params.nu_l) / params.alpha_R)
    if name == "V_o":
        return replace(params, nu_o=value + params.alpha_L * params.nu_l)
    return replace(params, **{name: value})


def _cell(args) -> Cell:
    template, a1, v1, a2, v2, tie_eps = args
    try:
        p = apply_axis(apply_axis(template, a1, v1), a2, v2)
    except InvalidParams as exc:
        return Cell(v1, v2, None, error=f"infeasible: {exc}")
    return Cell(v1, v2, compare_games(p, tie_eps), welfare_reduction_condition(p, tie_eps))


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("NOMGAME_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items, threads: int | None = None) -> list:
    """Order-preserving map, parallel when more than one worker is allowed."""
    threads = thread_cap() if threads is None else threads
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def sweep(template: ModelParams, axis1: Axis, axis2: Axis, tie_eps: float = TIE_EPS,
          threads: int | None = None) -> RegionMap:
    """Evaluate compare_games on the grid axis1 x axis2 (axis1 outer)."""
    jobs = [(template, axis1.name, float(v1), axis2.name, float(v2), tie_eps)
            for v1 in axis1.values() for v2 in axis2.values()]
    return RegionMap(axis1, axis2, tuple(parallel_map(_cell, jobs, threads)))


CSV_HEADER = ("axis1,axis2,case_insider,case_outsider,winner,policy,rent,u_median_i,"
              "u_median_o,u_partyR_i,u_partyR_o,voter_effect,party_effect,polarization,"
              "welfare_tag").split(",")


def fmt(x: float) -> str:
    return format(x, ".12g")


def region_rows(region: RegionMap) -> list[list[str]]:
    rows = []
    for c in region.cells:
        if not c.feasible:
            rows.append([fmt(c.v1), fmt(c.v2)] + ["infeasible"] * 12 + [""])
            continue
        w = c.comparison
        rows.append([
            fmt(c.v1), fmt(c.v2), str(w.cases[0]), str(w.cases[1]), w.outsider.winner,
            fmt(w.outsider.winning_policy), fmt(w.outsider.winning_rent),
            fmt(w.u_median_insider), fmt(w.u_median_outsider),
            fmt(w.u_partyR_insider), fmt(w.u_partyR_outsider),
            w.voter_effect.value, w.party_effect.value, w.polarization_effect.value,
            "|".join(c.tags),
        ])
    return rows


def region_csv(region: RegionMap) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(region_rows(region))
    return buf.getvalue()


# median voter preference over the (V, X) plane ---------------------------


class Preference(str, Enum):
    L_PREFERRED = "L-preferred"
    R_PREFERRED = "R-preferred"
    INDIFFERENT = "indifferent"


def voter_preference(V: float, X: float, tie_eps: float = TIE_EPS) -> Preference:
    """Median preference given X = |x_R| - |x_L| and R's valence gap V."""
    if abs(X - V) <= tie_eps:
        return Preference.INDIFFERENT
    return Preference.R_PREFERRED if X < V else Preference.L_PREFERRED


@dataclass(frozen=True)
class PreferenceRegion:
    values: np.ndarray
    labels: tuple[tuple[Preference, ...], ...]  # labels[i][j] at V=values[i], X=values[j]


def median_voter_indifference_region(resolution: int, lo: float = -1.0, hi: float = 1.0,
                                     tie_eps: float = TIE_EPS) -> PreferenceRegion:
    if resolution < 1 or not lo <= hi:
        raise ValueError("need resolution >= 1 and lo <= hi")
    vals = np.linspace(lo, hi, resolution) if resolution > 1 else np.array([lo])
    labels = tuple(tuple(voter_preference(float(V), float(X), tie_eps) for X in vals)
                   for V in vals)
    return PreferenceRegion(vals, labels)
