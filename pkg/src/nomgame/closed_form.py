"""Closed-form equilibria of the insider-only game and the game with an outsider.

Cases are numbered 1-3 for the insider-only game (by the sign of V_r) and
1-11 for the game with an outsider.  Rents that sit just below R's
indifference point are reported at the limit, with the outsider accepted
(Cases 3, 5 and 9).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import (
    NULL_PLATFORM,
    TIE_EPS,
    ElectionResult,
    MatchTicket,
    ModelParams,
    Party,
    Platform,
    PoliticianId,
)


class Game(str, Enum):
    INSIDER = "InsiderOnly"
    OUTSIDER = "WithOutsider"


N_CASES = {Game.INSIDER: 3, Game.OUTSIDER: 11}


class CaseConsistencyError(RuntimeError):
    """No row of the outsider table matched a valid parameter vector."""


@dataclass(frozen=True)
class CaseLabel:
    game: Game
    index: int

    def __post_init__(self):
        object.__setattr__(self, "game", Game(self.game))
        if not 1 <= self.index <= N_CASES[self.game]:
            raise ValueError(f"case index {self.index} out of range for {self.game.value}")

    def __str__(self) -> str:
        return f"{self.game.value}/{self.index}"


@dataclass(frozen=True)
class EquilibriumOutcome:
    case: CaseLabel
    offer_l: Platform
    offer_r: Platform
    offer_o: Platform | None
    result: ElectionResult
    xbar: float | None = None

    @property
    def winning_policy(self) -> float:
        return self.result.expected_policy

    @property
    def winning_rent(self) -> float:
        return self.result.expected_rent

    @property
    def winner(self) -> str:
        return self.result.label()


class _Cmp:
    """Float comparisons with an absolute tie band."""

    def __init__(self, eps: float):
        self.eps = eps

    def eq(self, a, b):
        return abs(a - b) <= self.eps

    def lt(self, a, b):
        return a < b - self.eps

    def le(self, a, b):
        return a <= b + self.eps


def _L(policy: float) -> MatchTicket:
    return MatchTicket(Party.L, PoliticianId.l, Platform(policy, 0.0))


def _R(candidate: str, policy: float, rent: float = 0.0) -> MatchTicket:
    return MatchTicket(Party.R, PoliticianId(candidate), Platform(policy, rent))


def classify_insider(params: ModelParams, tie_eps: float = TIE_EPS) -> CaseLabel:
    c = _Cmp(tie_eps)
    V_r = params.V_r
    if c.eq(V_r, 0.0):
        return CaseLabel(Game.INSIDER, 2)
    return CaseLabel(Game.INSIDER, 1 if V_r < 0 else 3)


def solve_insider(params: ModelParams, tie_eps: float = TIE_EPS) -> EquilibriumOutcome:
    case = classify_insider(params, tie_eps)
    V_r = params.V_r
    if case.index == 1:
        x_l = max(params.k_l, V_r)
        return EquilibriumOutcome(case, Platform(x_l), NULL_PLATFORM, None,
                                  ElectionResult.decisive(_L(x_l)))
    if case.index == 2:
        return EquilibriumOutcome(case, NULL_PLATFORM, NULL_PLATFORM, None,
                                  ElectionResult.lottery(_L(0.0), _R("r", 0.0)))
    x_r = min(params.k_r, V_r)
    return EquilibriumOutcome(case, NULL_PLATFORM, Platform(x_r), None,
                              ElectionResult.decisive(_R("r", x_r)))


def _midpoints(p: ModelParams) -> tuple[float, float, float]:
    V_r, V_o = p.V_r, p.V_o
    mid_o = (max(p.k_l, V_r) + min(p.k_o, V_o)) / 2
    mid_r = (max(p.k_l, V_o) + min(p.k_r, V_r)) / 2
    xbar = (min(p.b_R, V_r) + min(p.b_R, V_o)) / 2
    return mid_o, mid_r, xbar


def classify_outsider(params: ModelParams, tie_eps: float = TIE_EPS) -> CaseLabel:
    """Return the outsider-table row for ``params``.

    Rows are tried in table order and the first match wins.  The one gap in
    the printed conditions, 0 < V_r = V_o < b_R, goes to Case 10: both
    politicians can offer the same policies and R's tie rule favours r.
    """
    c = _Cmp(tie_eps)
    V_r, V_o, b_R = params.V_r, params.V_o, params.b_R
    mid_o, mid_r, xbar = _midpoints(params)

    rows = (
        (1, c.le(V_r, V_o) and c.lt(V_o, 0)),
        (2, c.le(V_o, V_r) and c.lt(V_r, 0)),
        (3, c.lt(V_r, 0) and c.eq(V_o, 0)),
        (4, c.le(V_o, 0) and c.eq(V_r, 0)),
        (5, c.le(V_r, 0) and c.lt(0, V_o) and c.le(mid_o, b_R)),
        (6, c.le(V_r, 0) and c.lt(0, V_o) and c.lt(b_R, mid_o)),
        (7, c.le(V_o, 0) and c.lt(0, V_r) and c.le(mid_r, b_R)),
        (8, c.le(V_o, 0) and c.lt(0, V_r) and c.lt(b_R, mid_r)),
    )
    for index, hit in rows:
        if hit:
            return CaseLabel(Game.OUTSIDER, index)

    case9_range = c.lt(0, V_r) and (
        (c.lt(V_r, b_R) and c.le(b_R, V_o)) or (c.lt(V_r, V_o) and c.lt(V_o, b_R))
    )
    if case9_range:
        # x̄ < b_R is implied by V_r < b_R
        assert c.lt(xbar, b_R), "Case 9 range without xbar < b_R"
        return CaseLabel(Game.OUTSIDER, 9)
    if c.lt(0, V_o) and c.lt(V_o, V_r) and c.lt(V_o, b_R):
        assert c.lt(xbar, b_R), "Case 10 range without xbar < b_R"
        return CaseLabel(Game.OUTSIDER, 10)
    if c.le(b_R, V_o) and c.le(b_R, V_r):
        return CaseLabel(Game.OUTSIDER, 11)
    if c.lt(0, V_r) and c.eq(V_r, V_o) and c.lt(V_o, b_R):
        return CaseLabel(Game.OUTSIDER, 10)
    raise CaseConsistencyError(
        f"no outsider case matches V_r={V_r!r}, V_o={V_o!r}, b_R={b_R!r}"
    )


def solve_outsider(params: ModelParams, tie_eps: float = TIE_EPS) -> EquilibriumOutcome:
    case = classify_outsider(params, tie_eps)
    p = params
    V_r, V_o, b_R = p.V_r, p.V_o, p.b_R
    i = case.index
    null = NULL_PLATFORM

    def won_by_L(x_l):
        return EquilibriumOutcome(case, Platform(x_l), null, null,
                                  ElectionResult.decisive(_L(x_l)))

    if i == 1:
        return won_by_L(max(p.k_l, V_o))
    if i == 2:
        return won_by_L(max(p.k_l, V_r))
    if i == 3:
        m_o = 2 * abs(max(p.k_l, V_r))
        return EquilibriumOutcome(case, null, null, Platform(0.0, m_o),
                                  ElectionResult.lottery(_L(0.0), _R("o", 0.0, m_o)))
    if i == 4:
        return EquilibriumOutcome(case, null, null, null,
                                  ElectionResult.lottery(_L(0.0), _R("r", 0.0)))
    if i == 5:
        x_o = min(p.k_o, V_o)
        m_o = max(0.0, abs(max(p.k_l, V_r) - b_R) - abs(x_o - b_R))
        return EquilibriumOutcome(case, null, null, Platform(x_o, m_o),
                                  ElectionResult.decisive(_R("o", x_o, m_o)))
    if i == 6:
        x_o = 2 * b_R - max(p.k_l, V_r)
        return EquilibriumOutcome(case, null, null, Platform(x_o),
                                  ElectionResult.decisive(_R("o", x_o)))
    if i == 7:
        x_r = min(p.k_r, V_r)
        return EquilibriumOutcome(case, null, Platform(x_r), null,
                                  ElectionResult.decisive(_R("r", x_r)))
    if i == 8:
        x_r = 2 * b_R - max(p.k_l, V_o)
        return EquilibriumOutcome(case, null, Platform(x_r), null,
                                  ElectionResult.decisive(_R("r", x_r)))

    xbar = _midpoints(p)[2]
    if i == 9:
        x_o = min(b_R, V_o)
        m_o = max(0.0, abs(min(b_R, V_r) - b_R) - abs(x_o - b_R))
        return EquilibriumOutcome(case, null, null, Platform(x_o, m_o),
                                  ElectionResult.decisive(_R("o", x_o, m_o)), xbar=xbar)
    if i == 10:
        x_r = min(b_R, V_r)
        return EquilibriumOutcome(case, null, Platform(x_r), null,
                                  ElectionResult.decisive(_R("r", x_r)), xbar=xbar)
    return EquilibriumOutcome(case, null, Platform(b_R), null,
                              ElectionResult.decisive(_R("r", b_R)))


def solve(params: ModelParams, game: Game, tie_eps: float = TIE_EPS) -> EquilibriumOutcome:
    if Game(game) is Game.INSIDER:
        return solve_insider(params, tie_eps)
    return solve_outsider(params, tie_eps)


def boundary_distance(params: ModelParams) -> float:
    """Distance of ``params`` from the nearest case boundary of either table.

    Measured as the smallest gap among the quantities whose sign selects a
    row (V_r, V_o, V_r - V_o, the b_R comparisons and both midpoints).
    """
    p = params
    V_r, V_o, b_R = p.V_r, p.V_o, p.b_R
    mid_o, mid_r, _ = _midpoints(p)
    gaps = [V_r, V_o, V_r - V_o, V_r - b_R, V_o - b_R]
    if V_r <= 0 < V_o:
        gaps.append(mid_o - b_R)
    if V_o <= 0 < V_r:
        gaps.append(mid_r - b_R)
    return min(abs(g) for g in gaps)
