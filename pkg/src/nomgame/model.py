"""Primitives of the nomination-and-election game.

Three politicians make platform offers: the left insider ``l`` to party L,
the right insider ``r`` and the outsider ``o`` to party R.  R endorses one of
its two offers, L always endorses ``l``, and the median voter (bliss point 0)
picks the ballot entry it prefers, flipping a fair coin on ties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from enum import Enum

TIE_EPS = 1e-9


class StructuralError(ValueError):
    """A ticket or query that is not a legal object of the game."""


class InvalidParams(ValueError):
    """Raised when a parameter vector violates a model invariant.

    ``invariant`` holds the violated condition, e.g. ``"k_l < 0"``.
    """

    def __init__(self, invariant: str, field: str | None = None, value=None):
        self.invariant = invariant
        self.field = field
        self.value = value
        msg = f"violates {invariant}"
        if field is not None:
            msg = f"{field}={value!r} {msg}"
        super().__init__(msg)


class Party(str, Enum):
    L = "L"
    R = "R"


class PoliticianId(str, Enum):
    l = "l"  # noqa: E741
    r = "r"
    o = "o"


@dataclass(frozen=True)
class ModelParams:
    b_L: float
    b_R: float
    alpha_L: float
    alpha_R: float
    k_l: float
    k_r: float
    k_o: float
    nu_l: float
    nu_r: float
    nu_o: float

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise InvalidParams(f"{f.name} is a real number", f.name, v)
            if not math.isfinite(v):
                raise InvalidParams(f"{f.name} is finite", f.name, v)
            object.__setattr__(self, f.name, float(v))
        for inv, name, ok in self._checks():
            if not ok:
                raise InvalidParams(inv, name, getattr(self, name))

    def _checks(self):
        yield "b_L < 0", "b_L", self.b_L < 0
        yield "b_R > 0", "b_R", self.b_R > 0
        yield "k_l < 0", "k_l", self.k_l < 0
        yield "k_r > 0", "k_r", self.k_r > 0
        yield "k_o >= 0", "k_o", self.k_o >= 0
        for name in ("alpha_L", "alpha_R", "nu_l", "nu_r", "nu_o"):
            yield f"{name} >= 0", name, getattr(self, name) >= 0

    @property
    def V_r(self) -> float:
        return self.alpha_R * self.nu_r - self.alpha_L * self.nu_l

    @property
    def V_o(self) -> float:
        return self.nu_o - self.alpha_L * self.nu_l

    def V(self, candidate: PoliticianId) -> float:
        candidate = PoliticianId(candidate)
        if candidate is PoliticianId.r:
            return self.V_r
        if candidate is PoliticianId.o:
            return self.V_o
        raise StructuralError("relative valence is defined for R's candidates r and o only")

    def bliss(self, who: PoliticianId) -> float:
        return {"l": self.k_l, "r": self.k_r, "o": self.k_o}[PoliticianId(who).value]

    def perceived_valence(self, party: Party, candidate: PoliticianId) -> float:
        candidate = PoliticianId(candidate)
        if candidate is PoliticianId.o:
            return self.nu_o
        if candidate is PoliticianId.l:
            return self.alpha_L * self.nu_l
        return self.alpha_R * self.nu_r

    def to_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


PARAM_FIELDS = tuple(f.name for f in fields(ModelParams))


@dataclass(frozen=True)
class Platform:
    policy: float
    rent: float = 0.0

    def __post_init__(self):
        if self.rent < 0:
            raise StructuralError(f"rent must be >= 0, got {self.rent}")


NULL_PLATFORM = Platform(0.0, 0.0)


def check_side(who: PoliticianId, platform: Platform) -> None:
    """Enforce x_l <= 0, x_r >= 0, x_o >= 0 and zero insider rents."""
    who = PoliticianId(who)
    if who is PoliticianId.l and platform.policy > 0:
        raise StructuralError(f"l must offer a policy <= 0, got {platform.policy}")
    if who is not PoliticianId.l and platform.policy < 0:
        raise StructuralError(f"{who.value} must offer a policy >= 0, got {platform.policy}")
    if who is not PoliticianId.o and platform.rent != 0:
        raise StructuralError(f"insider {who.value} cannot seek rent")


@dataclass(frozen=True)
class MatchTicket:
    party: Party
    candidate: PoliticianId
    platform: Platform

    def __post_init__(self):
        party, cand = Party(self.party), PoliticianId(self.candidate)
        object.__setattr__(self, "party", party)
        object.__setattr__(self, "candidate", cand)
        if party is Party.L and cand is not PoliticianId.l:
            raise StructuralError("party L can only run with l")
        if party is Party.R and cand is PoliticianId.l:
            raise StructuralError("party R runs with r or o")
        check_side(cand, self.platform)

    @property
    def policy(self) -> float:
        return self.platform.policy

    @property
    def rent(self) -> float:
        return self.platform.rent

    def label(self) -> str:
        return f"{self.party.value}/{self.candidate.value}"


def ticket(party: str, candidate: str, policy: float, rent: float = 0.0) -> MatchTicket:
    return MatchTicket(Party(party), PoliticianId(candidate), Platform(policy, rent))


@dataclass(frozen=True)
class ElectionResult:
    """A decisive win (one ticket) or a fair lottery between two tickets."""

    tickets: tuple[MatchTicket, ...]

    def __post_init__(self):
        if len(self.tickets) not in (1, 2):
            raise StructuralError("an election has one winner or a two-way lottery")

    @classmethod
    def decisive(cls, winner: MatchTicket) -> ElectionResult:
        return cls((winner,))

    @classmethod
    def lottery(cls, a: MatchTicket, b: MatchTicket) -> ElectionResult:
        return cls((a, b))

    @property
    def is_lottery(self) -> bool:
        return len(self.tickets) == 2

    @property
    def winner(self) -> MatchTicket | None:
        return None if self.is_lottery else self.tickets[0]

    def expect(self, fn) -> float:
        """Average ``fn(ticket)`` over the (equally likely) winning tickets."""
        return sum(fn(t) for t in self.tickets) / len(self.tickets)

    @property
    def expected_policy(self) -> float:
        return self.expect(lambda t: t.policy)

    @property
    def expected_rent(self) -> float:
        return self.expect(lambda t: t.rent)

    def label(self) -> str:
        return " ~ ".join(t.label() for t in self.tickets)


@dataclass(frozen=True)
class RelativeQuantities:
    X: float
    V_r: float
    V_o: float
    candidate: PoliticianId

    @property
    def V(self) -> float:
        return self.V_r if self.candidate is PoliticianId.r else self.V_o


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class WinningRanges:
    """Policies each party accepts for a given relative valence advantage V.

    ``advantaged`` is the party whose bounded range wins the election.
    """

    V: float
    advantaged: Party
    R: Interval
    L: Interval


def median_utility(t: MatchTicket, params: ModelParams) -> float:
    return -abs(t.policy) + params.perceived_valence(t.party, t.candidate)


def party_utility(party: Party, accepted: Platform, won: bool,
                  winning_policy: float | None, params: ModelParams) -> float:
    b = params.b_L if Party(party) is Party.L else params.b_R
    if won:
        return -abs(accepted.policy - b) - accepted.rent
    if winning_policy is None:
        raise StructuralError("a losing party needs the winning policy")
    return -abs(winning_policy - b)


def politician_utility(who: PoliticianId, own_platform: Platform, accepted: bool,
                       won: bool, winning_policy: float | None,
                       params: ModelParams) -> float:
    k = params.bliss(who)
    if accepted and won:
        return -abs(own_platform.policy - k) + own_platform.rent
    if winning_policy is None:
        raise StructuralError("a losing or rejected politician needs the winning policy")
    return -abs(winning_policy - k)


def relative_quantities(x_L: float, x_R: float, candidate: PoliticianId,
                        params: ModelParams) -> RelativeQuantities:
    candidate = PoliticianId(candidate)
    if candidate is PoliticianId.l:
        raise StructuralError("candidate must be one of R's politicians (r or o)")
    return RelativeQuantities(abs(x_R) - abs(x_L), params.V_r, params.V_o, candidate)


def resolve_election(ticket_L: MatchTicket, ticket_R: MatchTicket, params: ModelParams,
                     tie_eps: float = TIE_EPS) -> ElectionResult:
    if ticket_L.party is not Party.L or ticket_R.party is not Party.R:
        raise StructuralError("resolve_election expects an L ticket and an R ticket")
    u_L = median_utility(ticket_L, params)
    u_R = median_utility(ticket_R, params)
    if abs(u_L - u_R) <= tie_eps:
        return ElectionResult.lottery(ticket_L, ticket_R)
    return ElectionResult.decisive(ticket_L if u_L > u_R else ticket_R)


def winning_policy_range(V: float) -> WinningRanges:
    if V >= 0:
        return WinningRanges(V, Party.R, R=Interval(0.0, V), L=Interval(-math.inf, 0.0))
    return WinningRanges(V, Party.L, R=Interval(0.0, math.inf), L=Interval(V, 0.0))


def expected_party_utility(party: Party, result: ElectionResult, params: ModelParams) -> float:
    """Utility of ``party`` averaged over lottery branches."""
    party = Party(party)

    def branch(t: MatchTicket) -> float:
        return party_utility(party, t.platform, t.party is party, t.policy, params)

    return result.expect(branch)


def expected_politician_utility(who: PoliticianId, own: Platform, accepted: bool,
                                result: ElectionResult, params: ModelParams) -> float:
    who = PoliticianId(who)

    def branch(t: MatchTicket) -> float:
        won = accepted and t.candidate is who
        return politician_utility(who, own, accepted, won, t.policy, params)

    return result.expect(branch)


def expected_median_utility(result: ElectionResult, params: ModelParams) -> float:
    return result.expect(lambda t: median_utility(t, params))
