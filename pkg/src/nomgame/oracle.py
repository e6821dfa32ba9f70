"""Brute-force equilibrium search on discretized platform grids.

The oracle knows nothing about the closed-form tables.  It enumerates every
offer on a finite grid, resolves party R's endorsement and the vote by direct
utility comparison, and keeps the offer profiles from which no politician
has a strictly profitable deviation on the grid.

Two timings are supported:

``responsive`` (default)
    r and o make their offers, R endorses, and l then picks the policy that
    is best against R's ticket.  R anticipates l's reply.
``simultaneous``
    l, r and o all offer at once, and l's offer is held fixed when R decides.
    This checks l's deviations cell by cell and is meant for coarse grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import closed_form
from .closed_form import EquilibriumOutcome, Game
from .model import (
    NULL_PLATFORM,
    TIE_EPS,
    ElectionResult,
    MatchTicket,
    ModelParams,
    Party,
    Platform,
    PoliticianId,
    expected_party_utility,
    expected_politician_utility,
    resolve_election,
)

TIMINGS = ("responsive", "simultaneous")
PAYOFF_TOL = 1e-12
_CHUNK = 1 << 15


class GridError(ValueError):
    """A grid that cannot host the strategy spaces."""


@dataclass(frozen=True)
class GridSpec:
    policy_lo: float
    policy_hi: float
    policy_steps: int = 201
    rent_hi: float = 1.0
    rent_steps: int = 101
    epsilon: float = 1e-6
    critical_points: tuple[float, ...] = ()
    rent_critical_points: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "critical_points", tuple(float(c) for c in self.critical_points))
        object.__setattr__(self, "rent_critical_points",
                           tuple(float(c) for c in self.rent_critical_points))
        if self.policy_steps < 2 or self.rent_steps < 2:
            raise GridError("policy_steps and rent_steps must be >= 2")
        if not self.epsilon > 0:
            raise GridError(f"epsilon must be > 0, got {self.epsilon}")
        if not self.policy_lo <= 0 <= self.policy_hi:
            raise GridError("policy window must contain 0")
        if self.rent_hi < 0:
            raise GridError("rent_hi must be >= 0")

    @classmethod
    def default(cls, params: ModelParams, policy_steps: int = 201, rent_steps: int = 101,
                epsilon: float = 1e-6) -> GridSpec:
        p = params
        V_r, V_o, b_R = p.V_r, p.V_o, p.b_R
        lo = min(p.k_l, V_r, V_o) - 1.0
        hi = max(p.k_r, p.k_o, b_R, V_r, V_o) + 1.0
        crit = [p.k_l, p.k_r, p.k_o, b_R, V_r, V_o, 2 * b_R,
                2 * b_R - max(p.k_l, V_r), 2 * b_R - max(p.k_l, V_o)]
        rents = [
            2 * abs(max(p.k_l, V_r)),
            abs(max(p.k_l, V_r) - b_R) - abs(min(p.k_o, V_o) - b_R),
            abs(min(b_R, V_r) - b_R) - abs(min(b_R, V_o) - b_R),
            abs(min(b_R, V_r) - b_R) - abs(min(p.k_o, V_o) - b_R),
        ]
        rent_hi = 2 * (abs(p.k_l) + abs(b_R) + abs(V_r) + abs(V_o)) + 1.0
        return cls(lo, hi, policy_steps, rent_hi, rent_steps, epsilon,
                   tuple(crit), tuple(r for r in rents if r > 0))

    def with_steps(self, policy_steps: int, rent_steps: int | None = None) -> GridSpec:
        return GridSpec(self.policy_lo, self.policy_hi, policy_steps, self.rent_hi,
                        rent_steps or self.rent_steps, self.epsilon,
                        self.critical_points, self.rent_critical_points)

    @property
    def policy_step(self) -> float:
        return (self.policy_hi - self.policy_lo) / (self.policy_steps - 1)

    @property
    def rent_step(self) -> float:
        return self.rent_hi / (self.rent_steps - 1)

    def policies(self) -> np.ndarray:
        eps = self.epsilon
        crit = np.asarray(self.critical_points, dtype=float)
        near_zero = np.clip([0.0, eps, -eps], self.policy_lo, self.policy_hi)
        pts = np.concatenate([
            np.linspace(self.policy_lo, self.policy_hi, self.policy_steps),
            near_zero, crit, crit - eps, crit + eps,
        ])
        return np.unique(pts)

    def rents(self) -> np.ndarray:
        eps = self.epsilon
        crit = np.asarray(self.rent_critical_points, dtype=float)
        shifted = [crit + k * eps for k in (1, 0, -1, -2, -3)]
        pts = np.concatenate([np.linspace(0.0, self.rent_hi, self.rent_steps), [0.0], *shifted])
        return np.unique(pts[pts >= 0])


@dataclass(frozen=True)
class OracleEquilibrium:
    offer_l: Platform
    offer_r: Platform
    offer_o: Platform | None
    endorsed: PoliticianId
    result: ElectionResult
    certified: bool = True
    multiplicity: int = 1

    def branches(self) -> tuple[tuple[str, float, float], ...]:
        return _branches(self.result)


@dataclass
class OracleResult:
    game: Game
    timing: str
    grid: GridSpec
    equilibria: list[OracleEquilibrium]
    n_profiles: int

    @property
    def diagnostic(self) -> str:
        if not self.equilibria:
            return "no pure equilibrium on this grid"
        return f"{len(self.equilibria)} distinct equilibrium outcome(s)"


def _branches(result: ElectionResult) -> tuple[tuple[str, float, float], ...]:
    return tuple(sorted((t.label(), t.policy, t.rent) for t in result.tickets))


def best_vote(ticket_L: MatchTicket, ticket_R: MatchTicket, params: ModelParams,
              tie_eps: float = TIE_EPS) -> ElectionResult:
    """Stage 3: the sincere median vote."""
    return resolve_election(ticket_L, ticket_R, params, tie_eps)


def best_l_response(ticket_R: MatchTicket, params: ModelParams, l_policies,
                    tie_eps: float = TIE_EPS) -> Platform:
    """l's best policy against a known R ticket; ties go to the policy nearest 0."""
    best, best_u = None, -math.inf
    for x in sorted(l_policies, key=lambda v: -v):
        own = Platform(float(x))
        res = best_vote(MatchTicket(Party.L, PoliticianId.l, own), ticket_R, params, tie_eps)
        u = expected_politician_utility(PoliticianId.l, own, True, res, params)
        if u > best_u + PAYOFF_TOL:
            best, best_u = own, u
    return best


@dataclass(frozen=True)
class Endorsement:
    choice: PoliticianId
    result: ElectionResult
    u_R_insider: float
    u_R_outsider: float | None


def best_endorsement(offer_r: Platform, offer_o: Platform | None, offer_l,
                     params: ModelParams, tie_eps: float = TIE_EPS) -> Endorsement:
    """Stage 2: R's choice between r's and o's offers.

    ``offer_l`` is either l's fixed platform or a callable mapping R's ticket
    to l's platform (the responsive timing).  Exact ties go to the insider.
    """

    def outcome(candidate: str, offer: Platform) -> ElectionResult:
        t_R = MatchTicket(Party.R, PoliticianId(candidate), offer)
        pl = offer_l(t_R) if callable(offer_l) else offer_l
        return best_vote(MatchTicket(Party.L, PoliticianId.l, pl), t_R, params, tie_eps)

    res_r = outcome("r", offer_r)
    u_r = expected_party_utility(Party.R, res_r, params)
    if offer_o is None:
        return Endorsement(PoliticianId.r, res_r, u_r, None)
    res_o = outcome("o", offer_o)
    u_o = expected_party_utility(Party.R, res_o, params)
    if u_o > u_r + tie_eps:
        return Endorsement(PoliticianId.o, res_o, u_r, u_o)
    return Endorsement(PoliticianId.r, res_r, u_r, u_o)


def profile_payoffs(params: ModelParams, offer_l: Platform | None, offer_r: Platform,
                    offer_o: Platform | None, timing: str = "responsive",
                    l_policies=None, tie_eps: float = TIE_EPS) -> dict[str, float]:
    """Scalar evaluation of one offer profile through the model utilities.

    In the responsive timing ``offer_l`` is ignored and l's reply is found by
    enumerating ``l_policies``.
    """
    if timing == "responsive":
        def l_reply(t_R):
            return best_l_response(t_R, params, l_policies, tie_eps)
        endorsement = best_endorsement(offer_r, offer_o, l_reply, params, tie_eps)
    else:
        endorsement = best_endorsement(offer_r, offer_o, offer_l, params, tie_eps)
    res = endorsement.result
    l_own = next(t.platform for t in _ballot(res, params) if t.party is Party.L)
    out = {
        "l": expected_politician_utility(PoliticianId.l, l_own, True, res, params),
        "r": expected_politician_utility(PoliticianId.r, offer_r,
                                         endorsement.choice is PoliticianId.r, res, params),
        "R": expected_party_utility(Party.R, res, params),
        "R_if_r": endorsement.u_R_insider,
        "R_if_o": endorsement.u_R_outsider,
    }
    if offer_o is not None:
        out["o"] = expected_politician_utility(PoliticianId.o, offer_o,
                                               endorsement.choice is PoliticianId.o, res, params)
    out["_result"] = res
    out["_choice"] = endorsement.choice
    return out


def _ballot(res: ElectionResult, params: ModelParams):
    # the L ticket of a decisive R win is not stored; recover a placeholder
    for t in res.tickets:
        yield t
    if all(t.party is Party.R for t in res.tickets):
        yield MatchTicket(Party.L, PoliticianId.l, NULL_PLATFORM)


# vectorized engine --------------------------------------------------------


class _Ctx:
    def __init__(self, params: ModelParams, grid: GridSpec, tie_eps: float):
        self.p = params
        self.tie_eps = tie_eps
        pol = grid.policies()
        self.Pm = np.sort(pol[pol <= 0])[::-1]  # 0 first: canonical null for ties
        self.Pp = np.sort(pol[pol >= 0])
        self.M = grid.rents()
        self.aL = params.alpha_L * params.nu_l
        self.v = {"r": params.alpha_R * params.nu_r, "o": params.nu_o}

    def code(self, x_R, x_L, cand):
        """+1: R wins, -1: L wins, 0: lottery (broadcasting)."""
        d = (-np.abs(x_R) + self.v[cand]) - (-np.abs(x_L) + self.aL)
        return np.where(np.abs(d) <= self.tie_eps, 0, np.sign(d)).astype(np.int8)

    def l_reply(self, xs, cand):
        """l's best policy against R ticket policies ``xs``; returns (x_l, code)."""
        codes = self.code(xs[:, None], self.Pm[None, :], cand)
        k_l = self.p.k_l
        u_win = -np.abs(self.Pm - k_l)[None, :]
        u_lose = -np.abs(xs - k_l)[:, None]
        u = _mix(codes, u_lose, u_win)
        best = u.max(axis=1, keepdims=True)
        idx = np.argmax(u >= best - PAYOFF_TOL, axis=1)
        rows = np.arange(len(xs))
        return self.Pm[idx], codes[rows, idx]


def _mix(code, r_val, l_val):
    """Combine R-wins / L-wins branch values by outcome code."""
    return np.where(code > 0, r_val, np.where(code < 0, l_val, 0.5 * (r_val + l_val)))


@dataclass
class _Side:
    """Per-offer outcome tables for one of R's candidates."""

    cand: str
    x: np.ndarray
    m: np.ndarray
    xl: np.ndarray
    code: np.ndarray

    def util_R(self, b_R):
        return _mix(self.code, -np.abs(self.x - b_R) - self.m, -np.abs(self.xl - b_R))

    def util_pol(self, k, endorsed_self):
        win = -np.abs(self.x - k) + (self.m if endorsed_self else 0.0)
        return _mix(self.code, win, -np.abs(self.xl - k))


def _sides(ctx: _Ctx, xl_fixed=None, o_offers=None):
    xr = ctx.Pp
    mr = np.zeros_like(xr)
    if o_offers is None:
        xo = np.repeat(ctx.Pp, len(ctx.M))
        mo = np.tile(ctx.M, len(ctx.Pp))
    else:
        xo, mo = o_offers
    out = []
    for cand, x, m in (("r", xr, mr), ("o", xo, mo)):
        if cand == "o" and len(x) == 0:
            out.append(None)
            continue
        if xl_fixed is None:
            ux, inv = np.unique(x, return_inverse=True)
            xl_u, code_u = ctx.l_reply(ux, cand)
            xl, code = xl_u[inv], code_u[inv]
        else:
            xl = np.full_like(x, xl_fixed)
            code = ctx.code(x, xl, cand)
        out.append(_Side(cand, x, m, xl, code))
    return out


def _o_offer_arrays(ctx: _Ctx, forced_outsider):
    if forced_outsider is None:
        return None
    arr = np.array([(f.policy, f.rent) for f in forced_outsider], dtype=float).reshape(-1, 2)
    return arr[:, 0], arr[:, 1]


def find_stage1_equilibria(params: ModelParams, grid: GridSpec | None = None,
                           game: Game = Game.OUTSIDER, timing: str = "responsive",
                           forced_outsider=None, tie_eps: float = TIE_EPS) -> OracleResult:
    """Enumerate all pure offer profiles on ``grid`` and keep the certified ones.

    Payoff-equivalent profiles are grouped by outcome; each group is
    represented by the profile with the most null offers.  ``forced_outsider``
    restricts o to the given platforms.
    """
    if timing not in TIMINGS:
        raise ValueError(f"timing must be one of {TIMINGS}")
    game = Game(game)
    grid = grid or GridSpec.default(params)
    ctx = _Ctx(params, grid, tie_eps)
    o_offers = None if game is Game.INSIDER else _o_offer_arrays(ctx, forced_outsider)
    if game is Game.INSIDER:
        o_offers = (np.empty(0), np.empty(0))
    if timing == "responsive":
        rows = _responsive(ctx, o_offers)
    else:
        rows = _simultaneous(ctx, o_offers)
    eqs, n = _collapse(ctx, rows, with_o=game is Game.OUTSIDER)
    return OracleResult(game, timing, grid, eqs, n)


def _responsive(ctx: _Ctx, o_offers):
    p = ctx.p
    side_r, side_o = _sides(ctx, None, o_offers)
    uR_r = side_r.util_R(p.b_R)
    r_if_r = side_r.util_pol(p.k_r, True)
    if side_o is None:
        best = r_if_r.max()
        a = np.nonzero(r_if_r >= best - PAYOFF_TOL)[0]
        return _rows_from(ctx, side_r, side_o, a, np.full(len(a), -1), None)
    uR_o = side_o.util_R(p.b_R)
    r_if_o = side_o.util_pol(p.k_r, False)
    o_if_o = side_o.util_pol(p.k_o, True)
    o_if_r = side_r.util_pol(p.k_o, False)
    endorse_o = uR_o[None, :] > uR_r[:, None] + ctx.tie_eps
    pay_r = np.where(endorse_o, r_if_o[None, :], r_if_r[:, None])
    pay_o = np.where(endorse_o, o_if_o[None, :], o_if_r[:, None])
    ok = pay_o >= pay_o.max(axis=1, keepdims=True) - PAYOFF_TOL
    ok &= pay_r >= pay_r.max(axis=0, keepdims=True) - PAYOFF_TOL
    a, b = np.nonzero(ok)
    return _rows_from(ctx, side_r, side_o, a, b, endorse_o[a, b])


def _simultaneous(ctx: _Ctx, o_offers):
    p = ctx.p
    found = []
    tables = []
    for xl in ctx.Pm:
        side_r, side_o = _sides(ctx, xl, o_offers)
        tables.append((side_r, side_o))
    uR_r = np.stack([s[0].util_R(p.b_R) for s in tables])
    l_if_r = np.stack([s[0].util_pol(p.k_l, False) for s in tables])
    r_if_r = np.stack([s[0].util_pol(p.k_r, True) for s in tables])
    has_o = tables[0][1] is not None
    if not has_o:
        ok = r_if_r >= r_if_r.max(axis=1, keepdims=True) - PAYOFF_TOL
        ok &= l_if_r >= l_if_r.max(axis=0, keepdims=True) - PAYOFF_TOL
        for i, a in zip(*np.nonzero(ok)):
            found.append(_rows_from(ctx, tables[i][0], None, np.array([a]), np.array([-1]), None,
                                    offset=i * len(ctx.Pp)))
        return _concat_rows(found)
    uR_o = np.stack([s[1].util_R(p.b_R) for s in tables])
    l_if_o = np.stack([s[1].util_pol(p.k_l, False) for s in tables])
    r_if_o = np.stack([s[1].util_pol(p.k_r, False) for s in tables])
    o_if_o = np.stack([s[1].util_pol(p.k_o, True) for s in tables])
    o_if_r = np.stack([s[0].util_pol(p.k_o, False) for s in tables])
    for i, (side_r, side_o) in enumerate(tables):
        endorse_o = uR_o[i][None, :] > uR_r[i][:, None] + ctx.tie_eps
        pay_r = np.where(endorse_o, r_if_o[i][None, :], r_if_r[i][:, None])
        pay_o = np.where(endorse_o, o_if_o[i][None, :], o_if_r[i][:, None])
        ok = pay_o >= pay_o.max(axis=1, keepdims=True) - PAYOFF_TOL
        ok &= pay_r >= pay_r.max(axis=0, keepdims=True) - PAYOFF_TOL
        a, b = np.nonzero(ok)
        if len(a) == 0:
            continue
        # l's deviations across all of its policies, in bounded chunks
        keep = np.empty(len(a), dtype=bool)
        for s in range(0, len(a), _CHUNK):
            aa, bb = a[s:s + _CHUNK], b[s:s + _CHUNK]
            e_dev = uR_o[:, bb] > uR_r[:, aa] + ctx.tie_eps
            pay_l = np.where(e_dev, l_if_o[:, bb], l_if_r[:, aa])
            keep[s:s + _CHUNK] = pay_l[i] >= pay_l.max(axis=0) - PAYOFF_TOL
        if keep.any():
            a, b = a[keep], b[keep]
            found.append(_rows_from(ctx, side_r, side_o, a, b, endorse_o[a, b],
                                    offset=i * (len(side_r.x) + len(side_o.x))))
    return _concat_rows(found)


def _rows_from(ctx, side_r, side_o, a, b, endorse_o, offset=0):
    """Columnar description of equilibrium cells.

    ``sid`` identifies the endorsed offer (plus ``offset`` for l's fixed
    policy), which alone determines the outcome of a cell.
    """
    n = len(a)
    if endorse_o is None:
        endorse_o = np.zeros(n, dtype=bool)
    sid = np.where(endorse_o, len(side_r.x) + b, a).astype(np.int64) + offset
    xr = side_r.x[a]
    if side_o is not None and n:
        xo, mo = side_o.x[b], side_o.m[b]
        xl = np.where(endorse_o, side_o.xl[b], side_r.xl[a])
        code = np.where(endorse_o, side_o.code[b], side_r.code[a])
    else:
        xo = np.full(n, np.nan)
        mo = np.full(n, np.nan)
        xl, code = side_r.xl[a], side_r.code[a]
    return {"xr": xr, "xo": xo, "mo": mo, "xl": xl, "code": code, "eo": endorse_o, "sid": sid}


def _concat_rows(rows):
    keys = ("xr", "xo", "mo", "xl", "code", "eo", "sid")
    if not rows:
        return {k: np.empty(0) for k in keys}
    return {k: np.concatenate([r[k] for r in rows]) for k in keys}


def _collapse(ctx, rows, with_o):
    n = len(rows["xr"])
    if n == 0:
        return [], 0
    nulls = (rows["xl"] == 0).astype(np.int64) + (rows["xr"] == 0)
    if with_o:
        nulls += (rows["xo"] == 0) & (rows["mo"] == 0)
    # one representative per endorsed offer: the one with the most null offers
    sid = rows["sid"]
    _, pick = np.unique(sid * 4 + (3 - nulls), return_index=True)
    pick = pick[np.r_[True, np.diff(sid[pick]) != 0]]
    weight = np.bincount(sid)[sid[pick]]
    rows = {k: v[pick] for k, v in rows.items()}
    nulls = nulls[pick]

    eo = rows["eo"].astype(bool)
    win_x = np.where(eo, rows["xo"], rows["xr"])
    win_m = np.where(eo, rows["mo"], 0.0)
    code = rows["code"]
    # outcome key: (code, endorsed, R policy if it can win, rent, l policy if it can win)
    kx = np.where(code >= 0, np.round(win_x, 12), 1e300)
    km = np.where(code >= 0, np.round(win_m, 12), 1e300)
    kl = np.where(code <= 0, np.round(rows["xl"], 12), 1e300)
    key = np.stack([code.astype(float), eo.astype(float), kx, km, kl], axis=1)
    _, inv = np.unique(key, axis=0, return_inverse=True)
    inv = inv.ravel()
    counts = np.bincount(inv, weights=weight)
    order = np.lexsort((-nulls, inv))
    firsts = order[np.r_[0, np.nonzero(np.diff(inv[order]))[0] + 1]]
    eqs = [_to_equilibrium(rows, j, with_o, int(counts[inv[j]])) for j in firsts]
    return eqs, n


def _to_equilibrium(rows, j, with_o, count):
    xl = float(rows["xl"][j])
    offer_l = Platform(xl)
    offer_r = Platform(float(rows["xr"][j]))
    offer_o = Platform(float(rows["xo"][j]), float(rows["mo"][j])) if with_o else None
    eo = bool(rows["eo"][j])
    cand = PoliticianId.o if eo else PoliticianId.r
    t_R = MatchTicket(Party.R, cand, offer_o if eo else offer_r)
    t_L = MatchTicket(Party.L, PoliticianId.l, offer_l)
    code = int(rows["code"][j])
    if code > 0:
        res = ElectionResult.decisive(t_R)
    elif code < 0:
        res = ElectionResult.decisive(t_L)
    else:
        res = ElectionResult.lottery(t_L, t_R)
    return OracleEquilibrium(offer_l, offer_r, offer_o, cand, res, True, count)


# verification -------------------------------------------------------------


@dataclass
class GameCheck:
    game: Game
    closed: EquilibriumOutcome
    oracle: OracleResult
    agree_winner: bool
    agree_policy: bool
    agree_rent: bool
    matched: OracleEquilibrium | None
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree_winner and self.agree_policy and self.agree_rent


@dataclass
class VerificationReport:
    params: ModelParams
    timing: str
    tol_policy: float
    tol_rent: float
    checks: list[GameCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def discrepancies(self) -> list[str]:
        return [d for c in self.checks for d in c.discrepancies]


def _match(closed_branches, eq_branches, tol_p, tol_m):
    """(same winners, policy ok, rent ok, error) for one oracle equilibrium."""
    if [b[0] for b in closed_branches] != [b[0] for b in eq_branches]:
        return False, False, False, math.inf
    dp = max(abs(c[1] - e[1]) for c, e in zip(closed_branches, eq_branches))
    dm = max(abs(c[2] - e[2]) for c, e in zip(closed_branches, eq_branches))
    return True, dp <= tol_p, dp <= tol_p and dm <= tol_m, dp + dm


def check_game(closed: EquilibriumOutcome, oracle: OracleResult,
               tol_p: float, tol_m: float) -> GameCheck:
    cb = _branches(closed.result)
    best, best_err = None, math.inf
    agree = [False, False, False]
    for eq in oracle.equilibria:
        w, pol, rent, err = _match(cb, eq.branches(), tol_p, tol_m)
        agree = [agree[0] or w, agree[1] or pol, agree[2] or rent]
        if w and err < best_err:
            best, best_err = eq, err
    problems = []
    if not oracle.equilibria:
        problems.append(f"{closed.case}: oracle found no pure equilibrium on this grid")
    elif not agree[0]:
        seen = sorted({eq.result.label() for eq in oracle.equilibria})
        problems.append(f"{closed.case}: winner {closed.winner} not among oracle winners {seen}")
    elif not all(agree):
        b = best.branches()
        problems.append(
            f"{closed.case}: closed form {cb} vs nearest oracle {b} "
            f"(profile l={best.offer_l}, r={best.offer_r}, o={best.offer_o}; "
            f"tol policy={tol_p:.3g}, rent={tol_m:.3g})"
        )
    return GameCheck(closed.case.game, closed, oracle, *agree, best, problems)


def verify_closed_form(params: ModelParams, grid: GridSpec | None = None,
                       timing: str = "responsive", games=(Game.INSIDER, Game.OUTSIDER),
                       closed: dict | None = None,
                       tie_eps: float = TIE_EPS) -> VerificationReport:
    """Compare closed-form outcomes with the grid oracle.

    ``closed`` may map a Game to a substitute EquilibriumOutcome (used as a
    negative control).  Agreement means some certified oracle equilibrium has
    the same winning ticket(s) with policy and rent inside the tolerances.
    """
    grid = grid or GridSpec.default(params)
    tol_p = grid.policy_step + grid.epsilon
    tol_m = grid.rent_step + grid.epsilon
    checks = []
    for game in games:
        game = Game(game)
        cf = (closed or {}).get(game) or closed_form.solve(params, game, tie_eps)
        orc = find_stage1_equilibria(params, grid, game, timing, tie_eps=tie_eps)
        checks.append(check_game(cf, orc, tol_p, tol_m))
    return VerificationReport(params, timing, tol_p, tol_m, checks)
