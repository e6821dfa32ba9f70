"""Acceptance checks 1-9.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even when
output capture is on) or ``python tests/test_acceptance.py``.
"""

import time
from collections import Counter
from dataclasses import replace

import numpy as np
import pytest

from nomgame import closed_form as cf
from nomgame.analysis import (
    PARTY_TAG,
    Effect,
    Polarization,
    compare_games,
    has_voter_tag,
    welfare_reduction_condition,
)
from nomgame.cli import main
from nomgame.fixtures import INSIDER_FIXTURES, OUTSIDER_FIXTURES, random_params
from nomgame.oracle import GridSpec, verify_closed_form

LINES = []


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}"
        LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
    return emit


def _per_call_seconds(fn, arg, reps=2000):
    t = time.perf_counter()
    for _ in range(reps):
        fn(arg)
    return (time.perf_counter() - t) / reps


def _branches(out):
    return sorted((t.label(), t.policy, t.rent) for t in out.result.tickets)


def expected_insider(i, p):
    if i == 1:
        return [("L/l", max(p.k_l, p.V_r), 0.0)]
    if i == 2:
        return [("L/l", 0.0, 0.0), ("R/r", 0.0, 0.0)]
    return [("R/r", min(p.k_r, p.V_r), 0.0)]


def expected_outsider(i, p):
    V_r, V_o, b = p.V_r, p.V_o, p.b_R
    table = {
        1: [("L/l", max(p.k_l, V_o), 0.0)],
        2: [("L/l", max(p.k_l, V_r), 0.0)],
        3: [("L/l", 0.0, 0.0), ("R/o", 0.0, 2 * abs(max(p.k_l, V_r)))],
        4: [("L/l", 0.0, 0.0), ("R/r", 0.0, 0.0)],
        5: [("R/o", min(p.k_o, V_o), abs(max(p.k_l, V_r) - b) - abs(min(p.k_o, V_o) - b))],
        6: [("R/o", 2 * b - max(p.k_l, V_r), 0.0)],
        7: [("R/r", min(p.k_r, V_r), 0.0)],
        8: [("R/r", 2 * b - max(p.k_l, V_o), 0.0)],
        9: [("R/o", min(b, V_o), abs(min(b, V_r) - b) - abs(min(b, V_o) - b))],
        10: [("R/r", min(b, V_r), 0.0)],
        11: [("R/r", b, 0.0)],
    }
    return table[i]


def _close(a, b, tol):
    return len(a) == len(b) and all(
        x[0] == y[0] and abs(x[1] - y[1]) <= tol and abs(x[2] - y[2]) <= tol for x, y in zip(a, b))


def test_criterion_1_insider_table(report):
    bad, slow = [], []
    for i, p in INSIDER_FIXTURES.items():
        out = cf.solve_insider(p)
        if out.case.index != i or not _close(_branches(out), expected_insider(i, p), 1e-12):
            bad.append(i)
        if _per_call_seconds(cf.solve_insider, p) >= 1e-3:
            slow.append(i)
    ok = not bad and not slow
    report(1, ok, f"insider rows reproduced: {3 - len(bad)}/3, slower than 1 ms: {slow}")
    assert ok


def test_criterion_2_outsider_table(report):
    bad, slow = [], []
    for i, p in OUTSIDER_FIXTURES.items():
        out = cf.solve_outsider(p)
        if out.case.index != i or not _close(_branches(out), expected_outsider(i, p), 1e-12):
            bad.append(i)
        if _per_call_seconds(cf.solve_outsider, p) >= 1e-3:
            slow.append(i)
    m5 = cf.solve_outsider(OUTSIDER_FIXTURES[5]).offer_o.rent
    m9 = cf.solve_outsider(OUTSIDER_FIXTURES[9]).offer_o.rent
    rents_ok = abs(m5 - 0.4) <= 1e-12 and abs(m9 - 0.5) <= 1e-12
    ok = not bad and not slow and rents_ok
    report(2, ok, f"outsider rows reproduced: {11 - len(bad)}/11, slower than 1 ms: {slow}, "
                  f"m_o case 5 = {m5:.12g}, case 9 = {m9:.12g}")
    assert ok


def test_criterion_3_oracle_equivalence(report):
    rng = np.random.default_rng(20240603)
    draws = [random_params(rng) for _ in range(200)]
    t = time.perf_counter()
    n_nb = 0
    winner_miss, value_miss = Counter(), Counter()
    all_value_miss = 0
    for p in draws:
        grid = GridSpec.default(p)
        rep = verify_closed_form(p, grid)
        nonboundary = cf.boundary_distance(p) > 2 * grid.policy_step
        n_nb += nonboundary
        for c in rep.checks:
            all_value_miss += not c.ok
            if not nonboundary:
                continue
            if not c.agree_winner:
                winner_miss[str(c.closed.case)] += 1
            elif not c.ok:
                value_miss[str(c.closed.case)] += 1
    elapsed = time.perf_counter() - t
    ok = not winner_miss and not value_miss and elapsed < 60
    report(3, ok, f"{n_nb}/200 non-boundary draws; winner mismatches {dict(winner_miss)}; "
                  f"policy/rent mismatches {dict(value_miss)}; all draws incl. boundary: "
                  f"{all_value_miss} game checks off; {elapsed:.1f} s")
    assert ok


def _zero_valence_draws(rng, n):
    out = []
    for i in range(n):
        p = random_params(rng)
        base = p.alpha_L * p.nu_l
        if i % 2 == 0:
            # realized candidate r with V_r = 0 (outsider trails: V_o <= 0)
            p = replace(p, nu_r=base / p.alpha_R, nu_o=base * rng.uniform(0, 1))
        else:
            # realized candidate o with V_o = 0, insider behind
            p = replace(p, nu_o=base, nu_r=base * rng.uniform(0, 0.95) / p.alpha_R)
        out.append(p)
    return out


def test_criterion_4_zero_valence_converges(report):
    rng = np.random.default_rng(41)
    bad = 0
    for i, p in enumerate(_zero_valence_draws(rng, 50)):
        outs = [cf.solve_outsider(p)]
        if i % 2 == 0:
            outs.append(cf.solve_insider(p))
        bad += any(t.policy != 0.0 for o in outs for t in o.result.tickets)
    report(4, bad == 0, f"draws with a nonzero winning/lottery policy: {bad}/50")
    assert bad == 0


def test_criterion_5_polarization_sign(report):
    rng = np.random.default_rng(51)
    neg, zero = Counter(), Counter()
    n_neg = n_zero = 0
    for i in range(500):
        p = random_params(rng)
        if i % 5 == 0:
            p = replace(p, nu_r=p.alpha_L * p.nu_l / p.alpha_R)
        w = compare_games(p)
        if abs(p.V_r) <= 1e-9:
            n_zero += 1
            if w.polarization_effect is Polarization.MORE_CENTRIST:
                zero[str(w.cases[1])] += 1
        elif p.V_r < 0:
            n_neg += 1
            if w.polarization_effect is Polarization.MORE_EXTREME:
                neg[str(w.cases[1])] += 1
    violations = sum(neg.values()) + sum(zero.values())
    report(5, violations == 0,
           f"V_r<0: {sum(neg.values())}/{n_neg} MoreExtreme {dict(neg)}; "
           f"V_r=0: {sum(zero.values())}/{n_zero} MoreCentrist {dict(zero)}")
    assert violations == 0


def test_criterion_6_welfare_conditions(report):
    rng = np.random.default_rng(61)
    voter, party = Counter(), Counter()
    n_voter_neg = 0
    for _ in range(500):
        p = random_params(rng)
        w = compare_games(p)
        tags = welfare_reduction_condition(p)
        neg = w.voter_effect is Effect.NEGATIVE
        n_voter_neg += neg
        if neg != has_voter_tag(tags):
            voter[(str(w.cases[1]), "untagged" if neg else "tag without loss")] += 1
        if w.party_effect is Effect.NEGATIVE and PARTY_TAG not in tags:
            party[str(w.cases[1])] += 1
    violations = sum(voter.values()) + sum(party.values())
    report(6, violations == 0,
           f"voter losses {n_voter_neg}; voter mismatches {dict(voter)}; "
           f"party losses outside listed case {dict(party)}")
    assert violations == 0


def test_criterion_7_outsider_bliss_independence(report):
    rng = np.random.default_rng(71)
    flips, enters = Counter(), 0
    tried = 0
    for _ in range(100):
        p = random_params(rng)
        case = cf.classify_outsider(p).index
        base = compare_games(p).labels()
        for _ in range(20):
            q = replace(p, k_o=float(rng.uniform(0, 1.5)))
            if cf.classify_outsider(q).index == case:
                break
        else:
            continue
        tried += 1
        if compare_games(q).labels() != base:
            flips[f"WithOutsider/{case}"] += 1
            enters += case == 5 and min(p.k_o, p.V_o) != min(q.k_o, q.V_o)
    n = sum(flips.values())
    report(7, n == 0, f"label changes {n}/{tried} {dict(flips)}; of these, {enters} are draws "
                      f"where k_o sets the outsider policy; changes elsewhere: {n - enters}")
    assert n == 0


def test_criterion_8_case_totality(report):
    rng = np.random.default_rng(81)
    errors = 0
    seen = Counter()
    for _ in range(10_000):
        try:
            seen[cf.classify_outsider(random_params(rng)).index] += 1
        except cf.CaseConsistencyError:
            errors += 1
    report(8, errors == 0, f"consistency errors {errors}/10000; cases seen {sorted(seen)}")
    assert errors == 0


def test_criterion_9_negative_control(report, tmp_path, capsys):
    import yaml
    cfg = tmp_path / "case5.yaml"
    cfg.write_text(yaml.safe_dump(OUTSIDER_FIXTURES[5].to_dict()))
    code = main(["verify", "--config", str(cfg), "--negative-control"])
    err = capsys.readouterr().err
    named = "discrepancy" in err and "WithOutsider/5" in err
    ok = code == 1 and named
    report(9, ok, f"exit code {code}, discrepancy named: {named}")
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "--no-header"]))
