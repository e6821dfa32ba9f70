"""Reference parameter vectors, one per table row, and random draws."""

from __future__ import annotations

import numpy as np

from .closed_form import Game
from .model import ModelParams


def with_valences(V_r: float, V_o: float, *, b_L: float = -1.0, b_R: float = 1.0,
                  k_l: float = -0.5, k_r: float = 0.5, k_o: float = 0.5,
                  alpha_L: float = 1.0, nu_l: float = 1.0, alpha_R: float = 1.0) -> ModelParams:
    """Build parameters hitting the requested relative valences exactly."""
    base = alpha_L * nu_l
    return ModelParams(b_L=b_L, b_R=b_R, alpha_L=alpha_L, alpha_R=alpha_R,
                       k_l=k_l, k_r=k_r, k_o=k_o, nu_l=nu_l,
                       nu_r=(V_r + base) / alpha_R, nu_o=V_o + base)


INSIDER_FIXTURES = {
    1: with_valences(-0.5, -0.5, k_l=-0.3),
    2: with_valences(0.0, 0.0),
    3: with_valences(0.4, 0.4, k_r=0.6),
}

OUTSIDER_FIXTURES = {
    1: with_valences(-0.6, -0.2, k_l=-1.0),
    2: with_valences(-0.2, -0.5, k_l=-0.3),
    3: with_valences(-0.4, 0.0, k_l=-0.6),
    4: with_valences(0.0, -0.3),
    5: with_valences(-0.2, 0.5, k_l=-0.1, k_o=0.3, b_R=1.0),
    6: with_valences(-0.2, 2.0, k_l=-0.1, k_o=1.5, b_R=0.5),
    7: with_valences(0.4, -0.3, k_r=0.3, k_l=-0.5),
    8: with_valences(1.5, -0.2, k_r=1.2, k_l=-0.5, b_R=0.4),
    9: with_valences(0.3, 1.0, b_R=0.8, k_r=0.5, k_o=0.6),
    10: with_valences(0.3, 0.2, b_R=0.9, k_r=0.1),
    11: with_valences(0.7, 0.6, b_R=0.5, k_r=0.3),
}


def fixture(game: Game, index: int) -> ModelParams:
    table = INSIDER_FIXTURES if Game(game) is Game.INSIDER else OUTSIDER_FIXTURES
    return table[index]


def all_fixtures():
    """Yield (game, case index, params) for every table row."""
    for i, p in INSIDER_FIXTURES.items():
        yield Game.INSIDER, i, p
    for i, p in OUTSIDER_FIXTURES.items():
        yield Game.OUTSIDER, i, p


def random_params(rng: np.random.Generator) -> ModelParams:
    u = rng.uniform
    return ModelParams(
        b_L=u(-1.0, -0.05), b_R=u(0.05, 1.0),
        alpha_L=u(0.0, 2.0), alpha_R=u(0.0, 2.0),
        k_l=u(-1.0, -0.05), k_r=u(0.05, 1.0), k_o=u(0.0, 1.5),
        nu_l=u(0.0, 1.0), nu_r=u(0.0, 1.0), nu_o=u(0.0, 1.0),
    )


def random_draws(seed: int, n: int) -> list[ModelParams]:
    rng = np.random.default_rng(seed)
    return [random_params(rng) for _ in range(n)]
