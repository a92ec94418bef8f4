"""Data behind the distribution and winner-region figures."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coins import coin
from .game import GameConfig, Order, WinnerRegionMap, sweep_winner_region
from .walk import (
    GAME_INITIAL_STATE,
    Distribution,
    SideProbabilities,
    distribution,
    evolve,
    side_probabilities,
)

pi = math.pi


@dataclass(frozen=True)
class Panel:
    name: str
    xi: float
    theta: float
    zeta: float
    label: str
    expected: str  # "left" or "right": the side expected to carry more mass


# Solo walks: A's xi pushes the walker left, B's zeta pushes it right.
FIG2_PANELS = (
    Panel("a", pi / 6, pi / 6, 0.0, "(pi/6, pi/6, 0)", "left"),
    Panel("b", 0.0, pi / 6, pi / 6, "(0, pi/6, pi/6)", "right"),
    Panel("c", 5 * pi / 12, pi / 3, 0.0, "(5pi/12, pi/3, 0)", "left"),
    Panel("d", 0.0, pi / 3, 5 * pi / 12, "(0, pi/3, 5pi/12)", "right"),
)
FIG2_STEPS = 100

FIG3_CONFIG = GameConfig(steps=100, theta=pi / 4)
FIG3_RESOLUTION = 25


def panel_distribution(panel: Panel, steps: int = FIG2_STEPS) -> tuple[Distribution, SideProbabilities]:
    c = coin(panel.xi, panel.theta, panel.zeta)
    d = distribution(evolve(steps, GAME_INITIAL_STATE, [[c]] * steps))
    return d, side_probabilities(d)


def figure2(steps: int = FIG2_STEPS) -> dict[str, tuple[Panel, Distribution, SideProbabilities]]:
    return {p.name: (p, *panel_distribution(p, steps)) for p in FIG2_PANELS}


def figure3(
    cfg: GameConfig = FIG3_CONFIG,
    resolution: int = FIG3_RESOLUTION,
    order: Order = Order.BA,
) -> WinnerRegionMap:
    return sweep_winner_region(order, cfg, resolution)
