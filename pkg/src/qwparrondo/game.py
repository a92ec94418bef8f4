"""
Two-player game played on a single walker.

Player A holds the coin ``B(xi, theta, 0)``, player B holds ``B(0, theta, zeta)``;
``theta`` is shared. After ``t`` steps from ``(|0> + i|1>)/sqrt(2)``, A wins if
the walker is more likely right of the origin, B wins if it is more likely
left, and both win jointly when the two sides are equal to within
``eq_tolerance``. Probability at the origin counts for neither side.

The strategies differ only in which coins are used at each step:

* solo: one player's coin every step,
* alternating: the two coins on alternate steps,
* composite: both coins inside every step (``"BA"`` order = A's coin acts first,
  then B's, i.e. the product ``B_B @ B_A``; ``"AB"`` is the reverse).
"""

from __future__ import annotations

import enum
import math
import os
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .coins import ComplexMatrix2, player_a_coin, player_b_coin
from .dsl import StepProgram
from .walk import (
    GAME_INITIAL_STATE,
    SideProbabilities,
    distribution,
    evolve,
    side_probabilities,
)

__all__ = [
    "Winner",
    "Order",
    "GameConfig",
    "PlayerCoins",
    "GameOutcome",
    "WinnerRegionMap",
    "decide_winner",
    "player_coins",
    "play_program",
    "play_solo",
    "play_alternating",
    "play_composite",
    "solo_program",
    "alternating_program",
    "composite_program",
    "sweep_winner_region",
    "asymmetry_margin",
    "epsilon_strategy",
]

HALF_PI = math.pi / 2
# Slack on the [0, pi/2] game range so that values like 6 * (pi/12) pass.
_RANGE_SLACK = 1e-12


class Winner(str, enum.Enum):
    A = "A"
    B = "B"
    JOINT = "Joint"

    def __str__(self) -> str:
        return self.value


class Order(str, enum.Enum):
    """Coin order inside a composite step, named after the matrix product."""

    BA = "BA"  # B_B @ B_A: A's coin acts first
    AB = "AB"  # B_A @ B_B: B's coin acts first

    @property
    def tags(self) -> tuple[str, str]:
        # tags are in application order, i.e. the reverse of the product
        return ("A", "B") if self is Order.BA else ("B", "A")


@dataclass(frozen=True)
class GameConfig:
    steps: int = 100
    theta: float = math.pi / 4
    eq_tolerance: float = 1e-9
    min_increment: float = 0.01

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta}")
        if not 0 < self.eq_tolerance <= 1e-6:
            raise ValueError(f"eq_tolerance must be in (0, 1e-6], got {self.eq_tolerance}")
        if not 0 < self.min_increment < HALF_PI:
            raise ValueError(f"min_increment must be in (0, pi/2), got {self.min_increment}")


@dataclass(frozen=True)
class PlayerCoins:
    xi_a: float
    zeta_b: float

    def __post_init__(self) -> None:
        for name, v in (("xi_a", self.xi_a), ("zeta_b", self.zeta_b)):
            if not -_RANGE_SLACK <= v <= HALF_PI + _RANGE_SLACK:
                raise ValueError(f"{name} must lie in [0, pi/2], got {v}")


@dataclass(frozen=True)
class GameOutcome:
    p_left: float
    p_right: float
    p_origin: float
    winner: Winner

    @property
    def margin(self) -> float:
        """``p_right - p_left``: positive favours A, negative favours B."""
        return self.p_right - self.p_left


def decide_winner(sp: SideProbabilities, cfg: GameConfig) -> GameOutcome:
    diff = sp.p_right - sp.p_left
    if diff > cfg.eq_tolerance:
        winner = Winner.A
    elif -diff > cfg.eq_tolerance:
        winner = Winner.B
    else:
        winner = Winner.JOINT
    return GameOutcome(sp.p_left, sp.p_right, sp.p_origin, winner)


def player_coins(coins: PlayerCoins, theta: float) -> dict[str, ComplexMatrix2]:
    """Tag-to-matrix mapping used to run DSL programs."""
    return {
        "A": player_a_coin(coins.xi_a, theta),
        "B": player_b_coin(coins.zeta_b, theta),
    }


def solo_program(player: str, steps: int) -> StepProgram:
    return ((str(player),),) * steps


def alternating_program(first: str, steps: int) -> StepProgram:
    first = str(first)
    second = "B" if first == "A" else "A"
    return tuple((first,) if i % 2 == 0 else (second,) for i in range(steps))


def composite_program(order: Order | str, steps: int) -> StepProgram:
    return (Order(order).tags,) * steps


def play_program(program: StepProgram, coins: PlayerCoins, cfg: GameConfig) -> GameOutcome:
    """Run an arbitrary tag program on the game's initial state and adjudicate."""
    state = evolve(len(program), GAME_INITIAL_STATE, program, player_coins(coins, cfg.theta))
    return decide_winner(side_probabilities(distribution(state)), cfg)


def play_solo(player: str, coins: PlayerCoins, cfg: GameConfig) -> GameOutcome:
    return play_program(solo_program(player, cfg.steps), coins, cfg)


def play_alternating(first: str, coins: PlayerCoins, cfg: GameConfig) -> GameOutcome:
    """Coins on alternate steps; ``first`` plays steps 1, 3, 5, ..."""
    return play_program(alternating_program(first, cfg.steps), coins, cfg)


def play_composite(order: Order | str, coins: PlayerCoins, cfg: GameConfig) -> GameOutcome:
    return play_program(composite_program(order, cfg.steps), coins, cfg)


@dataclass(frozen=True)
class WinnerRegionMap:
    """
    Composite-game outcomes on a uniform ``(xi, zeta)`` grid over ``[0, pi/2]^2``.

    ``margin[i, j]`` and ``winners[i, j]`` belong to ``xi = angles[i]``,
    ``zeta = angles[j]``.
    """

    order: Order
    angles: NDArray[np.float64]
    margin: NDArray[np.float64]
    winners: NDArray[np.object_] = field(repr=False)

    def rows(self) -> Iterator[tuple[float, float, float, Winner]]:
        for i, xi in enumerate(self.angles):
            for j, zeta in enumerate(self.angles):
                yield float(xi), float(zeta), float(self.margin[i, j]), self.winners[i, j]


def _sweep_workers() -> int:
    try:
        return max(1, int(os.environ.get("QWALK_THREADS", "1")))
    except ValueError:
        return 1


def sweep_winner_region(
    order: Order | str,
    cfg: GameConfig,
    resolution: int,
    workers: int | None = None,
) -> WinnerRegionMap:
    """
    Play the composite game at every point of a ``resolution x resolution`` grid.

    ``workers`` (default: ``QWALK_THREADS`` env var, else 1) sets thread
    fan-out; results are placed by grid index so output does not depend on it.
    """
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    order = Order(order)
    angles = np.linspace(0.0, HALF_PI, resolution)
    program = composite_program(order, cfg.steps)
    cells = [(i, j) for i in range(resolution) for j in range(resolution)]

    def play(cell: tuple[int, int]) -> GameOutcome:
        i, j = cell
        return play_program(program, PlayerCoins(angles[i], angles[j]), cfg)

    workers = _sweep_workers() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(play, cells))
    else:
        outcomes = [play(c) for c in cells]

    margin = np.empty((resolution, resolution))
    winners = np.empty((resolution, resolution), dtype=object)
    for (i, j), out in zip(cells, outcomes):
        margin[i, j] = out.margin
        winners[i, j] = out.winner
    return WinnerRegionMap(order, angles, margin, winners)


def asymmetry_margin(player: str, angle: float, cfg: GameConfig) -> float:
    """``|P_L - P_R|`` after a solo game with the given ``xi`` (A) or ``zeta`` (B)."""
    if not 0 < angle <= HALF_PI + _RANGE_SLACK:
        raise ValueError(f"angle must be in (0, pi/2], got {angle}")
    coins = PlayerCoins(angle, 0.0) if str(player) == "A" else PlayerCoins(0.0, angle)
    out = play_solo(player, coins, cfg)
    return abs(out.p_left - out.p_right)


def epsilon_strategy(cfg: GameConfig) -> float:
    """Parameter to pick when players cannot consult: the smallest allowed nonzero angle."""
    return cfg.min_increment
