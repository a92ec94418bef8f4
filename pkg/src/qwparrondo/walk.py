"""
State-vector evolution of a discrete-time quantum walk on a line.

The joint coin/position state is stored as a ``(2, 2*t_max + 1)`` complex
array; column ``k`` holds position ``x = k - t_max``. One step applies the
step's coins to the coin register at every site, then the conditional shift:
the ``|0>`` component moves one site left and the ``|1>`` component one site
right. Capacity ``t_max`` is chosen up front so the support never reaches
the array edge, i.e. the line is effectively unbounded.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .coins import ComplexMatrix2, UNITARY_TOL, is_unitary

__all__ = [
    "InitialState",
    "GAME_INITIAL_STATE",
    "WalkState",
    "Distribution",
    "SideProbabilities",
    "CapacityError",
    "InvalidCoinError",
    "OracleScaleError",
    "init_state",
    "apply_step",
    "evolve",
    "distribution",
    "side_probabilities",
    "moments",
    "dense_oracle_evolve",
    "DENSE_ORACLE_MAX_STEPS",
]

DENSE_ORACLE_MAX_STEPS = 32


class CapacityError(ValueError):
    """Raised when a walk would outgrow its position register."""


class InvalidCoinError(ValueError):
    """Raised when a step is given a coin that is not a 2x2 unitary."""


class OracleScaleError(ValueError):
    """Raised when the dense oracle is asked for more steps than it allows."""


@dataclass(frozen=True)
class InitialState:
    """Coin state ``cos(delta/2)|0> + sin(delta/2) e^{i phi}|1>`` at the origin."""

    delta: float = math.pi / 2
    phi: float = math.pi / 2

    def __post_init__(self) -> None:
        if not (math.isfinite(self.delta) and math.isfinite(self.phi)):
            raise ValueError(f"initial-state angles must be finite: {self}")

    def amplitudes(self) -> tuple[complex, complex]:
        return (
            complex(math.cos(self.delta / 2)),
            math.sin(self.delta / 2) * complex(math.cos(self.phi), math.sin(self.phi)),
        )


# (|0> + i|1>) / sqrt(2), the starting state of every game.
GAME_INITIAL_STATE = InitialState(math.pi / 2, math.pi / 2)


@dataclass
class WalkState:
    t_max: int
    steps_done: int
    amp: NDArray[np.complex128]

    @property
    def positions(self) -> NDArray[np.int64]:
        return np.arange(-self.t_max, self.t_max + 1)

    def amplitude(self, c: int, x: int) -> complex:
        if abs(x) > self.t_max:
            return 0j
        return complex(self.amp[c, x + self.t_max])

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amp) ** 2))

    def copy(self) -> WalkState:
        return WalkState(self.t_max, self.steps_done, self.amp.copy())


@dataclass(frozen=True)
class Distribution:
    """Position probabilities ``p[k]`` for ``x = k - t``, ``x`` in ``[-t, t]``."""

    t: int
    p: NDArray[np.float64]

    @property
    def positions(self) -> NDArray[np.int64]:
        return np.arange(-self.t, self.t + 1)

    def at(self, x: int) -> float:
        if abs(x) > self.t:
            return 0.0
        return float(self.p[x + self.t])


@dataclass(frozen=True)
class SideProbabilities:
    """Mass strictly left of, strictly right of, and at the origin."""

    p_left: float
    p_right: float
    p_origin: float


def init_state(t_max: int, s: InitialState = GAME_INITIAL_STATE) -> WalkState:
    if t_max < 0:
        raise CapacityError(f"t_max must be >= 0, got {t_max}")
    amp = np.zeros((2, 2 * t_max + 1), dtype=np.complex128)
    amp[0, t_max], amp[1, t_max] = s.amplitudes()
    return WalkState(t_max, 0, amp)


def _shift(amp: NDArray[np.complex128]) -> None:
    """Conditional shift in place: |0> moves left, |1> moves right."""
    amp[0, :-1] = amp[0, 1:]
    amp[0, -1] = 0
    amp[1, 1:] = amp[1, :-1].copy()
    amp[1, 0] = 0


def apply_step(state: WalkState, coins: Sequence[ComplexMatrix2]) -> WalkState:
    """
    Advance ``state`` by one step, in place, and return it.

    Each coin in ``coins`` is applied to the coin register in list order, then
    a single shift is performed.
    """
    if state.steps_done >= state.t_max:
        raise CapacityError(
            f"walk already has {state.steps_done} steps, capacity is {state.t_max}"
        )
    if len(coins) == 0:
        raise InvalidCoinError("a step needs at least one coin")
    for c in coins:
        if not is_unitary(c, UNITARY_TOL):
            raise InvalidCoinError(f"coin is not unitary within {UNITARY_TOL}:\n{c}")
    # Only the current support [-steps_done, steps_done] is touched.
    lo, hi = state.t_max - state.steps_done, state.t_max + state.steps_done + 1
    block = state.amp[:, lo:hi]
    for c in coins:
        block = np.asarray(c) @ block
    state.amp[:, lo:hi] = block
    _shift(state.amp)
    state.steps_done += 1
    return state


def _resolve_step(step, coins: Mapping | None):
    if coins is None:
        return list(step)
    return [coins[tag] for tag in step]


def evolve(
    t_max: int,
    s: InitialState,
    program: Sequence[Sequence],
    coins: Mapping[str, ComplexMatrix2] | None = None,
) -> WalkState:
    """
    Run ``program`` from the initial state ``s``.

    Each entry of ``program`` is one step: a sequence of coin matrices, or of
    coin tags looked up in ``coins`` when that mapping is given.
    """
    if len(program) > t_max:
        raise CapacityError(f"program has {len(program)} steps, capacity is {t_max}")
    state = init_state(t_max, s)
    for step in program:
        apply_step(state, _resolve_step(step, coins))
    return state


def distribution(state: WalkState) -> Distribution:
    t = state.steps_done
    k = state.t_max
    p = np.sum(np.abs(state.amp[:, k - t : k + t + 1]) ** 2, axis=0)
    return Distribution(t, p)


def side_probabilities(d: Distribution) -> SideProbabilities:
    t = d.t
    return SideProbabilities(
        p_left=float(np.sum(d.p[:t])),
        p_right=float(np.sum(d.p[t + 1 :])),
        p_origin=float(d.p[t]),
    )


def moments(d: Distribution) -> tuple[float, float]:
    """Mean and variance of the position distribution."""
    x = d.positions.astype(np.float64)
    mean = float(np.sum(x * d.p))
    return mean, float(np.sum(x**2 * d.p) - mean**2)


def _dense_shift(t: int) -> NDArray[np.complex128]:
    n = 2 * t + 1
    left = np.eye(n, k=1)  # |x-1><x|
    right = np.eye(n, k=-1)  # |x+1><x|
    p0 = np.diag([1.0, 0.0])
    p1 = np.diag([0.0, 1.0])
    return (np.kron(p0, left) + np.kron(p1, right)).astype(np.complex128)


def dense_oracle_evolve(
    t: int,
    s: InitialState,
    program: Sequence[Sequence],
    coins: Mapping[str, ComplexMatrix2] | None = None,
    max_steps: int = DENSE_ORACLE_MAX_STEPS,
) -> WalkState:
    """
    Reference evolution built from explicit dense step unitaries.

    Every step is the full ``2(2t+1)``-dimensional matrix
    ``S @ (C_k kron I) @ ... @ (C_1 kron I)``, applied by a matrix-vector
    product. Meant for checking :func:`evolve` at small ``t`` only.
    """
    if t > max_steps:
        raise OracleScaleError(f"dense oracle is limited to {max_steps} steps, got {t}")
    if len(program) > t:
        raise CapacityError(f"program has {len(program)} steps, capacity is {t}")
    n = 2 * t + 1
    shift = _dense_shift(t)
    eye = np.eye(n)
    psi = np.zeros(2 * n, dtype=np.complex128)
    a0, a1 = s.amplitudes()
    psi[t], psi[n + t] = a0, a1
    for step in program:
        u = np.eye(2 * n, dtype=np.complex128)
        for c in _resolve_step(step, coins):
            u = np.kron(np.asarray(c), eye) @ u
        psi = (shift @ u) @ psi
    return WalkState(t, len(program), psi.reshape(2, n))
