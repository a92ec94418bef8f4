"""
Discrete-time quantum walk on a line with a two-player coin game on top.

>>> from qwparrondo import GameConfig, PlayerCoins, play_composite
>>> out = play_composite("BA", PlayerCoins(xi_a=1.5707963267948966, zeta_b=0.5), GameConfig())
>>> out.winner.value
'Joint'
"""

from .coins import (
    CoinParams,
    InvalidParameterError,
    build_coin,
    coin,
    composite_ab,
    composite_ba,
    hadamard,
    is_unitary,
    multiply,
    player_a_coin,
    player_b_coin,
)
from .dsl import ParseError, compile_strategy, expand, parse, program_length, render
from .game import (
    GameConfig,
    GameOutcome,
    Order,
    PlayerCoins,
    Winner,
    WinnerRegionMap,
    asymmetry_margin,
    decide_winner,
    epsilon_strategy,
    play_alternating,
    play_composite,
    play_program,
    play_solo,
    sweep_winner_region,
)
from .walk import (
    GAME_INITIAL_STATE,
    Distribution,
    InitialState,
    SideProbabilities,
    WalkState,
    apply_step,
    dense_oracle_evolve,
    distribution,
    evolve,
    init_state,
    moments,
    side_probabilities,
)

__version__ = "0.1.0"
