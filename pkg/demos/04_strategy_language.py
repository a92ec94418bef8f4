"""
Strategies as text. Letters in a token are applied left to right before one
shift; parenthesised groups repeat with ^n.

Run:  python demos/04_strategy_language.py
"""
# %%
import math

from qwparrondo import GameConfig, ParseError, PlayerCoins, compile_strategy, play_program, render

pi = math.pi
coins = PlayerCoins(xi_a=pi / 3, zeta_b=pi / 6)

for src in ("(A)^100", "(A B)^50", "(AB)^100", "(BA)^100", "(A AB)^25 (B)^50"):
    program = compile_strategy(src)
    out = play_program(program, coins, GameConfig(steps=len(program)))
    print(f"{src:20s} t={len(program):3d}  P_L={out.p_left:.4f}  P_R={out.p_right:.4f}  {out.winner.value}")

# %% canonical form
print("\n" + render(compile_strategy("A A A B AB AB")))

# %% errors point at the offending character
for bad in ("A^2", "(A B", "(A)^0", "AAAAB"):
    try:
        compile_strategy(bad)
    except ParseError as e:
        print(f"{bad!r:10s} -> {e}")
