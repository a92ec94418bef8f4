"""
The two-player game: nobody wins alone, and alternating the coins does not
balance the walk either: whoever moves first loses.

Run:  python demos/02_solo_and_alternating.py
"""
# %%
import math

from qwparrondo import GameConfig, PlayerCoins, play_alternating, play_solo

pi = math.pi
cfg = GameConfig(steps=100, theta=pi / 4)

# %% [markdown]
# Solo play. A's coin B(xi, theta, 0) always tips the walker to the left,
# which is B's side; B's coin tips it right. The lead grows with the angle.

# %%
print("angle     A alone: P_L-P_R  winner   B alone: P_R-P_L  winner")
for k in range(1, 13, 2):
    a = k * pi / 24
    out_a = play_solo("A", PlayerCoins(a, 0), cfg)
    out_b = play_solo("B", PlayerCoins(0, a), cfg)
    print(f"{a:6.4f}   {out_a.p_left - out_a.p_right:14.6f}  {out_a.winner.value:6s}"
          f"   {out_b.p_right - out_b.p_left:14.6f}  {out_b.winner.value}")

# %% [markdown]
# Alternating coins with xi = zeta. After two steps the outer sites +-2 are
# reached only through the diagonal coin entries, all of modulus cos(theta),
# so P_L - P_R = cos^2(theta) sin(2 theta) sin(xi) no matter what the second
# coin is. The first mover's bias survives, and swapping the starter mirrors
# the outcome exactly.

# %%
xi = pi / 6
print(f"\nclosed form at t=2: {math.cos(pi / 4) ** 2 * math.sin(pi / 2) * math.sin(xi):.6f}")
print("t     A first: P_L-P_R  winner    B first: P_L-P_R  winner")
for t in (2, 3, 10, 11, 100, 101):
    c = GameConfig(steps=t, theta=pi / 4)
    a = play_alternating("A", PlayerCoins(xi, xi), c)
    b = play_alternating("B", PlayerCoins(xi, xi), c)
    print(f"{t:<4d}  {a.p_left - a.p_right:16.6f}  {a.winner.value:6s}   "
          f"{b.p_left - b.p_right:16.6f}  {b.winner.value}")
