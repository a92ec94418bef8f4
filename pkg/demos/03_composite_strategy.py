"""
Both coins in every step. With A's coin acting first (order "BA"), A can
force a draw by taking xi = pi/2; otherwise the player with the larger angle
wins. With B's coin first (order "AB"), zeta = pi/2 forces the draw instead.

Run:  python demos/03_composite_strategy.py
"""
# %%
import math

from qwparrondo import GameConfig, PlayerCoins, play_composite, sweep_winner_region

pi = math.pi
cfg = GameConfig(steps=100, theta=pi / 4)

# %%
print("xi = pi/2, order BA:")
for zeta in (0, pi / 12, pi / 6, pi / 4, pi / 3, pi / 2):
    out = play_composite("BA", PlayerCoins(pi / 2, zeta), cfg)
    print(f"  zeta={zeta:6.4f}  P_L-P_R={out.p_left - out.p_right:+.2e}  {out.winner.value}")

# %% [markdown]
# Winner map over (xi, zeta) in [0, pi/2]^2. Rows are xi (top = 0), columns
# zeta (left = 0). J = joint.

# %%
for order in ("BA", "AB"):
    m = sweep_winner_region(order, cfg, 13)
    print(f"\norder {order}")
    for i in range(len(m.angles)):
        print("  " + " ".join(w.value[0] for w in m.winners[i]))
