"""
Walking on a line with the three-angle coin.

Run:  python demos/01_walk_distributions.py
"""
# %%
import math

import numpy as np

from qwparrondo import GAME_INITIAL_STATE, coin, distribution, evolve, moments, side_probabilities

pi = math.pi
T = 100

# %% [markdown]
# The Hadamard walk: theta = pi/4 and no phases. Starting from
# (|0> + i|1>)/sqrt(2) the distribution is symmetric, with two horns near
# x = +-t/sqrt(2).

# %%
d = distribution(evolve(T, GAME_INITIAL_STATE, [[coin(0, pi / 4, 0)]] * T))
sp = side_probabilities(d)
print(f"Hadamard, t={T}: P_L={sp.p_left:.6f}  P_R={sp.p_right:.6f}  P_0={sp.p_origin:.6f}")
peak = d.positions[np.argmax(d.p)]
print(f"highest peak at x={peak}  (t/sqrt(2) = {T / math.sqrt(2):.1f})")

# %% [markdown]
# theta sets the spread: variance / t^2 tends to 1 - sin(theta).

# %%
print("\ntheta      var/t^2    1 - sin(theta)")
for theta in np.linspace(0, pi / 2, 7):
    d = distribution(evolve(T, GAME_INITIAL_STATE, [[coin(0, theta, 0)]] * T))
    _, var = moments(d)
    print(f"{theta:6.4f}   {var / T**2:9.5f}   {1 - math.sin(theta):9.5f}")

# %% [markdown]
# A phase on the diagonal (xi) pushes mass left; a phase on the
# off-diagonal (zeta) pushes it right. One step already shows it:
# P(-1) = (1 + sin 2theta sin(xi - zeta)) / 2.

# %%
print("\n(xi, theta, zeta)            P_L      P_R")
for label, (xi, theta, zeta) in {
    "(pi/6, pi/6, 0)": (pi / 6, pi / 6, 0),
    "(0, pi/6, pi/6)": (0, pi / 6, pi / 6),
    "(5pi/12, pi/3, 0)": (5 * pi / 12, pi / 3, 0),
    "(0, pi/3, 5pi/12)": (0, pi / 3, 5 * pi / 12),
}.items():
    sp = side_probabilities(distribution(evolve(T, GAME_INITIAL_STATE, [[coin(xi, theta, zeta)]] * T)))
    print(f"{label:26s} {sp.p_left:8.5f} {sp.p_right:8.5f}")
