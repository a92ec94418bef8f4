"""
End-to-end checks of the simulator and the game claims.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in order.
Tolerances are fixed here and are not meant to be tuned.
"""

from __future__ import annotations

import csv
import json
import math
import tempfile
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import dsl
from .coins import coin, composite_ab, composite_ba, multiply, player_a_coin, player_b_coin
from .figures import figure3
from .game import (
    GameConfig,
    Order,
    PlayerCoins,
    Winner,
    alternating_program,
    play_alternating,
    play_composite,
    play_solo,
)
from .output import write_figure_bundle
from .walk import (
    GAME_INITIAL_STATE,
    InitialState,
    dense_oracle_evolve,
    distribution,
    evolve,
    moments,
    side_probabilities,
)

pi = math.pi
DEFAULT_SEED = 20260

ALGEBRA_TOL = 1e-12
SYMMETRY_TOL = 1e-10
VARIANCE_REL_TOL = 0.05
NARROW_LOSS_BOUND = 0.1


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


def _solo_distribution(c, steps: int):
    return distribution(evolve(steps, GAME_INITIAL_STATE, [[c]] * steps))


def check_first_step_closed_form(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for xi, theta, zeta in rng.uniform(-pi, pi, size=(200, 3)):
        d = _solo_distribution(coin(xi, theta, zeta), 1)
        bias = math.sin(2 * theta) * math.sin(xi - zeta)
        worst = max(worst, abs(d.at(-1) - 0.5 * (1 + bias)), abs(d.at(1) - 0.5 * (1 - bias)))
    return CheckResult(
        1,
        "one-step probabilities 1/2[1 +- sin2theta sin(xi-zeta)]",
        worst <= ALGEBRA_TOL,
        f"max error {worst:.2e} over 200 triples (tol {ALGEBRA_TOL:g})",
    )


def check_symmetry(rng: np.random.Generator) -> CheckResult:
    worst_mirror = worst_side = 0.0
    for xi in (0.0, pi / 6, pi / 3):
        d = _solo_distribution(coin(xi, pi / 4, xi), 100)
        sp = side_probabilities(d)
        worst_mirror = max(worst_mirror, float(np.max(np.abs(d.p - d.p[::-1]))))
        worst_side = max(worst_side, abs(sp.p_left - sp.p_right))
    ok = worst_mirror <= SYMMETRY_TOL and worst_side <= SYMMETRY_TOL
    return CheckResult(
        2,
        "xi = zeta gives a mirror-symmetric distribution (t=100)",
        ok,
        f"max |P(x)-P(-x)| {worst_mirror:.2e}, max |P_L-P_R| {worst_side:.2e} (tol {SYMMETRY_TOL:g})",
    )


def check_variance(rng: np.random.Generator) -> CheckResult:
    t = 100
    _, var = moments(_solo_distribution(coin(0.0, pi / 4, 0.0), t))
    target = 1 - math.sin(pi / 4)
    rel = abs(var / t**2 - target) / target
    _, var0 = moments(_solo_distribution(coin(0.0, 0.0, 0.0), t))
    ballistic = abs(var0 - t**2) <= ALGEBRA_TOL * t**2
    return CheckResult(
        3,
        "variance ~ [1 - sin theta] t^2; ballistic at theta=0",
        rel <= VARIANCE_REL_TOL and ballistic,
        f"var/t^2 = {var / t**2:.6f} vs {target:.6f} (rel err {rel:.2%}, tol 5%); "
        f"theta=0 variance {var0:.12g}",
    )


def check_solo_futility(rng: np.random.Generator) -> CheckResult:
    cfg = GameConfig(steps=100, theta=pi / 4)
    failures = []
    margins_a, margins_b = [], []
    for k in range(1, 13):
        angle = k * pi / 24
        out_a = play_solo("A", PlayerCoins(angle, 0.0), cfg)
        out_b = play_solo("B", PlayerCoins(0.0, angle), cfg)
        if not out_a.p_left > out_a.p_right:
            failures.append(f"A k={k}")
        if not out_b.p_right > out_b.p_left:
            failures.append(f"B k={k}")
        margins_a.append(out_a.p_left - out_a.p_right)
        margins_b.append(out_b.p_right - out_b.p_left)
    monotone = bool(np.all(np.diff(margins_a) >= 0) and np.all(np.diff(margins_b) >= 0))
    return CheckResult(
        4,
        "neither player wins alone; margin grows with the angle",
        not failures and monotone,
        f"A margins {margins_a[0]:.4f}..{margins_a[-1]:.4f}, monotone={monotone}"
        + (f", failures: {failures}" if failures else ""),
    )


def check_alternating(rng: np.random.Generator) -> CheckResult:
    cfg_tol = GameConfig().eq_tolerance
    problems = []
    for angle in (pi / 6, pi / 3):
        coins = PlayerCoins(angle, angle)
        for t in (2, 10, 100):
            out = play_alternating("A", coins, GameConfig(steps=t, theta=pi / 4))
            gap = abs(out.p_left - out.p_right)
            if out.winner is not Winner.JOINT or gap > SYMMETRY_TOL:
                problems.append(f"angle={angle:.4f} t={t}: {out.winner.value}, |P_L-P_R|={gap:.4f}")
        for t in (3, 101):
            out = play_alternating("A", coins, GameConfig(steps=t, theta=pi / 4))
            lead = out.p_left - out.p_right
            if not cfg_tol < lead < NARROW_LOSS_BOUND:
                problems.append(f"angle={angle:.4f} t={t}: P_L-P_R={lead:.4f}")
    return CheckResult(
        5,
        "alternating coins: joint at even t, narrow starter loss at odd t",
        not problems,
        "all cells as claimed" if not problems else "; ".join(problems),
    )


def check_composite(rng: np.random.Generator) -> CheckResult:
    cfg = GameConfig(steps=100, theta=pi / 4)
    not_joint = [
        z
        for z in np.linspace(0, pi / 2, 25)
        if play_composite(Order.BA, PlayerCoins(pi / 2, z), cfg).winner is not Winner.JOINT
    ]
    sign_bad = _sign_structure_violations(figure3(cfg, 25, Order.BA))
    one = play_composite(Order.BA, PlayerCoins(0.0, pi / 6), GameConfig(steps=1, theta=pi / 4))
    anchor = abs(one.p_left - 0.75) <= ALGEBRA_TOL and one.winner is Winner.B
    return CheckResult(
        6,
        "composite BA: xi=pi/2 always joint; zeta>xi -> B, zeta<xi -> A",
        not not_joint and not sign_bad and anchor,
        f"{len(not_joint)} non-joint on xi=pi/2 row, {len(sign_bad)} sign violations, "
        f"one-step P_L={one.p_left:.15f}",
    )


def _sign_structure_violations(m) -> list[tuple[float, float, str]]:
    """Cells off the xi = pi/2 row whose winner disagrees with the zeta-vs-xi rule."""
    bad = []
    for xi, zeta, _, w in m.rows():
        if math.isclose(xi, pi / 2):
            expected = Winner.JOINT
        elif math.isclose(xi, zeta):
            expected = Winner.JOINT
        else:
            expected = Winner.B if zeta > xi else Winner.A
        if w is not expected:
            bad.append((xi, zeta, w.value))
    return bad


def check_algebra(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for xi, theta, zeta in rng.uniform(-2 * pi, 2 * pi, size=(1000, 3)):
        a, b = player_a_coin(xi, theta), player_b_coin(zeta, theta)
        worst = max(
            worst,
            float(np.max(np.abs(composite_ba(xi, theta, zeta) - multiply(b, a)))),
            float(np.max(np.abs(composite_ab(xi, theta, zeta) - multiply(a, b)))),
        )
    return CheckResult(
        7,
        "composite closed forms equal explicit coin products",
        worst <= ALGEBRA_TOL,
        f"max entry error {worst:.2e} over 1000 triples (tol {ALGEBRA_TOL:g})",
    )


_STEP_KINDS = (("A",), ("B",), ("A", "B"), ("B", "A"))


def random_program(rng: np.random.Generator, max_steps: int = 10) -> dsl.StepProgram:
    t = int(rng.integers(1, max_steps + 1))
    style = rng.integers(3)
    if style == 0:
        return dsl.compile_strategy(f"({'AB'[rng.integers(2)]})^{t}")
    if style == 1:
        return alternating_program("AB"[rng.integers(2)], t)
    return tuple(_STEP_KINDS[k] for k in rng.integers(4, size=t))


def check_oracle(rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for _ in range(50):
        program = random_program(rng)
        xi, theta, zeta, delta, phi = rng.uniform(-pi, pi, size=5)
        coins = {"A": coin(xi, theta, 0.0), "B": coin(0.0, theta, zeta)}
        s = InitialState(delta, phi)
        t = len(program)
        fast = evolve(t, s, program, coins)
        slow = dense_oracle_evolve(t, s, program, coins)
        worst = max(worst, float(np.max(np.abs(fast.amp - slow.amp))))
    return CheckResult(
        8,
        "evolve matches the dense-matrix oracle",
        worst <= ALGEBRA_TOL,
        f"max amplitude error {worst:.2e} over 50 programs (tol {ALGEBRA_TOL:g})",
    )


def _read_csv(path: Path) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def check_figures(rng: np.random.Generator) -> CheckResult:
    problems = []
    with tempfile.TemporaryDirectory() as tmp:
        manifest = json.loads(write_figure_bundle("fig2", tmp).read_text())
        for panel in manifest["panels"]:
            rows = _read_csv(Path(tmp) / panel["file"])
            x = np.array([int(r["x"]) for r in rows])
            p = np.array([float(r["p"]) for r in rows])
            left, right = p[x < 0].sum(), p[x > 0].sum()
            heavier = "left" if left > right else "right"
            if heavier != panel["expected_heavier_side"]:
                problems.append(f"fig2{panel['panel']}: heavier side {heavier}")
        manifest3 = json.loads(write_figure_bundle("fig3", tmp).read_text())
        rows = _read_csv(Path(tmp) / manifest3["panels"][0]["file"])

    class _Rows:
        def rows(self):
            for r in rows:
                yield float(r["xi"]), float(r["zeta"]), float(r["margin"]), Winner(r["winner"])

    bad = _sign_structure_violations(_Rows())
    if bad:
        problems.append(f"fig3: {len(bad)} cells break the sign structure")
    return CheckResult(
        9,
        "figure data: panel orderings and winner-region map",
        not problems,
        "fig2 orderings a,c left / b,d right; fig3 map consistent" if not problems else "; ".join(problems),
    )


_FUZZ_ALPHABET = list("AB()^ 0123C*")


def _invalid_variants(src: str, rng: np.random.Generator) -> list[str]:
    i = int(rng.integers(len(src) + 1))
    return [
        "",
        "   ",
        src[:i] + "C" + src[i:],
        src + " (",
        src + " )",
        src + " (A)^0",
        src + " A^2",
        src + " AAAAB",
        src + " ()^3",
        src + " (A)",
        src + " (A)^",
    ]


def check_dsl(rng: np.random.Generator) -> CheckResult:
    problems = []
    for _ in range(200):
        program = random_program(rng, 30)
        if dsl.compile_strategy(dsl.render(program)) != program:
            problems.append(f"round trip failed for {dsl.render(program)!r}")
        for bad in _invalid_variants(dsl.render(program), rng):
            try:
                dsl.compile_strategy(bad)
                problems.append(f"accepted invalid {bad!r}")
            except dsl.ParseError as e:
                if not 0 <= e.position <= len(bad):
                    problems.append(f"position {e.position} out of range for {bad!r}")
    for _ in range(500):
        src = "".join(rng.choice(_FUZZ_ALPHABET, size=int(rng.integers(0, 15))))
        try:
            dsl.compile_strategy(src)
        except dsl.ParseError as e:
            if not 0 <= e.position <= len(src):
                problems.append(f"position {e.position} out of range for {src!r}")
        except Exception as e:  # any other exception is a parser bug
            problems.append(f"{type(e).__name__} on {src!r}")

    t = 20
    xi, theta, zeta = rng.uniform(0, pi / 2, size=3)
    coins = {"A": player_a_coin(xi, theta), "B": player_b_coin(zeta, theta)}
    via_dsl = evolve(t, GAME_INITIAL_STATE, dsl.compile_strategy(f"(AB)^{t}"), coins)
    via_closed = evolve(t, GAME_INITIAL_STATE, [[composite_ba(xi, theta, zeta)]] * t)
    err = float(np.max(np.abs(via_dsl.amp - via_closed.amp)))
    if err > ALGEBRA_TOL:
        problems.append(f"(AB)^{t} differs from composite BA by {err:.2e}")
    return CheckResult(
        10,
        "strategy language: round trip, (AB)^t == composite BA, positioned errors",
        not problems,
        f"(AB)^{t} error {err:.2e}" if not problems else "; ".join(problems[:5]),
    )


CHECKS: tuple[Callable[[np.random.Generator], CheckResult], ...] = (
    check_first_step_closed_form,
    check_symmetry,
    check_variance,
    check_solo_futility,
    check_alternating,
    check_composite,
    check_algebra,
    check_oracle,
    check_figures,
    check_dsl,
)


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return [check(np.random.default_rng([seed, i])) for i, check in enumerate(CHECKS)]
