"""
Command-line front end.

    qwalk walk   --steps 100 --theta pi/4 --xi pi/6 --zeta 0 [--output dist.csv]
    qwalk game   --strategy "(A B)^50" --xi pi/6 --zeta pi/6 --theta pi/4
    qwalk sweep  --order BA --steps 100 --theta pi/4 --resolution 25 [--output map.csv]
    qwalk figure fig2 --outdir figures/
    qwalk verify

Every flag can also come from a JSON file given with ``--config``; keys use
the flag names with ``-`` replaced by ``_``. Flags on the command line win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections.abc import Sequence

from . import dsl
from .angles import AngleParseError, parse_angle
from .coins import coin
from .game import GameConfig, Order, PlayerCoins, play_program, sweep_winner_region
from .output import (
    distribution_csv,
    dumps,
    game_record,
    sweep_csv,
    walk_summary,
    write_figure_bundle,
    write_text,
)
from .verification import DEFAULT_SEED, run_all
from .walk import InitialState, distribution, evolve, side_probabilities


def _angle(text: str) -> float:
    if isinstance(text, (int, float)):
        return float(text)
    try:
        return parse_angle(text)
    except AngleParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text(path, text)


def cmd_walk(args: argparse.Namespace) -> int:
    if args.steps < 0:
        raise SystemExit("walk: --steps must be >= 0")
    c = coin(args.xi, args.theta, args.zeta)
    state = evolve(args.steps, InitialState(args.delta, args.phi), [[c]] * args.steps)
    d = distribution(state)
    summary = walk_summary(d, side_probabilities(d))
    if args.format == "json":
        summary["distribution"] = {"x": [int(x) for x in d.positions], "p": [float(p) for p in d.p]}
        _emit(dumps(summary), args.output)
        return 0
    _emit(distribution_csv(d), args.output)
    if args.summary:
        write_text(args.summary, dumps(summary))
    elif args.output:
        sys.stdout.write(dumps(summary))
    else:
        sys.stderr.write(dumps(summary))
    return 0


def cmd_game(args: argparse.Namespace) -> int:
    if args.strategy is None:
        raise ValueError("game: --strategy is required (flag or config file)")
    program = dsl.compile_strategy(args.strategy)
    coins = PlayerCoins(args.xi, args.zeta)
    cfg = GameConfig(steps=len(program), theta=args.theta, eq_tolerance=args.eq_tolerance)
    out = play_program(program, coins, cfg)
    _emit(dumps(game_record(out, len(program), args.strategy)), args.output)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = GameConfig(steps=args.steps, theta=args.theta, eq_tolerance=args.eq_tolerance)
    m = sweep_winner_region(Order(args.order), cfg, args.resolution)
    _emit(sweep_csv(m), args.output)
    return 0


def cmd_figure(args: argparse.Namespace) -> int:
    manifest = write_figure_bundle(args.which, args.outdir)
    sys.stdout.write(f"{manifest}\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(args.seed)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwalk", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--config", help="JSON file with default flag values")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    def angles(p: argparse.ArgumentParser) -> None:
        p.add_argument("--theta", type=_angle, default=math.pi / 4, help="shared coin angle")
        p.add_argument("--xi", type=_angle, default=0.0, help="player A's angle")
        p.add_argument("--zeta", type=_angle, default=0.0, help="player B's angle")

    p = sub.add_parser("walk", parents=[common], help="run a single-coin walk and emit P(x)")
    p.add_argument("--steps", type=int, default=100)
    angles(p)
    p.add_argument("--delta", type=_angle, default=math.pi / 2, help="initial coin polar angle")
    p.add_argument("--phi", type=_angle, default=math.pi / 2, help="initial coin phase")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="distribution file (default: stdout)")
    p.add_argument("--summary", help="JSON summary file")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("game", parents=[common], help="play a strategy and adjudicate the winner")
    p.add_argument("--strategy", help='required; e.g. "(A B)^50" or "(AB)^100"')
    angles(p)
    p.add_argument("--eq-tolerance", type=float, default=GameConfig.eq_tolerance)
    p.add_argument("--output")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("sweep", parents=[common], help="winner map of the composite game over (xi, zeta)")
    p.add_argument("--order", choices=[o.value for o in Order], default="BA")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--theta", type=_angle, default=math.pi / 4)
    p.add_argument("--resolution", type=int, default=25)
    p.add_argument("--eq-tolerance", type=float, default=GameConfig.eq_tolerance)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", parents=[common], help="write figure data files and a manifest")
    p.add_argument("which", choices=("fig2", "fig3"))
    p.add_argument("--outdir", default="figures")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", parents=[common], help="run the built-in checks, nonzero exit on failure")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    parser.set_defaults(subcommands=sub.choices)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        with open(known.config) as fh:
            defaults = json.load(fh)
        if not isinstance(defaults, dict):
            raise ValueError(f"config {known.config} must hold a JSON object")
        # defaults must land on the subparser that owns the flag
        for subparser in parser.get_default("subcommands").values():
            own = _dests(subparser)
            for key, value in defaults.items():
                if key not in own:
                    continue
                if isinstance(value, str) and key in _ANGLE_KEYS:
                    value = _angle(value)
                subparser.set_defaults(**{key: value})
    return parser.parse_args(argv)


_ANGLE_KEYS = frozenset({"theta", "xi", "zeta", "delta", "phi"})


def _dests(parser: argparse.ArgumentParser) -> set[str]:
    return {a.dest for a in parser._actions}  # noqa: SLF001


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except dsl.ParseError as e:
        print(f"error: invalid strategy: {e}", file=sys.stderr)
        print(f"  {e.source}\n  {' ' * e.position}^", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
