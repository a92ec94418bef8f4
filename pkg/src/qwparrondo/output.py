"""
Deterministic CSV/JSON writers.

Floats are written with 17 significant digits, ``.`` as decimal separator and
``\\n`` line endings, so equal inputs give byte-identical files.
"""

from __future__ import annotations

import io
import json
import re
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from .figures import FIG2_STEPS, FIG3_CONFIG, FIG3_RESOLUTION, figure2, figure3
from .game import GameOutcome, WinnerRegionMap
from .walk import Distribution, SideProbabilities, moments


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj: Any) -> str:
    """JSON text with every float written by :func:`fmt`."""
    floats: list[str] = []

    def tag(o: Any) -> Any:
        if isinstance(o, float):
            floats.append(fmt(o))
            return f"\x00{len(floats) - 1}\x00"
        if isinstance(o, dict):
            return {k: tag(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [tag(v) for v in o]
        return o

    text = json.dumps(tag(obj), indent=2)
    return re.sub(r'"\\u0000(\d+)\\u0000"', lambda m: floats[int(m.group(1))], text) + "\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return buf.getvalue()


def distribution_csv(d: Distribution) -> str:
    return csv_text(("x", "p"), ((int(x), float(p)) for x, p in zip(d.positions, d.p)))


def walk_summary(d: Distribution, sp: SideProbabilities) -> dict[str, Any]:
    mean, var = moments(d)
    return {
        "t": d.t,
        "P_L": sp.p_left,
        "P_R": sp.p_right,
        "P_origin": sp.p_origin,
        "mean": mean,
        "variance": var,
    }


def game_record(out: GameOutcome, steps: int, strategy: str) -> dict[str, Any]:
    return {
        "P_L": out.p_left,
        "P_R": out.p_right,
        "P_origin": out.p_origin,
        "winner": out.winner.value,
        "margin": out.margin,
        "steps": steps,
        "strategy": strategy,
    }


def sweep_csv(m: WinnerRegionMap) -> str:
    return csv_text(
        ("xi", "zeta", "margin", "winner"),
        ((xi, zeta, margin, w.value) for xi, zeta, margin, w in m.rows()),
    )


def write_text(path: Path | str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def write_figure_bundle(which: str, outdir: Path | str) -> Path:
    """
    Write one data file per panel plus ``<which>_manifest.json`` into ``outdir``.

    Returns the manifest path.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    if which == "fig2":
        panels = []
        for name, (panel, d, sp) in figure2(FIG2_STEPS).items():
            csv_name = f"fig2{name}.csv"
            write_text(outdir / csv_name, distribution_csv(d))
            panels.append(
                {
                    "panel": name,
                    "file": csv_name,
                    "xi": panel.xi,
                    "theta": panel.theta,
                    "zeta": panel.zeta,
                    "params": panel.label,
                    "steps": FIG2_STEPS,
                    "expected_heavier_side": panel.expected,
                    "summary": walk_summary(d, sp),
                }
            )
        manifest = {"figure": "fig2", "initial_state": "(|0> + i|1>)/sqrt(2)", "panels": panels}
    elif which == "fig3":
        m = figure3()
        write_text(outdir / "fig3.csv", sweep_csv(m))
        manifest = {
            "figure": "fig3",
            "initial_state": "(|0> + i|1>)/sqrt(2)",
            "panels": [
                {
                    "panel": "winner_region",
                    "file": "fig3.csv",
                    "order": m.order.value,
                    "theta": FIG3_CONFIG.theta,
                    "steps": FIG3_CONFIG.steps,
                    "resolution": FIG3_RESOLUTION,
                    "eq_tolerance": FIG3_CONFIG.eq_tolerance,
                }
            ],
        }
    else:
        raise ValueError(f"unknown figure {which!r}; expected 'fig2' or 'fig3'")
    path = outdir / f"{which}_manifest.json"
    write_text(path, dumps(manifest))
    return path
