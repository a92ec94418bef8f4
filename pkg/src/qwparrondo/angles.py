"""Parsing of angle literals such as ``pi/4``, ``5pi/12``, ``-pi/6`` or ``0.3``."""

from __future__ import annotations

import math

__all__ = ["AngleParseError", "parse_angle"]


class AngleParseError(ValueError):
    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"invalid angle {text!r}: {message} at position {position}")


def _number(text: str, pos: int) -> tuple[float | None, int]:
    start = pos
    while pos < len(text) and (text[pos].isascii() and text[pos].isdigit() or text[pos] == "."):
        pos += 1
    # optional exponent, only for plain decimals like 1e-3
    if pos < len(text) and text[pos] in "eE" and pos > start:
        exp = pos + 1
        if exp < len(text) and text[exp] in "+-":
            exp += 1
        digits = exp
        while digits < len(text) and text[digits].isascii() and text[digits].isdigit():
            digits += 1
        if digits > exp:
            pos = digits
    if pos == start:
        return None, pos
    try:
        return float(text[start:pos]), pos
    except ValueError:
        raise AngleParseError(text, start, "malformed number") from None


def parse_angle(text: str) -> float:
    """
    Parse ``[sign] [number] [*] [pi] [/ number]`` into radians.

    At least one of the leading number or ``pi`` must be present.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise AngleParseError(text, 0, "empty")
    pos = 0
    sign = 1.0
    if s[pos] in "+-":
        sign = -1.0 if s[pos] == "-" else 1.0
        pos += 1
    value, pos = _number(s, pos)
    has_pi = False
    if pos < len(s) and s[pos] == "*":
        if value is None:
            raise AngleParseError(text, offset + pos, "'*' needs a leading number")
        pos += 1
        if not s.startswith("pi", pos):
            raise AngleParseError(text, offset + pos, "expected 'pi' after '*'")
    if s.startswith("pi", pos):
        has_pi = True
        pos += 2
    if value is None and not has_pi:
        raise AngleParseError(text, offset + pos, "expected a number or 'pi'")
    result = (1.0 if value is None else value) * (math.pi if has_pi else 1.0)
    if pos < len(s) and s[pos] == "/":
        pos += 1
        denom, after = _number(s, pos)
        if denom is None:
            raise AngleParseError(text, offset + pos, "expected a denominator")
        if denom == 0:
            raise AngleParseError(text, offset + pos, "division by zero")
        result /= denom
        pos = after
    if pos != len(s):
        raise AngleParseError(text, offset + pos, f"unexpected {s[pos]!r}")
    if not math.isfinite(result):
        raise AngleParseError(text, offset, "not finite")
    return sign * result
