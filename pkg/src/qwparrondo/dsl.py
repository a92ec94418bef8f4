"""
A small language for writing down which coins are used at each step.

Grammar::

    program := item+
    item    := step | '(' item+ ')' '^' count
    step    := [AB]{1,4}
    count   := positive decimal integer

Items are separated by whitespace. Letters inside a step token are applied
left to right, followed by one shift. So ``"AB"`` means A's coin, then B's
coin, then shift (the product ``B_B @ B_A``, see
:func:`qwparrondo.coins.composite_ba`), and ``"BA"`` is the other ordering.

Examples::

    "(A)^100"      player A alone for 100 steps
    "(A B)^50"     alternate A, B for 100 steps, A first
    "(AB)^100"     both coins every step, A's coin acting first
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Step",
    "Group",
    "Node",
    "StrategyAst",
    "StepProgram",
    "ParseError",
    "ProgramSizeError",
    "MAX_COINS_PER_STEP",
    "DEFAULT_STEP_CAP",
    "parse",
    "expand",
    "compile_strategy",
    "render",
    "program_length",
]

MAX_COINS_PER_STEP = 4
DEFAULT_STEP_CAP = 10**6
TAGS = frozenset("AB")
_DIGITS = frozenset("0123456789")

StepProgram = tuple[tuple[str, ...], ...]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, source: str = ""):
        self.message = message
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")


class ProgramSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    tags: tuple[str, ...]


@dataclass(frozen=True)
class Group:
    children: tuple["Node", ...]
    repeat: int


Node = Union[Step, Group]


@dataclass(frozen=True)
class StrategyAst:
    items: tuple[Node, ...]


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos, self.src)

    def skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def parse_program(self) -> StrategyAst:
        if not self.peek():
            raise self.error("empty strategy")
        items = self.parse_items(closing=False)
        return StrategyAst(tuple(items))

    def parse_items(self, closing: bool) -> list[Node]:
        items: list[Node] = []
        while True:
            ch = self.peek()
            if ch == "":
                if closing:
                    raise self.error("unbalanced '(': expected ')'")
                return items
            if ch == ")":
                if not closing:
                    raise self.error("unbalanced ')'")
                if not items:
                    raise self.error("empty group")
                return items
            items.append(self.parse_item())

    def parse_item(self) -> Node:
        ch = self.peek()
        if ch == "(":
            start = self.pos
            self.pos += 1
            children = self.parse_items(closing=True)
            self.pos += 1  # ')'
            if self.pos >= len(self.src) or self.src[self.pos] != "^":
                raise self.error(f"group opened at position {start} needs '^count'")
            self.pos += 1
            return Group(tuple(children), self.parse_count())
        if ch in TAGS:
            return self.parse_step()
        if ch == "^":
            raise self.error("'^' may only follow a parenthesised group")
        raise self.error(f"unexpected character {ch!r}")

    def parse_step(self) -> Step:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in TAGS:
            self.pos += 1
        token = self.src[start : self.pos]
        if len(token) > MAX_COINS_PER_STEP:
            raise self.error(
                f"step {token!r} has {len(token)} coins, at most {MAX_COINS_PER_STEP} allowed",
                start,
            )
        if self.pos < len(self.src) and self.src[self.pos] == "^":
            raise self.error("'^' may only follow a parenthesised group")
        return Step(tuple(token))

    def parse_count(self) -> int:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in _DIGITS:
            self.pos += 1
        digits = self.src[start : self.pos]
        if not digits:
            raise self.error("expected a repeat count", start)
        count = int(digits)
        if count == 0:
            raise self.error("repeat count must be positive", start)
        return count


def parse(src: str) -> StrategyAst:
    """Parse strategy text; raises :class:`ParseError` with a 0-based position."""
    return _Parser(src).parse_program()


def _size(node: Node) -> int:
    if isinstance(node, Step):
        return 1
    return node.repeat * sum(_size(c) for c in node.children)


def _expand_into(node: Node, out: list[tuple[str, ...]]) -> None:
    if isinstance(node, Step):
        out.append(node.tags)
        return
    body: list[tuple[str, ...]] = []
    for child in node.children:
        _expand_into(child, body)
    out.extend(body * node.repeat)


def expand(ast: StrategyAst, max_steps: int = DEFAULT_STEP_CAP) -> StepProgram:
    """Flatten groups into one coin-tag tuple per step."""
    total = sum(_size(n) for n in ast.items)
    if total > max_steps:
        raise ProgramSizeError(f"strategy expands to {total} steps, cap is {max_steps}")
    out: list[tuple[str, ...]] = []
    for node in ast.items:
        _expand_into(node, out)
    return tuple(out)


def compile_strategy(src: str, max_steps: int = DEFAULT_STEP_CAP) -> StepProgram:
    return expand(parse(src), max_steps)


def render(program: StepProgram) -> str:
    """
    Canonical text for a program: runs of identical steps are written as
    ``(X)^n`` and single steps as bare tokens.
    """
    if not program:
        raise ValueError("cannot render an empty program")
    parts: list[str] = []
    i = 0
    while i < len(program):
        j = i
        while j < len(program) and program[j] == program[i]:
            j += 1
        token = "".join(program[i])
        parts.append(token if j - i == 1 else f"({token})^{j - i}")
        i = j
    return " ".join(parts)


def program_length(program: StepProgram) -> int:
    return len(program)
