"""Text formats: swap expressions, cycle notation, and lambda terms.

Swap expressions::

    expr  := seq (';' seq)*
    seq   := unit unit*               juxtaposition, left-associated
    unit  := 'id' | '(' nat nat ')' | '(' expr ')'

Both juxtaposition and ``;`` build ``Comp(left, right)``, so the right
operand acts first. Cycle notation is ``(a1 a2 ... ak)(b1 ... bm)`` or
``id``. Lambda terms are written ``x3``, ``\\x3. body``, with application
by juxtaposition and parentheses for grouping.
"""

from __future__ import annotations

import re
from typing import Iterable

from .cycles import Cycle, canonical_cycles, validate_cycles
from .errors import CycleError, ParseError
from .expr import CompE, IdE, PermExpr, SwapE
from .gset import App, Lam, LambdaTerm, Var

_TOKEN = re.compile(r"\s*(?:(\d+)|(id)\b|(x\d+)|(\\|λ)|([().;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(("eof", "", pos))
            return tokens
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        kind = ("nat", "id", "var", "lam", "punct")[m.lastindex - 1]
        value = m.group(m.lastindex)
        tokens.append((kind if kind != "punct" else value, value, start))
        pos = m.end()


class _Cursor:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0
        # token kinds probed at the current position, for error messages
        self.tried: set[str] = set()
        self.tried_at = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    @property
    def pos(self) -> int:
        return self.tokens[self.i][2]

    def at(self, *kinds: str) -> bool:
        if self.tried_at != self.i:
            self.tried, self.tried_at = set(), self.i
        self.tried.update(kinds)
        return self.kind in kinds

    def take(self, *kinds: str) -> str:
        kind, value, pos = self.tokens[self.i]
        if kind not in kinds:
            found = "end of input" if kind == "eof" else repr(value)
            expected = set(kinds) | (self.tried if self.tried_at == self.i else set())
            raise ParseError(f"unexpected {found}", pos, expected)
        self.i += 1
        return value


# -- swap expressions --------------------------------------------------------

_UNIT_START = ("id", "(")


def parse_expr(text: str) -> PermExpr:
    cur = _Cursor(text)
    e = _expr(cur)
    cur.take("eof")
    return e


def _expr(cur: _Cursor) -> PermExpr:
    e = _seq(cur)
    while cur.at(";"):
        cur.take(";")
        e = CompE(e, _seq(cur))
    return e


def _seq(cur: _Cursor) -> PermExpr:
    e = _unit(cur)
    while cur.at(*_UNIT_START):
        e = CompE(e, _unit(cur))
    return e


def _unit(cur: _Cursor) -> PermExpr:
    if cur.take(*_UNIT_START) == "id":
        return IdE()
    if cur.at("nat"):
        a = int(cur.take("nat"))
        b = int(cur.take("nat"))
        cur.take(")")
        return SwapE(a, b)
    e = _expr(cur)
    cur.take(")")
    return e


def format_expr(e: PermExpr) -> str:
    """Print ``e`` so that :func:`parse_expr` gives back the same tree."""
    if isinstance(e, IdE):
        return "id"
    if isinstance(e, SwapE):
        return f"({e.a} {e.b})"
    left = format_expr(e.left)
    right = format_expr(e.right)
    if isinstance(e.right, CompE):
        right = f"({right})"
    sep = "" if right.startswith("(") and left.endswith(")") else " "
    return left + sep + right


# -- cycle notation ----------------------------------------------------------


def parse_cycles(text: str) -> tuple[Cycle, ...]:
    """Parse cycle notation; cycles may be rotated and in any order but must be disjoint."""
    cur = _Cursor(text)
    if cur.kind == "id":
        cur.take("id")
        cur.take("eof")
        return ()
    cycles = []
    starts = []
    while cur.kind != "eof":
        starts.append(cur.pos)
        cur.take("(")
        atoms = [int(cur.take("nat"))]
        while cur.at("nat"):
            atoms.append(int(cur.take("nat")))
        cur.take(")", "nat")
        cycles.append(Cycle.of(*atoms))
    if not cycles:
        cur.take("(", "id")
    try:
        validate_cycles(cycles)
    except CycleError as err:
        raise ParseError(str(err), starts[cycles.index(err.cycle)]) from err
    return tuple(cycles)


def format_cycles(cs: Iterable[Cycle]) -> str:
    cs = canonical_cycles(cs)
    return "".join(map(str, cs)) if cs else "id"


# -- lambda terms ------------------------------------------------------------

_ARG_START = ("var", "(")


def parse_term(text: str) -> LambdaTerm:
    cur = _Cursor(text)
    t = _term(cur)
    cur.take("eof")
    return t


def _var(cur: _Cursor) -> int:
    return int(cur.take("var")[1:])


def _term(cur: _Cursor) -> LambdaTerm:
    if cur.at("lam"):
        cur.take("lam")
        a = _var(cur)
        cur.take(".")
        return Lam(a, _term(cur))
    t = _arg(cur)
    while cur.at(*_ARG_START, "lam"):
        if cur.kind == "lam":
            return App(t, _term(cur))
        t = App(t, _arg(cur))
    return t


def _arg(cur: _Cursor) -> LambdaTerm:
    if cur.kind != "(":
        return Var(int(cur.take(*_ARG_START)[1:]))
    cur.take("(")
    t = _term(cur)
    cur.take(")")
    return t


def format_term(t: LambdaTerm) -> str:
    if isinstance(t, Var):
        return f"x{t.atom}"
    if isinstance(t, Lam):
        return f"\\x{t.atom}. {format_term(t.body)}"
    fun = format_term(t.fun)
    if isinstance(t.fun, Lam):
        fun = f"({fun})"
    arg = format_term(t.arg)
    if not isinstance(t.arg, Var):
        arg = f"({arg})"
    return f"{fun} {arg}"
