"""Graph expressions such as ``join(C(4), E(12))`` or ``shadow(dup(K(2)), 2)``.

Atoms::

    K(p)  C(p)  P(m)  KB(r,s)  E(n)  SP(a1,...,ak)  CSP(m)  g6:<graph6>  file:<path>

Operators::

    kron(G,H)  join(G,H)  union(G,H)  spl(G,m)  shadow(G,m)  dup(G)  dup(G,m)  comp(G)

``file:`` reads a graph6 file (first graph) when the name ends in ``.g6``
and an edge list otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from . import graph as gc
from . import ops
from .errors import ParseError
from .graph import Graph

__all__ = ["Atom", "Op", "GraphExpr", "parse_expr", "evaluate", "build", "to_text"]

# name -> (minimum argument values, variadic)
ATOMS: dict[str, tuple[tuple[int, ...], bool]] = {
    "K": ((1,), False),
    "C": ((3,), False),
    "P": ((1,), False),
    "E": ((1,), False),
    "KB": ((1, 1), False),
    "CSP": ((1,), False),
    "SP": ((1,), True),
}
# name -> accepted signatures; "g" is a graph, "i" a positive integer
OPERATORS: dict[str, tuple[tuple[str, ...], ...]] = {
    "kron": (("g", "g"),),
    "join": (("g", "g"),),
    "union": (("g", "g"),),
    "spl": (("g", "i"),),
    "shadow": (("g", "i"),),
    "dup": (("g",), ("g", "i")),
    "comp": (("g",),),
}
_G6_CHARS = {chr(c) for c in range(63, 127)}


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple[Union[int, str], ...]
    pos: int = 0


@dataclass(frozen=True)
class Op:
    name: str
    args: tuple[Union["Atom", "Op", int], ...]
    pos: int = 0


GraphExpr = Union[Atom, Op]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, message: str, expected: tuple[str, ...] = (), pos: int | None = None):
        raise ParseError(message, self.i if pos is None else pos, expected)

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"unexpected {found!r}", (repr(ch),))
        self.i += 1

    def name(self) -> tuple[str, int]:
        self.skip()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
            self.i += 1
        if start == self.i:
            found = self.peek() or "end of input"
            self.error(f"unexpected {found!r}", ("atom", "operator"))
        return self.text[start:self.i], start

    def integer(self) -> int:
        self.skip()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] in "+-":
            self.i += 1
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        token = self.text[start:self.i]
        if not token or token in "+-":
            self.i = start
            found = self.peek() or "end of input"
            self.error(f"unexpected {found!r}", ("integer",))
        return int(token)

    def expr(self) -> GraphExpr:
        name, start = self.name()
        if self.peek() == ":" and name in ("g6", "file"):
            self.i += 1
            return self.raw_atom(name, start)
        if name in ATOMS:
            return self.atom(name, start)
        if name in OPERATORS:
            return self.operator(name, start)
        self.error(f"unknown atom or operator {name!r}", tuple(sorted(ATOMS) + sorted(OPERATORS)) + ("g6:", "file:"), start)

    def raw_atom(self, kind: str, start: int) -> Atom:
        begin = self.i
        if kind == "g6":
            while self.i < len(self.text) and self.text[self.i] in _G6_CHARS:
                self.i += 1
        else:
            while self.i < len(self.text) and self.text[self.i] not in ",)" and not self.text[self.i].isspace():
                self.i += 1
        value = self.text[begin:self.i]
        if not value:
            self.error(f"empty {kind}: payload", (f"{kind} payload",))
        return Atom(kind, (value,), start)

    def atom(self, name: str, start: int) -> Atom:
        minimums, variadic = ATOMS[name]
        self.expect("(")
        values = [self.integer()]
        while self.peek() == ",":
            self.i += 1
            values.append(self.integer())
        self.expect(")")
        if variadic:
            if any(v < minimums[0] for v in values):
                self.error(f"{name} parts must be >= {minimums[0]}", pos=start)
        else:
            if len(values) != len(minimums):
                self.error(f"{name} takes {len(minimums)} argument(s), got {len(values)}", pos=start)
            for v, lo in zip(values, minimums):
                if v < lo:
                    self.error(f"{name} argument must be >= {lo}, got {v}", pos=start)
        return Atom(name, tuple(values), start)

    def operator(self, name: str, start: int) -> Op:
        self.expect("(")
        args: list = []
        signatures = OPERATORS[name]
        while True:
            slot = len(args)
            kinds = {sig[slot] for sig in signatures if len(sig) > slot}
            if not kinds:
                self.error(f"{name} takes at most {max(map(len, signatures))} arguments", pos=start)
            if "g" in kinds:
                args.append(self.expr())
            else:
                value = self.integer()
                if value < 1:
                    self.error(f"{name} multiplier must be >= 1, got {value}")
                args.append(value)
            if self.peek() == ",":
                self.i += 1
                continue
            break
        self.expect(")")
        if len(args) not in {len(sig) for sig in signatures}:
            self.error(f"{name} takes {' or '.join(str(len(s)) for s in signatures)} argument(s), got {len(args)}", pos=start)
        return Op(name, tuple(args), start)


def parse_expr(text: str) -> GraphExpr:
    """Parse an expression; raises :class:`ParseError` with position and expectations."""
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek():
        parser.error(f"trailing input {parser.text[parser.i:]!r}", ("end of input",))
    return node


def to_text(node: GraphExpr) -> str:
    if isinstance(node, Atom):
        if node.kind in ("g6", "file"):
            return f"{node.kind}:{node.params[0]}"
        return f"{node.kind}({','.join(map(str, node.params))})"
    return f"{node.name}({','.join(to_text(a) if not isinstance(a, int) else str(a) for a in node.args)})"


def _load_file(path: str) -> Graph:
    if path.endswith(".g6"):
        graphs = gc.read_graph6(path)
        if not graphs:
            raise ParseError(f"no graph in {path}", 0)
        return graphs[0]
    return gc.read_edgelist(path)


def evaluate(node: GraphExpr) -> Graph:
    if isinstance(node, Atom):
        k, args = node.kind, node.params
        if k == "K":
            g = gc.complete(*args)
        elif k == "C":
            g = gc.cycle(*args)
        elif k == "P":
            g = gc.path(*args)
        elif k == "E":
            g = gc.empty(*args)
        elif k == "KB":
            g = gc.complete_bipartite(*args)
        elif k == "CSP":
            g = gc.canonical_superpath(*args)
        elif k == "SP":
            g = gc.superpath(args)
        elif k == "g6":
            g = gc.from_graph6(args[0])
        else:
            g = _load_file(args[0])
        return g.relabel(to_text(node))
    args = [evaluate(a) if not isinstance(a, int) else a for a in node.args]
    name = node.name
    if name == "kron":
        g = ops.kronecker(*args)
    elif name == "join":
        g = ops.join(*args)
    elif name == "union":
        g = gc.disjoint_union(*args)
    elif name == "spl":
        g = ops.splitting(*args)
    elif name == "shadow":
        g = ops.shadow(*args)
    elif name == "dup":
        g = ops.duplicate(args[0]) if len(args) == 1 else ops.duplicate_iter(*args)
    else:
        g = gc.complement(*args)
    return g.relabel(to_text(node))


def build(text: str) -> Graph:
    """Parse and evaluate in one step."""
    return evaluate(parse_expr(text))
