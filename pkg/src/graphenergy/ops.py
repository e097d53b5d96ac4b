"""Graph operations: Kronecker product, join, splitting, shadow, duplicates.

Every operation returns a new :class:`~graphenergy.graph.Graph` whose vertex
numbering is fixed and documented, so the resulting adjacency matrices are
deterministic.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidOrderError, RegularityError
from .graph import Graph, check_capacity, complete_bipartite
from .spectral import CharPoly, char_poly

__all__ = [
    "kronecker",
    "join",
    "join_charpoly_regular",
    "splitting",
    "shadow",
    "duplicate",
    "duplicate_iter",
    "bipartite_kronecker",
]


def _label(op: str, *parts) -> str | None:
    if any(isinstance(p, Graph) and not p.label for p in parts):
        return None
    return f"{op}({','.join(p.label if isinstance(p, Graph) else str(p) for p in parts)})"


def _multiplier(m: int, minimum: int = 1) -> int:
    if isinstance(m, bool) or int(m) != m or m < minimum:
        raise InvalidOrderError(f"multiplier must be an integer >= {minimum}, got {m!r}")
    return int(m)


def kronecker(g: Graph, h: Graph) -> Graph:
    """Kronecker (tensor) product ``g x h``.

    Vertex ``(u, v)`` gets index ``u * h.order + v``; it is adjacent to
    ``(x, y)`` iff ``ux`` is an edge of ``g`` and ``vy`` an edge of ``h``.
    """
    check_capacity(g.order * h.order, "Kronecker product")
    return Graph(np.kron(g.adjacency, h.adjacency), _label("kron", g, h))


def bipartite_kronecker(r: int, s: int, g: Graph) -> Graph:
    """``K_{r,s} x g``, written ``G_r^s`` in the hypoenergetic constructions."""
    return kronecker(complete_bipartite(r, s), g)


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union (``g`` first) plus every edge between the parts."""
    p, q = g.order, h.order
    check_capacity(p + q, "join")
    adj = np.ones((p + q, p + q), dtype=np.int8)
    adj[:p, :p] = g.adjacency
    adj[p:, p:] = h.adjacency
    return Graph(adj, _label("join", g, h))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divide_linear(coeffs: list[int], root: int) -> list[int]:
    """Exact quotient of an ascending-coefficient polynomial by ``x - root``."""
    n = len(coeffs) - 1
    quotient = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        carry = coeffs[k] + carry * root
        quotient[k - 1] = carry
    if coeffs[0] + carry * root != 0:
        raise ArithmeticError(f"x - {root} does not divide the polynomial")
    return quotient


def join_charpoly_regular(g: Graph, h: Graph) -> CharPoly:
    """Characteristic polynomial of ``join(g, h)`` for regular ``g`` and ``h``.

    Uses ``phi(g) phi(h) / ((x - r1)(x - r2)) * ((x - r1)(x - r2) - n1 n2)``,
    computed from the operands' own characteristic polynomials and never
    from the joined matrix.
    """
    r1, r2 = g.regular_degree(), h.regular_degree()
    if r1 is None or r2 is None:
        bad = g if r1 is None else h
        raise RegularityError(f"{bad!r} is not regular")
    # a regular graph has its degree as an eigenvalue, so each division is exact
    fg = _divide_linear(list(char_poly(g).coeffs), r1)
    fh = _divide_linear(list(char_poly(h).coeffs), r2)
    quad = [r1 * r2 - g.order * h.order, -(r1 + r2), 1]
    return CharPoly(tuple(_poly_mul(_poly_mul(fg, fh), quad)))


def splitting(g: Graph, m: int) -> Graph:
    """``m``-splitting graph ``spl_m(g)``.

    Indices ``0..p-1`` keep the original vertices; copy ``k`` (1-based) of
    vertex ``v`` is ``k * p + v`` and is adjacent to the original neighbours
    of ``v`` only.
    """
    m = _multiplier(m)
    p = g.order
    check_capacity((m + 1) * p, "splitting graph")
    pattern = np.zeros((m + 1, m + 1), dtype=np.int8)
    pattern[0, :] = 1
    pattern[:, 0] = 1
    return Graph(np.kron(pattern, g.adjacency), _label("spl", g, m))


def shadow(g: Graph, m: int) -> Graph:
    """``m``-shadow graph ``D_m(g)`` with adjacency ``J_m (x) A(g)``.

    Copy ``k`` of vertex ``v`` is index ``k * p + v``.
    """
    m = _multiplier(m)
    check_capacity(m * g.order, "shadow graph")
    return Graph(np.kron(np.ones((m, m), dtype=np.int8), g.adjacency), _label("shadow", g, m))


def duplicate(g: Graph) -> Graph:
    """Duplicate graph ``D(g)``: vertex ``i`` is paired with ``i + p``.

    ``a`` and ``b'`` are adjacent iff ``ab`` is an edge of ``g``, giving the
    adjacency ``[[0, A], [A, 0]]``.
    """
    p = g.order
    check_capacity(2 * p, "duplicate graph")
    adj = np.zeros((2 * p, 2 * p), dtype=np.int8)
    adj[:p, p:] = g.adjacency
    adj[p:, :p] = g.adjacency
    return Graph(adj, _label("dup", g))


def duplicate_iter(g: Graph, m: int) -> Graph:
    """``m``-duplicate graph ``D^m(g)``; ``m = 0`` returns ``g``."""
    m = _multiplier(m, minimum=0)
    check_capacity((2 ** m) * g.order, "m-duplicate graph")
    out = g
    for _ in range(m):
        out = duplicate(out)
    if m > 1:
        out = out.relabel(_label("dup", g, m))
    return out
