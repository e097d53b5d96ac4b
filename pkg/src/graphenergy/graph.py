"""Simple undirected graphs on a dense 0/1 adjacency matrix.

Vertices are the integers ``0 .. order-1``. Composite constructions lay their
blocks out contiguously in construction order, so the adjacency matrix of any
expression is reproducible byte for byte.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

import numpy as np

from .errors import CapacityError, InvalidOrderError, InvalidSpecError

__all__ = [
    "Graph",
    "DEFAULT_MAX_ORDER",
    "max_order",
    "set_max_order",
    "check_capacity",
    "complete",
    "empty",
    "cycle",
    "path",
    "complete_bipartite",
    "star",
    "superpath",
    "canonical_superpath_parts",
    "canonical_superpath",
    "complement",
    "disjoint_union",
    "from_edges",
    "to_edgelist",
    "from_edgelist",
    "read_edgelist",
    "write_edgelist",
    "to_graph6",
    "from_graph6",
    "read_graph6",
    "write_graph6",
]

DEFAULT_MAX_ORDER = 4096
_max_order_override: int | None = None


def max_order() -> int:
    """Largest order any construction may produce.

    Resolution order: :func:`set_max_order`, then ``GEL_MAX_ORDER``, then
    :data:`DEFAULT_MAX_ORDER`.
    """
    if _max_order_override is not None:
        return _max_order_override
    env = os.environ.get("GEL_MAX_ORDER")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise CapacityError(f"GEL_MAX_ORDER must be an integer, got {env!r}") from None
        if value < 1:
            raise CapacityError("GEL_MAX_ORDER must be positive")
        return value
    return DEFAULT_MAX_ORDER


def set_max_order(value: int | None) -> None:
    """Override the capacity limit for this process (``None`` restores it)."""
    global _max_order_override
    if value is not None and value < 1:
        raise ValueError("capacity limit must be positive")
    _max_order_override = value


def check_capacity(order: int, what: str = "graph") -> None:
    limit = max_order()
    if order > limit:
        raise CapacityError(f"{what} would have {order} vertices; limit is {limit}")


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    adjacency : array_like
        Square symmetric 0/1 matrix with zero diagonal.
    label : str, optional
        Construction string, normally a parseable graph expression.
    """

    __slots__ = ("_adj", "label", "_hash")

    def __init__(self, adjacency, label: str | None = None):
        adj = np.array(adjacency, dtype=np.int8, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidSpecError(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise InvalidOrderError("graphs must have at least one vertex")
        if not np.all((adj == 0) | (adj == 1)):
            raise InvalidSpecError("adjacency entries must be 0 or 1")
        if not np.array_equal(adj, adj.T):
            raise InvalidSpecError("adjacency must be symmetric")
        if np.any(np.diagonal(adj)):
            raise InvalidSpecError("adjacency must have a zero diagonal (no loops)")
        check_capacity(adj.shape[0])
        adj.flags.writeable = False
        self._adj = adj
        self.label = label
        self._hash = None

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only ``int8`` adjacency matrix."""
        return self._adj

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def size(self) -> int:
        """Number of edges."""
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1, dtype=np.int64)

    @property
    def max_degree(self) -> int:
        return int(self.degrees().max())

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        deg = self.degrees()
        return int(deg[0]) if np.all(deg == deg[0]) else None

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        rows, cols = np.nonzero(np.triu(self._adj, 1))
        for i, j in zip(rows.tolist(), cols.tolist()):
            yield i, j

    def is_connected(self) -> bool:
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in self.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    frontier.append(int(w))
        return bool(seen.all())

    def relabel(self, label: str | None) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = self._adj
        g.label = label
        g._hash = self._hash
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._adj.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<Graph{name} order={self.order} size={self.size}>"


def _positive(value: int, what: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise InvalidOrderError(f"{what} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise InvalidOrderError(f"{what} must be >= {minimum}, got {value}")
    return value


def complete(p: int) -> Graph:
    p = _positive(p, "order of K_p")
    check_capacity(p)
    return Graph(np.ones((p, p), dtype=np.int8) - np.eye(p, dtype=np.int8), f"K({p})")


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices, the complement of ``K_n``."""
    n = _positive(n, "order of the empty graph")
    check_capacity(n)
    return Graph(np.zeros((n, n), dtype=np.int8), f"E({n})")


def cycle(p: int) -> Graph:
    p = _positive(p, "order of C_p", minimum=3)
    check_capacity(p)
    adj = np.zeros((p, p), dtype=np.int8)
    idx = np.arange(p)
    adj[idx, (idx + 1) % p] = 1
    adj[(idx + 1) % p, idx] = 1
    return Graph(adj, f"C({p})")


def path(m: int) -> Graph:
    m = _positive(m, "order of P_m")
    check_capacity(m)
    adj = np.zeros((m, m), dtype=np.int8)
    idx = np.arange(m - 1)
    adj[idx, idx + 1] = 1
    adj[idx + 1, idx] = 1
    return Graph(adj, f"P({m})")


def complete_bipartite(r: int, s: int) -> Graph:
    """``K_{r,s}``; vertices ``0..r-1`` form the first class."""
    r = _positive(r, "class size r")
    s = _positive(s, "class size s")
    check_capacity(r + s)
    adj = np.zeros((r + s, r + s), dtype=np.int8)
    adj[:r, r:] = 1
    adj[r:, :r] = 1
    return Graph(adj, f"KB({r},{s})")


def star(s: int) -> Graph:
    """The star ``K_{1,s}`` with centre 0."""
    return complete_bipartite(1, s)


def superpath(parts: Sequence[int]) -> Graph:
    """Superpath ``SP(a_1, ..., a_m)``.

    Each vertex of the path ``P_m`` is blown up into an independent set of
    ``a_i`` vertices; two vertices are adjacent iff their blocks are
    consecutive. Blocks occupy consecutive index ranges left to right.
    """
    parts = [int(a) for a in parts]
    if not parts:
        raise InvalidSpecError("superpath needs at least one part")
    if any(a < 1 for a in parts):
        raise InvalidSpecError(f"superpath parts must be positive, got {parts}")
    order = sum(parts)
    check_capacity(order)
    bounds = np.concatenate([[0], np.cumsum(parts)])
    adj = np.zeros((order, order), dtype=np.int8)
    for i in range(len(parts) - 1):
        a0, a1, b1 = bounds[i], bounds[i + 1], bounds[i + 2]
        adj[a0:a1, a1:b1] = 1
        adj[a1:b1, a0:a1] = 1
    return Graph(adj, f"SP({','.join(map(str, parts))})")


def canonical_superpath_parts(m: int) -> tuple[int, ...]:
    """Parts ``(m, 1, m-1, 2, ..., 2, m-1, 1, m)`` of length ``2m``.

    For positions ``j <= m`` (1-based) odd ``j`` gets ``m - (j-1)/2`` and even
    ``j`` gets ``j/2``; the second half mirrors the first.
    """
    m = _positive(m, "superpath parameter m")
    half = [m - (j - 1) // 2 if j % 2 else j // 2 for j in range(1, m + 1)]
    return tuple(half + half[::-1])


def canonical_superpath(m: int) -> Graph:
    """The integral superpath of order ``m(m+1)``."""
    g = superpath(canonical_superpath_parts(m))
    return g.relabel(f"CSP({m})")


def complement(g: Graph) -> Graph:
    adj = 1 - g.adjacency
    np.fill_diagonal(adj, 0)
    return Graph(adj, f"comp({g.label})" if g.label else None)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Block-diagonal union; ``g`` occupies the first ``g.order`` indices."""
    p, q = g.order, h.order
    check_capacity(p + q, "disjoint union")
    adj = np.zeros((p + q, p + q), dtype=np.int8)
    adj[:p, :p] = g.adjacency
    adj[p:, p:] = h.adjacency
    label = f"union({g.label},{h.label})" if g.label and h.label else None
    return Graph(adj, label)


def from_edges(order: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    order = _positive(order, "order")
    check_capacity(order)
    adj = np.zeros((order, order), dtype=np.int8)
    for i, j in edges:
        if not (0 <= i < order and 0 <= j < order):
            raise InvalidSpecError(f"edge ({i}, {j}) out of range for order {order}")
        if i == j:
            raise InvalidSpecError(f"loop at vertex {i}")
        adj[i, j] = adj[j, i] = 1
    return Graph(adj, label)


# -- edge-list text format -------------------------------------------------

def to_edgelist(g: Graph) -> str:
    """``"p q"`` header followed by one ``"i j"`` line per edge (``i < j``)."""
    lines = [f"{g.order} {g.size}"]
    lines += [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str, label: str | None = None) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise InvalidSpecError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise InvalidSpecError(f"malformed edge list: {exc}") from None
    if len(header) != 2:
        raise InvalidSpecError("edge list header must be 'p q'")
    p, q = header
    if len(body) != q:
        raise InvalidSpecError(f"header announces {q} edges, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise InvalidSpecError(f"edge line must hold two indices, got {row}")
        if row[0] >= row[1]:
            raise InvalidSpecError(f"edge ({row[0]}, {row[1]}) must satisfy i < j")
    if len(set(body)) != q:
        raise InvalidSpecError("duplicate edge in edge list")
    return from_edges(p, body, label)


def read_edgelist(path: str | Path) -> Graph:
    path = Path(path)
    return from_edgelist(path.read_text(), label=f"file:{path}")


def write_edgelist(g: Graph, path: str | Path) -> None:
    Path(path).write_text(to_edgelist(g))


# -- graph6 ----------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise InvalidSpecError(f"order {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise InvalidSpecError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        digits, start = data[2:8], 2
    else:
        digits, start = data[1:4], 1
    width = 6 if start == 2 else 3
    if len(digits) != width:
        raise InvalidSpecError("truncated graph6 size header")
    n = 0
    for d in digits:
        n = (n << 6) | (d - 63)
    return n, start + width


def to_graph6(g: Graph) -> str:
    """Standard graph6 string (no ``>>graph6<<`` header, no newline)."""
    n = g.order
    iu = np.triu_indices(n, 1)
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    order = np.lexsort((iu[0], iu[1]))
    bits = g.adjacency[iu[0][order], iu[1][order]].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    return (_encode_n(n) + bytes((groups + 63).astype(np.uint8).tolist())).decode("ascii")


def from_graph6(text: str, label: str | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise InvalidSpecError(f"invalid graph6 character in {text!r}")
    n, offset = _decode_n(data)
    if n < 1:
        raise InvalidOrderError("graph6 string encodes an order-0 graph")
    check_capacity(n)
    nbits = n * (n - 1) // 2
    body = np.frombuffer(data[offset:], dtype=np.uint8) - 63
    if len(body) != (nbits + 5) // 6:
        raise InvalidSpecError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = ((body[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:nbits]
    iu = np.triu_indices(n, 1)
    order = np.lexsort((iu[0], iu[1]))
    adj = np.zeros((n, n), dtype=np.int8)
    adj[iu[0][order], iu[1][order]] = bits
    adj = adj + adj.T
    return Graph(adj, label if label is not None else f"g6:{s}")


def read_graph6(path: str | Path) -> list[Graph]:
    """All graphs of a graph6 file, one per non-blank line."""
    return [from_graph6(line) for line in Path(path).read_text().splitlines() if line.strip()]


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> None:
    Path(path).write_text("".join(to_graph6(g) + "\n" for g in graphs))
