"""Shared test graphs."""

import numpy as np
from hypothesis import strategies as st

from graphenergy import graph as gc
from graphenergy import ops


def small_corpus():
    """Named graphs with at most 8 vertices."""
    out = {}
    for p in range(1, 9):
        out[f"K({p})"] = gc.complete(p)
        out[f"E({p})"] = gc.empty(p)
        out[f"P({p})"] = gc.path(p)
    for p in range(3, 9):
        out[f"C({p})"] = gc.cycle(p)
    for r in range(1, 5):
        for s in range(r, 9 - r):
            out[f"KB({r},{s})"] = gc.complete_bipartite(r, s)
    k2 = gc.complete(2)
    extra = [
        gc.superpath([2, 1, 1, 2]),
        gc.superpath([1, 2, 1]),
        gc.superpath([3, 1, 3]),
        gc.canonical_superpath(1),
        gc.canonical_superpath(2),
        ops.duplicate(k2),
        ops.shadow(k2, 2),
        ops.duplicate_iter(k2, 2),
        ops.kronecker(k2, k2),
        ops.splitting(k2, 1),
        ops.splitting(gc.path(3), 1),
        ops.join(k2, gc.empty(6)),
        ops.join(gc.cycle(4), gc.empty(2)),
        gc.disjoint_union(gc.cycle(4), gc.empty(1)),
        gc.disjoint_union(gc.star(4), gc.empty(1)),
        gc.disjoint_union(gc.cycle(3), gc.path(4)),
        gc.complement(gc.cycle(7)),
        gc.complement(gc.path(6)),
        ops.duplicate(gc.cycle(4)),
    ]
    for g in extra:
        out[g.label] = g
    return out


ORDERENERGETIC_SEEDS = {
    "K(2)": lambda: gc.complete(2),
    "C(4)": lambda: gc.cycle(4),
    "KB(3,3)": lambda: gc.complete_bipartite(3, 3),
    "CSP(2)": lambda: gc.canonical_superpath(2),
}


def random_graph(order: int, mask: int) -> gc.Graph:
    """Graph whose edge ``e`` (upper-triangle row-major) is present iff bit ``e`` of ``mask`` is set."""
    iu = np.triu_indices(order, 1)
    adj = np.zeros((order, order), dtype=np.int8)
    adj[iu] = [(mask >> e) & 1 for e in range(len(iu[0]))]
    return gc.Graph(adj + adj.T, f"random({order},{mask})")


@st.composite
def graphs(draw, min_order=1, max_order=8):
    order = draw(st.integers(min_order, max_order))
    mask = draw(st.integers(0, 2 ** (order * (order - 1) // 2) - 1))
    return random_graph(order, mask)
