import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphenergy import graph as gc
from graphenergy import ops
from graphenergy.errors import CapacityError, InvalidOrderError, RegularityError
from graphenergy.spectral import char_poly, energy, jacobi_eigenvalues

from corpus import graphs


def _close(a, b, rtol=1e-8):
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def test_kronecker_small():
    k = ops.kronecker(gc.complete(2), gc.complete(2))
    # K2 x K2 is two disjoint edges: (0,0)-(1,1) and (0,1)-(1,0)
    assert set(k.edges()) == {(0, 3), (1, 2)}
    assert ops.kronecker(gc.complete(1), gc.cycle(5)).size == 0


def test_kronecker_matches_networkx():
    g, h = gc.cycle(5), gc.path(3)
    ref = nx.tensor_product(nx.cycle_graph(5), nx.path_graph(3))
    nodes = sorted(ref.nodes)  # (u, v) tuples sort as u * 3 + v
    assert np.array_equal(ops.kronecker(g, h).adjacency, nx.to_numpy_array(ref, nodelist=nodes))


def test_bipartite_kronecker():
    g = ops.bipartite_kronecker(1, 3, gc.complete(3))
    assert g.order == 12
    assert g == ops.kronecker(gc.star(3), gc.complete(3))


def test_join_empty_example():
    j = ops.join(gc.complete(2), gc.empty(6))
    assert j.order == 8 and j.size == 1 + 12
    assert sorted(j.degrees().tolist()) == [2] * 6 + [7, 7]


def test_join_is_complement_of_union_of_complements():
    g, h = gc.cycle(5), gc.path(3)
    expected = gc.complement(gc.disjoint_union(gc.complement(g), gc.complement(h)))
    assert ops.join(g, h) == expected


def test_splitting_structure():
    s = ops.splitting(gc.path(3), 2)
    assert s.order == 9
    # copies of a vertex are adjacent to its original neighbours only
    assert set(s.neighbors(3 + 0).tolist()) == {1}
    assert set(s.neighbors(6 + 1).tolist()) == {0, 2}
    assert not s.adjacency[3:, 3:].any()


def test_shadow_structure():
    d = ops.shadow(gc.complete(2), 3)
    assert d.order == 6
    assert nx.is_isomorphic(nx.from_numpy_array(d.adjacency), nx.complete_bipartite_graph(3, 3))
    assert np.allclose(sorted(jacobi_eigenvalues(d.adjacency)), [-3, 0, 0, 0, 0, 3])


def test_duplicate_structure():
    d = ops.duplicate(gc.complete(3))
    assert d.order == 6
    # D(K3) is the 6-cycle 0-4-2-3-1-5-0
    assert nx.is_isomorphic(nx.from_numpy_array(d.adjacency), nx.cycle_graph(6))
    assert ops.duplicate_iter(gc.cycle(4), 0) == gc.cycle(4)
    assert ops.duplicate_iter(gc.complete(2), 3).order == 16


@pytest.mark.parametrize("fn", [ops.shadow, ops.splitting])
@pytest.mark.parametrize("m", [0, -1, 1.5, True])
def test_bad_multiplier(fn, m):
    with pytest.raises(InvalidOrderError):
        fn(gc.complete(2), m)


def test_duplicate_iter_rejects_negative():
    with pytest.raises(InvalidOrderError):
        ops.duplicate_iter(gc.complete(2), -1)


def test_capacity_checked_before_allocation():
    gc.set_max_order(50)
    try:
        with pytest.raises(CapacityError):
            ops.kronecker(gc.complete(8), gc.complete(8))
        with pytest.raises(CapacityError):
            ops.duplicate_iter(gc.complete(2), 6)
    finally:
        gc.set_max_order(None)


def test_labels():
    assert ops.shadow(gc.cycle(4).relabel("C(4)"), 2).label == "shadow(C(4),2)"
    assert ops.shadow(gc.cycle(4).relabel(None), 2).label is None


def test_join_charpoly_regular_matches_direct():
    for g, h in [
        (gc.cycle(4), gc.empty(12)),
        (gc.complete(2), gc.empty(6)),
        (gc.cycle(5), gc.complete(3)),
        (gc.complete_bipartite(2, 2), gc.cycle(6)),
    ]:
        assert ops.join_charpoly_regular(g, h) == char_poly(ops.join(g, h))


def test_join_charpoly_requires_regular():
    with pytest.raises(RegularityError):
        ops.join_charpoly_regular(gc.path(3), gc.empty(2))


# -- energy laws --------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(graphs(max_order=5), graphs(max_order=5))
def test_kronecker_energy_is_product(g, h):
    assert _close(energy(ops.kronecker(g, h)), energy(g) * energy(h))


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=6), st.integers(1, 4))
def test_shadow_energy(g, m):
    assert _close(energy(ops.shadow(g, m)), m * energy(g))


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=6), st.integers(1, 4))
def test_splitting_energy(g, m):
    assert _close(energy(ops.splitting(g, m)), math.sqrt(1 + 4 * m) * energy(g))


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=5), st.integers(0, 3))
def test_duplicate_energy(g, m):
    assert _close(energy(ops.duplicate_iter(g, m)), 2 ** m * energy(g))


@settings(max_examples=30, deadline=None)
@given(graphs(max_order=6), st.integers(1, 3))
def test_shadow_of_duplicate_matches_double_shadow(g, m):
    # same energy, different graphs in general
    assert _close(energy(ops.shadow(ops.duplicate(g), m)), energy(ops.shadow(g, 2 * m)))


@settings(max_examples=30, deadline=None)
@given(graphs(max_order=6))
def test_operations_preserve_invariants(g):
    for built in (ops.duplicate(g), ops.shadow(g, 2), ops.splitting(g, 2), ops.join(g, gc.empty(2))):
        a = built.adjacency
        assert np.array_equal(a, a.T) and not np.diagonal(a).any()
    assert ops.duplicate(g).size == 2 * g.size
    assert ops.shadow(g, 3).size == 9 * g.size
    assert ops.splitting(g, 2).size == 5 * g.size
