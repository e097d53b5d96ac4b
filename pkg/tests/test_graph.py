import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from graphenergy import graph as gc
from graphenergy.errors import CapacityError, InvalidOrderError, InvalidSpecError
from graphenergy.spectral import char_poly, jacobi_eigenvalues

from corpus import graphs, small_corpus


def test_complete():
    assert gc.complete(1).size == 0
    k3 = gc.complete(3)
    assert k3.size == 3
    assert np.array_equal(k3.adjacency, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_empty_and_cycle():
    assert gc.empty(1) == gc.complete(1)
    assert gc.empty(6).size == 0 and gc.empty(12).order == 12
    assert gc.cycle(3) == gc.complete(3)
    c5 = gc.cycle(5)
    assert c5.size == 5
    assert c5.regular_degree() == 2
    assert c5.is_connected()


def test_path():
    assert gc.path(2) == gc.complete(2)
    assert gc.path(1).order == 1
    # det(xI - A) of the 3-vertex path, expanded along the first row: x(x^2 - 1) - x
    assert char_poly(gc.path(3)).coeffs == (0, -2, 0, 1)


def test_complete_bipartite():
    g = gc.complete_bipartite(3, 3)
    assert g.order == 6 and g.size == 9
    assert gc.complete_bipartite(1, 1) == gc.complete(2)
    star = gc.complete_bipartite(1, 3)
    assert char_poly(star).coeffs == (0, 0, -3, 0, 1)
    assert abs(np.abs(jacobi_eigenvalues(star.adjacency)).sum() - 2 * np.sqrt(3)) < 1e-12


@pytest.mark.parametrize(
    "m, parts",
    [
        (1, (1, 1)),
        (2, (2, 1, 1, 2)),
        (3, (3, 1, 2, 2, 1, 3)),
        (4, (4, 1, 3, 2, 2, 3, 1, 4)),
    ],
)
def test_canonical_superpath_parts(m, parts):
    assert gc.canonical_superpath_parts(m) == parts
    assert gc.canonical_superpath(m).order == m * (m + 1)


@pytest.mark.parametrize("m", range(1, 13))
def test_canonical_superpath_order_identity(m):
    parts = gc.canonical_superpath_parts(m)
    assert parts == parts[::-1]
    assert len(parts) == 2 * m
    assert sum(parts) == m * (m + 1)


def test_superpath_structure():
    g = gc.superpath([4, 1, 3, 2, 2, 3, 1, 4])
    assert g.order == 20
    assert gc.superpath([1, 1]) == gc.complete(2)
    g = gc.superpath([2, 1, 1, 2])
    assert g.order == 6
    # blocks {0,1} {2} {3} {4,5}: consecutive blocks fully joined, nothing else
    expected = {(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)}
    assert set(g.edges()) == expected


def test_superpath_rejects_bad_parts():
    with pytest.raises(InvalidSpecError):
        gc.superpath([])
    with pytest.raises(InvalidSpecError):
        gc.superpath([2, 0, 1])


@pytest.mark.parametrize(
    "ctor, arg",
    [(gc.complete, 0), (gc.empty, 0), (gc.cycle, 2), (gc.path, 0), (gc.canonical_superpath, 0)],
)
def test_invalid_orders(ctor, arg):
    with pytest.raises(InvalidOrderError):
        ctor(arg)


def test_graph_validation():
    with pytest.raises(InvalidSpecError):
        gc.Graph([[0, 1], [0, 0]])
    with pytest.raises(InvalidSpecError):
        gc.Graph([[1, 0], [0, 0]])
    with pytest.raises(InvalidSpecError):
        gc.Graph([[0, 2], [2, 0]])
    with pytest.raises(InvalidOrderError):
        gc.Graph(np.zeros((0, 0)))


def test_graph_is_immutable():
    g = gc.cycle(4)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = 0


def test_complement():
    assert gc.complement(gc.complete(5)) == gc.empty(5)
    assert gc.complement(gc.empty(4)) == gc.complete(4)
    # non-edges of C4 (0-1-2-3-0) are the diagonals 02 and 13
    assert set(gc.complement(gc.cycle(4)).edges()) == {(0, 2), (1, 3)}


def test_disjoint_union():
    u = gc.disjoint_union(gc.complete(2), gc.complete(2))
    assert np.allclose(jacobi_eigenvalues(u.adjacency), [1, 1, -1, -1])
    g = gc.disjoint_union(gc.complete_bipartite(2, 2), gc.complete(2))
    assert abs(np.abs(jacobi_eigenvalues(g.adjacency)).sum() - 6) < 1e-10
    h = gc.disjoint_union(gc.cycle(5), gc.empty(1))
    assert abs(
        np.abs(jacobi_eigenvalues(h.adjacency)).sum() - np.abs(jacobi_eigenvalues(gc.cycle(5).adjacency)).sum()
    ) < 1e-10


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=6), graphs(max_order=6))
def test_union_spectrum_is_multiset_union(g, h):
    u = gc.disjoint_union(g, h)
    joint = np.sort(np.concatenate([jacobi_eigenvalues(g.adjacency), jacobi_eigenvalues(h.adjacency)]))[::-1]
    assert np.allclose(jacobi_eigenvalues(u.adjacency), joint, atol=1e-9)


def test_constructors_satisfy_invariants():
    for g in small_corpus().values():
        a = g.adjacency
        assert np.array_equal(a, a.T)
        assert not np.any(np.diagonal(a))
        assert g.order >= 1


def test_capacity_limit(monkeypatch):
    monkeypatch.setenv("GEL_MAX_ORDER", "10")
    with pytest.raises(CapacityError):
        gc.complete(11)
    gc.complete(10)
    gc.set_max_order(20)
    try:
        gc.complete(15)
    finally:
        gc.set_max_order(None)


# -- file formats ------------------------------------------------------------

def test_edgelist_round_trip(tmp_path):
    g = gc.superpath([2, 1, 1, 2])
    text = gc.to_edgelist(g)
    assert text.splitlines()[0] == "6 5"
    assert text.splitlines()[1] == "0 2"
    assert gc.from_edgelist(text) == g
    path = tmp_path / "g.txt"
    gc.write_edgelist(g, path)
    assert gc.read_edgelist(path) == g


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 1\n1 2\n", "3 1\n1 0\n", "3 1\n0 5\n", "3 2\n0 1\n0 1\n"],
)
def test_edgelist_rejects_malformed(text):
    with pytest.raises(InvalidSpecError):
        gc.from_edgelist(text)


def test_graph6_known_strings():
    # strings produced by nauty/networkx for these graphs
    assert gc.to_graph6(gc.complete(1)) == "@"
    assert gc.to_graph6(gc.complete(4)) == "C~"
    assert gc.to_graph6(gc.path(4)) == "Ch"
    assert gc.from_graph6(">>graph6<<C~") == gc.complete(4)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=12))
def test_graph6_matches_networkx(g):
    ref = nx.to_graph6_bytes(nx.from_numpy_array(g.adjacency), header=False).decode().strip()
    assert gc.to_graph6(g) == ref
    assert gc.from_graph6(ref) == g


def test_graph6_large_order():
    g = gc.cycle(70)
    s = gc.to_graph6(g)
    assert s[0] == "~"
    assert gc.from_graph6(s) == g
    ref = nx.to_graph6_bytes(nx.cycle_graph(70), header=False).decode().strip()
    assert s == ref


def test_graph6_file_round_trip(tmp_path):
    graphs_ = [gc.cycle(4), gc.canonical_superpath(2), gc.complete(7)]
    path = tmp_path / "x.g6"
    gc.write_graph6(graphs_, path)
    assert gc.read_graph6(path) == graphs_


@pytest.mark.parametrize("text", ["C~~", "C", "\x01", "?"])
def test_graph6_rejects_malformed(text):
    with pytest.raises((InvalidSpecError, InvalidOrderError)):
        gc.from_graph6(text)
