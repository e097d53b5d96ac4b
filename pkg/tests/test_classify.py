import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from graphenergy import graph as gc
from graphenergy import ops
from graphenergy.classify import (
    CSV_HEADER,
    ENERGY_RTOL,
    certify_pair,
    classify_energy,
    energies_equal,
    is_isomorphic,
)
from graphenergy.errors import UndecidableError

from corpus import graphs, random_graph


def test_classify_orderenergetic_integral():
    r = classify_energy(gc.complete_bipartite(3, 3))
    assert r.orderenergetic and r.nonhypoenergetic and not r.hypoenergetic
    assert r.integral and r.energy_exact == 6 and r.comparison == "exact"


def test_classify_hypoenergetic():
    r = classify_energy(gc.star(3))
    assert r.hypoenergetic and not r.orderenergetic and not r.nonhypoenergetic
    assert r.integral is False and r.comparison == "numeric"
    assert r.value == pytest.approx(2 * 3 ** 0.5)


def test_classify_hyperenergetic():
    # the complement of C_n crosses 2(p - 1) between n = 9 and n = 10
    assert not classify_energy(gc.complement(gc.cycle(9))).hyperenergetic
    assert classify_energy(gc.complement(gc.cycle(10))).hyperenergetic
    assert not classify_energy(gc.complete(7)).hyperenergetic  # exactly 2(p - 1)


def test_classify_edgeless_and_single_vertex():
    r = classify_energy(gc.empty(3))
    assert r.energy_exact == 0 and r.hypoenergetic
    r = classify_energy(gc.complete(1))
    assert r.hypoenergetic and r.integral


def test_report_serialisation():
    r = classify_energy(gc.cycle(4).relabel('odd "label"'))
    data = json.loads(r.to_json())
    assert data["energy_exact"] == 4 and data["rtol"] == ENERGY_RTOL
    row = r.to_csv_row()
    assert row.startswith('"odd ""label""",4,4,4,0,1,1,0,1,exact')
    assert len(row.split(",")) == len(CSV_HEADER.split(","))


def test_report_integral_unknown_above_charpoly_cap():
    r = classify_energy(gc.cycle(160))
    assert r.integral is None and r.comparison == "numeric"


@settings(max_examples=50, deadline=None)
@given(graphs(max_order=8))
def test_flags_are_consistent(g):
    r = classify_energy(g)
    assert r.nonhypoenergetic == (not r.hypoenergetic)
    assert not (r.orderenergetic and r.hypoenergetic)
    if r.hyperenergetic:
        assert r.nonhypoenergetic
    if r.energy_exact is not None:
        assert r.energy == pytest.approx(r.energy_exact, abs=1e-8)


def test_energies_equal_modes():
    a = classify_energy(gc.cycle(4))
    b = classify_energy(gc.star(4))  # eigenvalues 2, 0, 0, 0, -2
    c = classify_energy(gc.cycle(5))
    assert energies_equal(a, b) == (True, "exact")
    assert energies_equal(c, c) == (True, "numeric")
    assert energies_equal(a, c) == (False, "numeric")


# -- isomorphism ---------------------------------------------------------------

def test_isomorphic_relabelled_superpath():
    g = gc.superpath([2, 1, 1, 2])
    perm = [5, 3, 0, 1, 4, 2]
    h = gc.Graph(g.adjacency[np.ix_(perm, perm)])
    assert is_isomorphic(g, h)


def test_non_isomorphic_same_degrees():
    # C6 and two triangles are both 2-regular on six vertices
    two_triangles = gc.disjoint_union(gc.cycle(3), gc.cycle(3))
    assert not is_isomorphic(gc.cycle(6), two_triangles)


def test_isomorphism_cap_and_budget():
    with pytest.raises(UndecidableError):
        is_isomorphic(gc.cycle(13), gc.cycle(13))
    # vertex-transitive graphs exhaust a tiny budget before refinement helps
    with pytest.raises(UndecidableError):
        is_isomorphic(gc.complete(8), gc.complete(8), node_budget=3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=7), graphs(max_order=7))
def test_isomorphism_matches_networkx(g, h):
    ref = nx.is_isomorphic(nx.from_numpy_array(g.adjacency), nx.from_numpy_array(h.adjacency))
    assert is_isomorphic(g, h) == ref


@settings(max_examples=60, deadline=None)
@given(graphs(min_order=2, max_order=9))
def test_isomorphic_to_permuted_copy(g):
    perm = np.random.default_rng(g.order + g.size).permutation(g.order)
    assert is_isomorphic(g, gc.Graph(g.adjacency[np.ix_(perm, perm)]))


def test_isomorphism_on_regular_pairs():
    # cubic graphs on 8 vertices: the cube and the Wagner graph (Moebius ladder)
    cube = nx.hypercube_graph(3)
    twisted = nx.circulant_graph(8, [1, 4])
    a = gc.Graph(nx.to_numpy_array(cube, dtype=int))
    b = gc.Graph(nx.to_numpy_array(twisted, dtype=int))
    assert is_isomorphic(a, b) == nx.is_isomorphic(cube, twisted)


# -- pair certificates ---------------------------------------------------------

def test_certify_equiorderenergetic():
    g = gc.superpath([2, 1, 1, 2])
    cert = certify_pair(ops.splitting(g, 2), ops.shadow(g, 3))
    assert cert.verdict == "equiorderenergetic"
    assert cert.energies == (18, 18) and cert.comparison == "exact"
    assert not cert.cospectral and cert.isomorphic is False
    assert cert.equienergetic


def test_certify_equihypoenergetic():
    g = gc.star(2)
    cert = certify_pair(ops.splitting(g, 2), ops.shadow(g, 3))
    assert cert.verdict == "equihypoenergetic"
    assert cert.comparison == "numeric"


def test_certify_isomorphic_pair_is_not_equienergetic():
    g = gc.cycle(5)
    perm = [2, 4, 1, 0, 3]
    cert = certify_pair(g, gc.Graph(g.adjacency[np.ix_(perm, perm)]))
    assert cert.cospectral and cert.isomorphic
    assert cert.verdict == "not-equienergetic" and not cert.equienergetic


def test_certify_cospectral_non_isomorphic():
    cert = certify_pair(gc.star(4), gc.disjoint_union(gc.cycle(4), gc.empty(1)))
    assert cert.cospectral and cert.isomorphic is False
    assert cert.verdict == "equihypoenergetic"


def test_certify_different_orders():
    cert = certify_pair(gc.cycle(4), gc.complete_bipartite(2, 3))
    assert not cert.same_order and cert.verdict == "not-equienergetic"


def test_certify_undecided_isomorphism():
    g = gc.cycle(14)
    perm = list(range(1, 14)) + [0]
    cert = certify_pair(g, gc.Graph(g.adjacency[np.ix_(perm, perm)]))
    assert cert.cospectral and cert.isomorphic is None
    assert cert.verdict == "undecided-isomorphism"
    assert "capped" in cert.note


def test_certify_numeric_cospectrality_above_cap():
    cert = certify_pair(gc.cycle(152), gc.cycle(152))
    assert cert.cospectral and "numerically" in cert.note


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=7), graphs(max_order=7))
def test_certify_pair_is_symmetric(g, h):
    a, b = certify_pair(g, h), certify_pair(h, g)
    assert a.verdict == b.verdict
    assert a.cospectral == b.cospectral and a.isomorphic == b.isomorphic
    assert a.energies == b.energies[::-1]


def test_certificate_json():
    data = json.loads(certify_pair(gc.cycle(4), random_graph(4, 0b111111)).to_json())
    assert data["verdict"] == "not-equienergetic"
    assert set(data) >= {"verdict", "cospectral", "isomorphic", "energies", "note"}
