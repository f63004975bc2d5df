import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listramsey.coloring import Coloring
from listramsey.hypergraph import Hypergraph, named
from listramsey.morphism import (
    EdgeIndex,
    VertexMap,
    find_copy,
    find_homomorphism,
    find_through,
    is_hom_free,
    iter_copies,
    verify_coloring,
)

import oracles
from test_hypergraph import graphs


def test_triangle_identity():
    phi = find_homomorphism(named("K3"), named("K3"))
    assert phi is not None and phi.is_homomorphism(named("K3"), named("K3"))


def test_triangle_into_c5_none():
    assert find_homomorphism(named("K3"), named("C5")) is None
    assert not oracles.has_hom_brute(3, named("K3").edge_list, 5, named("C5").edge_list)


def test_odd_cycle_into_edge_none():
    assert find_homomorphism(named("C5"), named("K2")) is None


def test_even_cycle_into_edge():
    phi = find_homomorphism(named("C4"), named("K2"))
    assert phi.is_homomorphism(named("C4"), named("K2"))


def test_c5_into_triangle():
    # non-injective homomorphism: folds a 5-cycle onto a triangle
    phi = find_homomorphism(named("C5"), named("K3"))
    assert phi.is_homomorphism(named("C5"), named("K3"))


@pytest.mark.parametrize("g, expected", [("C5", True), ("K3", False), ("K2,3", True)])
def test_is_hom_free(g, expected):
    assert is_hom_free(named(g), named("K3")) is expected


def test_uniformity_mismatch():
    with pytest.raises(ValueError):
        find_homomorphism(named("K3"), named("K4^(3)"))
    with pytest.raises(ValueError):
        find_copy(named("K4^(3)"), named("K3"))


def test_find_copy_examples():
    emb = find_copy(named("K5"), named("K3"))
    assert emb is not None and emb.is_homomorphism(named("K3"), named("K5"))
    assert find_copy(named("C5"), named("K3")) is None
    emb = find_copy(named("K2,3"), named("C4"))
    assert emb is not None and emb.is_homomorphism(named("C4"), named("K2,3"))
    assert len(set(emb.image)) == 4


def test_hypergraph_copy_and_hom():
    k43 = named("K4^(3)")
    assert find_copy(named("K5^(3)"), k43) is not None
    # K4^(3) minus an edge has no copy of K4^(3)
    sub = k43.with_edges(k43.edge_list[:3])
    assert find_copy(sub, k43) is None
    assert find_homomorphism(k43, sub) is None


def test_iter_copies_counts_triangles():
    assert len(list(iter_copies(named("K5"), named("K3")))) == 10
    assert len(list(iter_copies(named("K4"), named("C4")))) == 3
    assert len(list(iter_copies(named("K4"), named("K3"), distinct=False))) == 24


def test_find_through_uses_edge():
    idx = EdgeIndex(2, 4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert find_through(idx, named("K3"), (0, 1), injective=True) is not None
    assert find_through(idx, named("K3"), (2, 3), injective=True) is None


def _two_triangles_coloring():
    host = named("K6")
    left, right = {0, 1, 2}, {3, 4, 5}
    colors = {e: 2 if ({*e} <= left or {*e} <= right) else 1 for e in host.edges}
    return host, Coloring(colors)


def test_verify_coloring_finds_triangle():
    host, col = _two_triangles_coloring()
    color, emb = verify_coloring(host, col, named("K3"))
    assert color == 2
    assert all(col[emb.map_edge(e)] == 2 for e in named("K3").edges)


def test_verify_coloring_two_pentagons():
    host = named("K5")
    inner = named("C5").edges
    col = Coloring({e: 0 if e in inner else 1 for e in host.edges})
    assert verify_coloring(host, col, named("K3")) is None


def test_verify_coloring_edgeless_pattern():
    host, col = _two_triangles_coloring()
    color, emb = verify_coloring(host, col, Hypergraph.empty(4))
    assert color == 1 and len(emb.image) == 4
    assert verify_coloring(host, col, Hypergraph.empty(7)) is None


def test_verify_coloring_incomplete():
    with pytest.raises(ValueError):
        verify_coloring(named("K3"), Coloring({(0, 1): 0}), named("K3"))


def test_vertex_map_roundtrip():
    m = VertexMap((1, 0, 1))
    assert m.from_n == 3 and m.map_edge((0, 2)) == (1, 1)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_copy_implies_hom(host, pattern):
    emb = find_copy(host, pattern)
    phi = find_homomorphism(pattern, host)
    if emb is not None:
        assert emb.is_homomorphism(pattern, host)
        assert phi is not None
    if phi is not None:
        assert phi.is_homomorphism(pattern, host)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=4))
def test_hom_search_matches_brute_force(target, pattern):
    expected = oracles.has_hom_brute(pattern.n, pattern.edge_list, target.n, target.edge_list)
    assert (find_homomorphism(pattern, target) is not None) is expected


def test_triangle_hom_free_iff_triangle_free_all_up_to_six():
    k3 = named("K3")
    for n in range(3, 7):
        for mask in oracles.all_graph_masks(n).tolist():
            g = Hypergraph(2, n, oracles.graph_edges(mask, n))
            assert is_hom_free(g, k3) == (find_copy(g, k3) is None)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_triangle_hom_free_iff_triangle_free(g):
    assert is_hom_free(g, named("K3")) == (find_copy(g, named("K3")) is None)
