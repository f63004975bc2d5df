"""Acceptance gate: one test per criterion, each at its stated tolerance.

A pass/fail line per criterion is printed in the terminal summary (see
``conftest.py``).
"""

import math
import time
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from listramsey.bounds import theorem31_bounds
from listramsey.coloring import ListAssignment
from listramsey.construct import (
    ConstructionFailed,
    balanced_bipartite,
    lll_construct,
    lll_feasibility,
    max_feasible_n,
    union_bound_construct,
)
from listramsey.decide import NOT_RAMSEY, RAMSEY, is_family_ramsey, is_list_ramsey
from listramsey.extremal import m_parameter, symmetrize, turan_number
from listramsey.hypergraph import Hypergraph, is_colorable, is_r_partite, min_degree, named, weak_chromatic_number
from listramsey.morphism import verify_coloring

import oracles

K2, K3 = named("K2"), named("K3")


@pytest.fixture
def criterion(record_property):
    def tag(text):
        record_property("criterion", text)
    return tag


def test_c1_mantel(criterion):
    criterion("C1  ex(n, K3) = floor(n^2/4) for n = 3..8, each < 10 s, witnesses triangle-free")
    for n in range(3, 9):
        t0 = time.perf_counter()
        res = turan_number(n, K3)
        elapsed = time.perf_counter() - t0
        assert res.value == n * n // 4, n
        assert elapsed < 10, (n, elapsed)
        assert res.witness.num_edges == res.value
        adj = _adjacency(res.witness)
        assert np.trace(np.linalg.matrix_power(adj, 3)) == 0
        if n <= 6:
            assert oracles.brute_ex(n, K3.edge_list, 3) == res.value


def _adjacency(g):
    adj = np.zeros((g.n, g.n), dtype=np.int64)
    for a, b in g.edges:
        adj[a, b] = adj[b, a] = 1
    return adj


def test_c2_classical_ramsey(criterion):
    criterion("C2  constant 2-lists, K3: K5 not_ramsey, K6 ramsey in < 60 s")
    k5 = named("K5")
    out = is_list_ramsey(k5, ListAssignment.constant(k5, 2), K3)
    assert out.verdict == NOT_RAMSEY
    assert verify_coloring(k5, out.certificate, K3) is None
    k6 = named("K6")
    t0 = time.perf_counter()
    out = is_list_ramsey(k6, ListAssignment.constant(k6, 2), K3)
    assert out.verdict == RAMSEY and out.exhausted
    assert time.perf_counter() - t0 < 60


def test_c3_union_bound(criterion):
    criterion("C3  union bound n=8 k=6 G=K4,4: >= 95/100 seeds succeed within 100 retries, all K3-free")
    lists = ListAssignment.constant(named("K8"), 6)
    g = balanced_bipartite(8)
    wins = 0
    for seed in range(100):
        try:
            res = union_bound_construct(lists, g, seed=seed, max_retries=100)
        except ConstructionFailed:
            continue
        wins += 1
        assert res.coloring.respects(lists.lists)
        assert verify_coloring(lists.host, res.coloring, K3) is None
    assert wins >= 95, wins


def test_c4_local_lemma(criterion):
    criterion("C4  k=6: feasible exactly for n <= 24; n=24 construction over 20 seeds within 1e6 resamples, K3-free")
    for n in range(2, 25):
        assert lll_feasibility(n, 2, 6, K2).feasible, n
    rep = lll_feasibility(25, 2, 6, K2)
    assert not rep.feasible and rep.p == Fraction(1, 64) and rep.d == 23
    host = named("K24")
    for seed in range(20):
        for lists in (ListAssignment.constant(host, 6), ListAssignment.random(host, 6, 12, seed=1000 + seed)):
            res = lll_construct(lists, K2, seed=seed, max_resamples=10**6)
            assert res.resamples <= 10**6
            assert res.coloring.respects(lists.lists)
            assert verify_coloring(host, res.coloring, K3) is None


def test_c5_family_threshold(criterion):
    criterion("C5  s=2 k=2: K4 not_ramsey, K5 ramsey; bound sandwich 1.47 <= . <= 5")
    k4, k5 = named("K4"), named("K5")
    out = is_family_ramsey(k4, ListAssignment.constant(k4, 2), 2)
    assert out.verdict == NOT_RAMSEY
    for c in (0, 1):
        assert is_colorable(out.certificate.class_graph(k4, c), 2)
    assert is_family_ramsey(k5, ListAssignment.constant(k5, 2), 2).verdict == RAMSEY
    rep = theorem31_bounds(2, 2)
    assert round(rep.lower, 2) == 1.47 and rep.upper == 5
    assert rep.lower <= 5 <= rep.upper


def test_c6_parameters(criterion):
    criterion("C6  m(K3)=2, m(K4)=5/2, m(C5)=4/3; chi(K4^(3))=2; r-partite test exact on all graphs <= 6 vertices")
    for name, expected in (("K3", 2), ("K4", Fraction(5, 2)), ("C5", Fraction(4, 3))):
        assert m_parameter(named(name)) == expected
        assert oracles.m_by_edge_subsets(named(name).edge_list, 2) == expected
    assert weak_chromatic_number(named("K4^(3)")) == 2
    for n in range(2, 7):
        table = oracles.bipartite_table(n)
        for mask in range(len(table)):
            g = Hypergraph(2, n, oracles.graph_edges(mask, n))
            ok, part = is_r_partite(g)
            assert ok == bool(table[mask]), (n, mask)
            if ok:
                assert all(part.parts[a] != part.parts[b] for a, b in g.edges)


def _random_triangle_free(rng):
    n = int(rng.integers(3, 11))
    order = list(combinations(range(n), 2))
    rng.shuffle(order)
    adj = np.zeros((n, n), dtype=np.int64)
    stop = int(rng.integers(0, len(order) + 1))
    for a, b in order[:stop]:
        if not (adj[a] & adj[b]).any():
            adj[a, b] = adj[b, a] = 1
    return adj


def _twin(adj, remove, copy_of):
    out = adj.copy()
    out[remove, :] = adj[copy_of, :]
    out[:, remove] = adj[:, copy_of]
    out[remove, copy_of] = out[copy_of, remove] = 0
    out[remove, remove] = 0
    return out


def _as_graph(adj):
    n = len(adj)
    return Hypergraph(2, n, [(a, b) for a in range(n) for b in range(a + 1, n) if adj[a, b]])


def test_c7_symmetrization(criterion):
    criterion("C7  200 random triangle-free graphs: traces stay triangle-free, edges never drop, success meets target")
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        adj = _random_triangle_free(rng)
        n = len(adj)
        target = int(rng.integers(1, n))
        g = _as_graph(adj)
        tr = symmetrize(g, K3, target)
        cur = adj
        edges = int(cur.sum()) // 2
        for step in tr.steps:
            cur = _twin(cur, step.removed, step.copied)
            assert np.trace(np.linalg.matrix_power(cur, 3)) == 0
            now = int(cur.sum()) // 2
            assert now >= edges and now == step.edges_after
            edges = now
        assert _as_graph(cur) == tr.final
        assert tr.final.num_edges >= g.num_edges
        if tr.status == "success":
            assert min_degree(tr.final) >= target


def test_c8_exponential_growth(criterion):
    criterion("C8  largest feasible n for k = 2..12 within 1 of 2^k/e + 1")
    for k in range(2, 13):
        n = max_feasible_n(2, k, K2)
        assert abs(n - (2**k / math.e + 1)) <= 1, (k, n)
