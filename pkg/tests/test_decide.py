import csv
import io
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listramsey.cnf import encode, to_dimacs
from listramsey.coloring import Coloring, ListAssignment
from listramsey.decide import (
    NOT_RAMSEY,
    RAMSEY,
    UNKNOWN,
    is_family_ramsey,
    is_list_ramsey,
    scan_not_ramsey,
    scan_to_csv,
)
from listramsey.hypergraph import Hypergraph, is_colorable, named
from listramsey.morphism import verify_coloring

K3 = named("K3")


def _const(name, k):
    host = named(name)
    return host, ListAssignment.constant(host, k)


def test_single_color_triangle():
    host, lists = _const("K3", 1)
    out = is_list_ramsey(host, lists, K3)
    assert out.verdict == RAMSEY and out.exhausted and out.certificate is None


def test_r33_five():
    host, lists = _const("K5", 2)
    out = is_list_ramsey(host, lists, K3)
    assert out.verdict == NOT_RAMSEY and not out.exhausted
    assert verify_coloring(host, out.certificate, K3) is None
    assert out.certificate.respects(lists.lists)
    # both classes are 5-cycles
    assert sorted(out.certificate.class_sizes().values()) == [5, 5]


def test_r33_six():
    host, lists = _const("K6", 2)
    out = is_list_ramsey(host, lists, K3)
    assert out.verdict == RAMSEY and out.exhausted


def test_budget_gives_unknown():
    host, lists = _const("K6", 2)
    out = is_list_ramsey(host, lists, K3, max_nodes=20)
    assert out.verdict == UNKNOWN and not out.exhausted and out.certificate is None


def test_workers_same_verdict():
    for name in ("K5", "K6"):
        host, lists = _const(name, 2)
        seq = is_list_ramsey(host, lists, K3)
        par = is_list_ramsey(host, lists, K3, workers=2)
        assert par.verdict == seq.verdict
        if par.certificate is not None:
            assert verify_coloring(host, par.certificate, K3) is None


def test_edgeless_pattern():
    host, lists = _const("K4", 2)
    assert is_list_ramsey(host, lists, Hypergraph.empty(3)).verdict == RAMSEY
    assert is_list_ramsey(host, lists, Hypergraph.empty(5)).verdict == NOT_RAMSEY


def test_random_lists_certificate():
    host = named("K6")
    lists = ListAssignment.random(host, 2, 4, seed=0)
    out = is_list_ramsey(host, lists, K3)
    if out.verdict == NOT_RAMSEY:
        assert out.certificate.respects(lists.lists)
        assert verify_coloring(host, out.certificate, K3) is None
    else:
        assert out.verdict == RAMSEY


def test_three_uniform_instance():
    host = Hypergraph.complete(5, 3)
    lists = ListAssignment.constant(host, 2)
    out = is_list_ramsey(host, lists, named("K4^(3)"))
    assert out.verdict == NOT_RAMSEY
    assert verify_coloring(host, out.certificate, named("K4^(3)")) is None


@pytest.mark.parametrize("name, k, s, expected", [
    ("K3", 1, 2, RAMSEY),
    ("K2", 1, 2, NOT_RAMSEY),
    ("K4", 2, 2, NOT_RAMSEY),
    ("K5", 2, 2, RAMSEY),
])
def test_family_examples(name, k, s, expected):
    host, lists = _const(name, k)
    out = is_family_ramsey(host, lists, s)
    assert out.verdict == expected
    if expected == NOT_RAMSEY:
        for c in lists.colors:
            cls = out.certificate.class_graph(host, c)
            assert is_colorable(cls, s)


def test_family_s1_is_edgeless_classes():
    host, lists = _const("K3", 3)
    out = is_family_ramsey(host, lists, 1)
    assert out.verdict == RAMSEY
    host, lists = _const("K2", 1)
    assert is_family_ramsey(host, lists, 1).verdict == RAMSEY


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 6), st.integers(0, 10**6), st.data())
def test_certificates_restrict_to_subhosts(n, seed, data):
    host = Hypergraph.complete(n, 2)
    lists = ListAssignment.random(host, 2, 3, seed=seed)
    out = is_list_ramsey(host, lists, K3)
    if out.verdict != NOT_RAMSEY:
        return
    v = data.draw(st.integers(0, n - 1))
    sub = Hypergraph(2, n, [e for e in host.edges if v not in e])
    cert = out.certificate.restrict(sub)
    assert verify_coloring(sub, cert, K3) is None
    sub_out = is_list_ramsey(sub, lists.restrict(sub), K3)
    assert sub_out.verdict == NOT_RAMSEY


def test_scan_single_color():
    rows = scan_not_ramsey(4, 1, K3)
    assert [(r.n, r.verdict) for r in rows] == [(2, NOT_RAMSEY), (3, RAMSEY), (4, RAMSEY)]


def test_scan_two_colors():
    rows = scan_not_ramsey(5, 2, K3)
    assert all(r.verdict == NOT_RAMSEY for r in rows)


def test_scan_random_lists_deterministic():
    a = scan_not_ramsey(3, 2, K3, "seeded-random", trials=5, universe=4, seed=1)
    b = scan_not_ramsey(3, 2, K3, "seeded-random", trials=5, universe=4, seed=1)
    assert [(r.n, r.trial, r.verdict) for r in a] == [(r.n, r.trial, r.verdict) for r in b]
    assert len(a) == 10
    # two colors per edge always allow a non-monochromatic triangle
    assert all(r.verdict == NOT_RAMSEY for r in a)


def test_scan_csv():
    text = scan_to_csv(scan_not_ramsey(3, 1, K3))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "trial", "verdict", "nodes", "ms"]
    assert [r[2] for r in rows[1:]] == [NOT_RAMSEY, RAMSEY]


def test_scan_bad_strategy():
    with pytest.raises(ValueError):
        scan_not_ramsey(3, 1, K3, "adversarial")


def test_outcome_json():
    host, lists = _const("K5", 2)
    d = is_list_ramsey(host, lists, K3).to_dict()
    assert d["verdict"] == NOT_RAMSEY and len(d["certificate"]) == 10


# ---------------------------------------------------------------- CNF export

def _evaluate(enc, coloring):
    true = enc.assignment(coloring)
    return all(any((lit > 0) == (abs(lit) in true) for lit in clause) for clause in enc.clauses)


def test_cnf_k5_certificate_satisfies():
    host, lists = _const("K5", 2)
    out = is_list_ramsey(host, lists, K3)
    enc = encode(host, lists, K3)
    assert enc.satisfied_by(out.certificate)
    assert _evaluate(enc, out.certificate)


def test_cnf_k6_unsatisfiable_by_any_coloring():
    host, lists = _const("K6", 2)
    enc = encode(host, lists, K3)
    edges = host.edge_list
    for bits in product((0, 1), repeat=len(edges)):
        col = Coloring(dict(zip(edges, bits)))
        assert not enc.satisfied_by(col)


def test_cnf_decode_roundtrip():
    host, lists = _const("K5", 2)
    out = is_list_ramsey(host, lists, K3)
    enc = encode(host, lists, K3)
    model = sorted(enc.assignment(out.certificate))
    assert enc.decode(model).colors == out.certificate.colors


def test_dimacs_header():
    host, lists = _const("K4", 2)
    text = to_dimacs(host, lists, K3)
    header = next(l for l in text.splitlines() if l.startswith("p "))
    _, fmt, nv, nc = header.split()
    clauses = [l for l in text.splitlines() if l and l[0] not in "cp"]
    assert fmt == "cnf" and int(nv) == 12 and int(nc) == len(clauses)
    assert all(l.endswith(" 0") for l in clauses)
