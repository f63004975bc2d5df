"""Exact list-Ramsey decisions for concrete hosts and list assignments.

The search colors host edges one at a time in colex order, trying the
colors of each list in ascending order. A branch dies as soon as the edge
just colored completes a monochromatic copy of the pattern; only copies
through that edge need checking, since any monochromatic copy has a last
colored edge. Reaching a full coloring gives a certificate that the host is
not Ramsey; exhausting the tree proves that it is.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coloring import Coloring, ListAssignment
from .extremal import BudgetExceeded, _Budget
from .hypergraph import Hypergraph, _partition_search
from .morphism import EdgeIndex, find_through

RAMSEY = "ramsey"
NOT_RAMSEY = "not_ramsey"
UNKNOWN = "unknown"


@dataclass
class DecisionOutcome:
    verdict: str
    certificate: Optional[Coloring]
    nodes_explored: int
    exhausted: bool
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "exhausted": self.exhausted,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "certificate": None if self.certificate is None else self.certificate.to_dict()["colors"],
        }


class _PatternRule:
    """Forbid a monochromatic copy of a fixed pattern."""

    def __init__(self, host: Hypergraph, pattern: Hypergraph):
        self.pattern = pattern
        self.host = host
        self.classes: dict[int, EdgeIndex] = {}

    def add(self, e, c) -> bool:
        cls = self.classes.get(c)
        if cls is None:
            cls = self.classes[c] = EdgeIndex(self.host.r, self.host.n)
        cls.add(e)
        if find_through(cls, self.pattern, e, injective=True) is not None:
            cls.remove(e)
            return False
        return True

    def remove(self, e, c) -> None:
        self.classes[c].remove(e)


class _ColorableRule:
    """Keep every color class weakly ``s``-colorable.

    Each class carries a witness partition; a new edge that is not inside
    one witness class needs no work, otherwise the class is recolored from
    scratch.
    """

    def __init__(self, host: Hypergraph, s: int):
        self.host = host
        self.s = s
        self.classes: dict[int, EdgeIndex] = {}
        self.witness: dict[int, tuple[int, ...]] = {}
        self.saved: list[tuple[int, tuple[int, ...]]] = []

    def add(self, e, c) -> bool:
        cls = self.classes.get(c)
        if cls is None:
            cls = self.classes[c] = EdgeIndex(self.host.r, self.host.n)
            self.witness[c] = (0,) * self.host.n
        cls.add(e)
        w = self.witness[c]
        if len({w[v] for v in e}) > 1:
            self.saved.append((c, w))
            return True
        parts = _partition_search(cls.freeze(), self.s, lambda cl: len(set(cl)) > 1)
        if parts is None:
            cls.remove(e)
            return False
        self.saved.append((c, w))
        self.witness[c] = parts
        return True

    def remove(self, e, c) -> None:
        cc, w = self.saved.pop()
        self.witness[cc] = w
        self.classes[c].remove(e)


def _run(host, lists, rule, start, prefix, budget) -> Optional[dict]:
    """DFS from a partial coloring; returns the first completed coloring or None."""
    edges = host.edge_list
    total = len(edges)
    colors: dict[tuple[int, ...], int] = {}
    for e, c in prefix:
        if not rule.add(e, c):
            return None
        colors[e] = c

    def rec(i: int) -> bool:
        budget.tick()
        if i == total:
            return True
        e = edges[i]
        for c in lists[e]:
            if rule.add(e, c):
                colors[e] = c
                if rec(i + 1):
                    return True
                del colors[e]
                rule.remove(e, c)
        return False

    return dict(colors) if rec(start) else None


def _make_rule(host, target):
    kind, value = target
    return _PatternRule(host, value) if kind == "pattern" else _ColorableRule(host, value)


def _split(host, lists, target, depth):
    rule = _make_rule(host, target)
    edges = host.edge_list[:depth]
    roots = []
    prefix: list = []

    def rec(i):
        if i == len(edges):
            roots.append(list(prefix))
            return
        e = edges[i]
        for c in lists[e]:
            if rule.add(e, c):
                prefix.append((e, c))
                rec(i + 1)
                prefix.pop()
                rule.remove(e, c)

    rec(0)
    return roots, len(edges)


def _job(args):
    host, lists, target, start, prefix, max_nodes = args
    budget = _Budget(max_nodes)
    try:
        found = _run(host, lists.lists, _make_rule(host, target), start, prefix, budget)
    except BudgetExceeded:
        return UNKNOWN, None, budget.nodes
    return (NOT_RAMSEY if found is not None else RAMSEY), found, budget.nodes


def _decide(host, lists, target, max_nodes, time_limit_ms, workers) -> DecisionOutcome:
    t0 = time.perf_counter()
    if lists.host.edges != host.edges:
        raise ValueError("list assignment does not cover exactly the host edges")
    if workers <= 1:
        budget = _Budget(max_nodes, time_limit_ms)
        try:
            found = _run(host, lists.lists, _make_rule(host, target), 0, [], budget)
        except BudgetExceeded:
            ms = (time.perf_counter() - t0) * 1000
            return DecisionOutcome(UNKNOWN, None, budget.nodes, False, ms)
        ms = (time.perf_counter() - t0) * 1000
        if found is not None:
            return DecisionOutcome(NOT_RAMSEY, Coloring(found, lists.lists), budget.nodes, False, ms)
        return DecisionOutcome(RAMSEY, None, budget.nodes, True, ms)

    depth = min(host.num_edges, 1 + (4 * workers).bit_length() // max(1, lists.k.bit_length()))
    roots, start = _split(host, lists.lists, target, depth)
    jobs = [(host, lists, target, start, prefix, max_nodes) for prefix in roots]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_job, jobs))
    nodes = sum(n for _, _, n in results)
    ms = (time.perf_counter() - t0) * 1000
    # the first certificate in DFS order is the sequential one
    for verdict, found, _ in results:
        if verdict == NOT_RAMSEY:
            return DecisionOutcome(NOT_RAMSEY, Coloring(found, lists.lists), nodes, False, ms)
    if any(v == UNKNOWN for v, _, _ in results):
        return DecisionOutcome(UNKNOWN, None, nodes, False, ms)
    return DecisionOutcome(RAMSEY, None, nodes, True, ms)


def is_list_ramsey(
    host: Hypergraph,
    lists: ListAssignment,
    pattern: Hypergraph,
    max_nodes: Optional[int] = None,
    time_limit_ms: Optional[float] = None,
    workers: int = 1,
) -> DecisionOutcome:
    """Decide whether every ``lists``-coloring of ``host`` has a monochromatic ``pattern``.

    Returns verdict ``"not_ramsey"`` with a pattern-free certificate,
    ``"ramsey"`` after exhausting the search, or ``"unknown"`` when the node
    or time budget runs out first. An edgeless pattern is Ramsey exactly
    when it fits in the host.
    """
    if pattern.r != host.r:
        raise ValueError(f"uniformity mismatch: pattern r={pattern.r}, host r={host.r}")
    if pattern.num_edges == 0:
        if pattern.n <= host.n:
            return DecisionOutcome(RAMSEY, None, 0, True)
        colors = {e: lists[e][0] for e in host.edge_list}
        return DecisionOutcome(NOT_RAMSEY, Coloring(colors, lists.lists), 0, False)
    return _decide(host, lists, ("pattern", pattern), max_nodes, time_limit_ms, workers)


def is_family_ramsey(
    host: Hypergraph,
    lists: ListAssignment,
    s: int,
    max_nodes: Optional[int] = None,
    time_limit_ms: Optional[float] = None,
    workers: int = 1,
) -> DecisionOutcome:
    """Decide whether every ``lists``-coloring has a color class of chromatic number above ``s``.

    A ``"not_ramsey"`` certificate has every color class ``s``-colorable.
    Written for graphs; for ``r > 2`` the weak chromatic number is used.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    return _decide(host, lists, ("colorable", s), max_nodes, time_limit_ms, workers)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    trial: int
    verdict: str
    nodes: int
    ms: float


def scan_not_ramsey(
    nmax: int,
    k: int,
    pattern: Hypergraph,
    list_strategy: str = "constant",
    trials: int = 1,
    universe: Optional[int] = None,
    seed: int = 0,
    max_nodes: Optional[int] = None,
    time_limit_ms: Optional[float] = None,
) -> list[ScanRow]:
    """Run the decision procedure on complete hosts ``K_n^(r)`` for ``r <= n <= nmax``.

    ``list_strategy`` is ``"constant"`` (lists ``{0..k-1}``, one trial per
    ``n``) or ``"seeded-random"`` (``trials`` independent uniform
    ``k``-subsets of ``universe`` colors per edge, seeded from
    ``(seed, n, trial)``).

    A ``not_ramsey`` row for every tried assignment at size ``n`` is only
    evidence that the list Ramsey number exceeds ``n``: the existential
    quantifier over assignments is not exhausted.
    """
    if list_strategy not in ("constant", "seeded-random"):
        raise ValueError(f"unknown list strategy {list_strategy!r}")
    if universe is None:
        universe = 2 * k
    r = pattern.r
    rows = []
    for n in range(r, nmax + 1):
        host = Hypergraph.complete(n, r)
        n_trials = 1 if list_strategy == "constant" else trials
        for t in range(n_trials):
            if list_strategy == "constant":
                lists = ListAssignment.constant(host, k)
            else:
                ss = np.random.SeedSequence([seed, n, t])
                lists = ListAssignment.random(host, k, universe, seed=ss)
            out = is_list_ramsey(host, lists, pattern, max_nodes, time_limit_ms)
            rows.append(ScanRow(n, t, out.verdict, out.nodes_explored, out.elapsed_ms))
    return rows


def scan_to_csv(rows: list[ScanRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "trial", "verdict", "nodes", "ms"])
    for row in rows:
        writer.writerow([row.n, row.trial, row.verdict, row.nodes, f"{row.ms:.3f}"])
    return buf.getvalue()
