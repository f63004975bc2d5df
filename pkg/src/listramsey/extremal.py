"""Exact small-n Turán numbers, density tables, m(H) and Zykov symmetrization.

``turan_number`` is a branch and bound over the ``C(n, r)`` candidate edges
in colex order. Each edge is first tried in, then out; an inclusion is
rejected as soon as the new edge completes a copy (or a homomorphic image)
of the forbidden pattern, and a branch is cut when the edges placed so far
plus the edges still to decide cannot beat the incumbent. A greedy pass
seeds the incumbent.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Optional

from .hypergraph import Hypergraph, colex_key, duplicate_vertex, min_degree
from .morphism import EdgeIndex, find_through, is_hom_free

COPY_FREE = "copy-free"
HOM_FREE = "hom-free"
MODES = (COPY_FREE, HOM_FREE)


class BudgetExceeded(RuntimeError):
    """A search hit its node or wall-clock budget before finishing."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class _Budget:
    def __init__(self, max_nodes: Optional[int] = None, time_limit_ms: Optional[float] = None):
        self.max_nodes = max_nodes
        self.deadline = None if time_limit_ms is None else time.perf_counter() + time_limit_ms / 1000
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exhausted", self.nodes)
        if self.deadline is not None and not self.nodes & 255 and time.perf_counter() > self.deadline:
            raise BudgetExceeded("time budget exhausted", self.nodes)


@dataclass
class TuranResult:
    n: int
    r: int
    mode: str
    value: int
    witness: Hypergraph
    nodes_explored: int = 0
    elapsed_ms: float = 0.0
    status: str = "exact"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "mode": self.mode,
            "value": self.value,
            "witness_edges": [list(e) for e in self.witness.edge_list],
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "status": self.status,
        }


def _violates(index: EdgeIndex, pattern: Hypergraph, e, mode: str) -> bool:
    return find_through(index, pattern, e, injective=(mode == COPY_FREE)) is not None


def _greedy(n: int, pattern: Hypergraph, mode: str, candidates) -> list[tuple[int, ...]]:
    index = EdgeIndex(pattern.r, n)
    for e in candidates:
        index.add(e)
        if _violates(index, pattern, e, mode):
            index.remove(e)
    return sorted(index.edges, key=colex_key)


def _branch(n, pattern, mode, candidates, start, prefix, best, budget):
    """Explore one subtree; returns (best value, best edges or None if not improved)."""
    index = EdgeIndex(pattern.r, n, prefix)
    total = len(candidates)
    state = {"best": best, "witness": None}

    def rec(i: int, count: int) -> None:
        budget.tick()
        if count + (total - i) <= state["best"]:
            return
        if i == total:
            state["best"] = count
            state["witness"] = sorted(index.edges, key=colex_key)
            return
        e = candidates[i]
        index.add(e)
        if not _violates(index, pattern, e, mode):
            rec(i + 1, count + 1)
        index.remove(e)
        rec(i + 1, count)

    rec(start, len(prefix))
    return state["best"], state["witness"]


def _subtree_job(args):
    n, pattern, mode, candidates, start, prefix, best, max_nodes = args
    budget = _Budget(max_nodes)
    value, witness = _branch(n, pattern, mode, candidates, start, prefix, best, budget)
    return value, witness, budget.nodes


def _split(n, pattern, mode, candidates, depth):
    """Subtree roots after deciding the first ``depth`` edges, in DFS order."""
    roots = []
    index = EdgeIndex(pattern.r, n)

    def rec(i):
        if i == depth or i == len(candidates):
            roots.append((i, sorted(index.edges, key=colex_key)))
            return
        e = candidates[i]
        index.add(e)
        if not _violates(index, pattern, e, mode):
            rec(i + 1)
        index.remove(e)
        rec(i + 1)

    rec(0)
    return roots


def turan_number(
    n: int,
    pattern: Hypergraph,
    mode: str = COPY_FREE,
    max_nodes: Optional[int] = None,
    time_limit_ms: Optional[float] = None,
    workers: int = 1,
) -> TuranResult:
    """Exact maximum edge count of an ``n``-vertex ``pattern``-free ``r``-graph.

    Args:
        n: host vertex count, at least ``pattern.r``.
        pattern: the forbidden ``r``-graph.
        mode: ``"copy-free"`` forbids copies (``ex(n, H)``); ``"hom-free"``
            forbids homomorphic images (``ex_hom(H, n)``).
        max_nodes, time_limit_ms: search budget; exceeding it raises
            :class:`BudgetExceeded`.
        workers: split the search tree over this many processes. The value
            never depends on it; the witness is the one the sequential run
            returns.

    An edgeless pattern gives the complete graph with status
    ``"edgeless-pattern"``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    r = pattern.r
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    t0 = time.perf_counter()
    if pattern.num_edges == 0:
        full = Hypergraph.complete(n, r)
        return TuranResult(n, r, mode, full.num_edges, full, 0, 0.0, status="edgeless-pattern")

    candidates = sorted(combinations(range(n), r), key=colex_key)
    greedy = _greedy(n, pattern, mode, candidates)
    best, witness, nodes = len(greedy), greedy, 0

    if workers <= 1:
        budget = _Budget(max_nodes, time_limit_ms)
        try:
            value, found = _branch(n, pattern, mode, candidates, 0, [], best, budget)
        except BudgetExceeded as exc:
            exc.nodes = budget.nodes
            raise
        nodes = budget.nodes
        if found is not None:
            best, witness = value, found
    else:
        depth = min(len(candidates), max(1, (4 * workers).bit_length() + 1))
        roots = _split(n, pattern, mode, candidates, depth)
        jobs = [(n, pattern, mode, candidates, i, prefix, best, max_nodes) for i, prefix in roots]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree_job, jobs))
        # the first subtree (in DFS order) reaching the maximum holds the sequential witness
        top = max(v for v, _, _ in results)
        for value, found, sub_nodes in results:
            nodes += sub_nodes
        if top > best:
            best = top
            witness = next(found for value, found, _ in results if value == top and found is not None)

    elapsed = (time.perf_counter() - t0) * 1000
    return TuranResult(n, r, mode, best, Hypergraph(r, n, frozenset(witness)), nodes, elapsed)


@dataclass
class DensityEstimate:
    """Exact ``ex(n, H) / C(n, r)`` ratios for a range of ``n``.

    The last ratio is an upper estimate of the Turán density: the sequence
    is non-increasing in ``n`` by averaging over ``(n-1)``-vertex subsets.
    """

    rows: list[tuple[int, int, Fraction]] = field(default_factory=list)
    mode: str = COPY_FREE
    truncated: bool = False
    truncated_at: Optional[int] = None

    @property
    def ratios(self) -> list[tuple[int, Fraction]]:
        return [(n, ratio) for n, _, ratio in self.rows]

    @property
    def monotone(self) -> bool:
        vals = [ratio for _, _, ratio in self.rows]
        return all(a >= b for a, b in zip(vals, vals[1:]))

    @property
    def upper_estimate(self) -> Optional[Fraction]:
        return self.rows[-1][2] if self.rows else None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "rows": [{"n": n, "ex": ex, "ratio": float(q), "ratio_exact": str(q)} for n, ex, q in self.rows],
            "monotone": self.monotone,
            "truncated": self.truncated,
            "truncated_at": self.truncated_at,
            "upper_estimate": None if self.upper_estimate is None else float(self.upper_estimate),
        }


def density_estimate(
    pattern: Hypergraph,
    n_max: int,
    mode: str = COPY_FREE,
    max_nodes: Optional[int] = None,
    time_limit_ms: Optional[float] = None,
) -> DensityEstimate:
    """Table of ``ex(n, H) / C(n, r)`` for ``max(r, v(H)) <= n <= n_max``.

    Below ``v(H)`` every graph is trivially free, so the table starts there.
    The budget applies per cell; the first cell exceeding it ends the table
    with ``truncated`` set.
    """
    est = DensityEstimate(mode=mode)
    for n in range(max(pattern.r, pattern.n), n_max + 1):
        try:
            res = turan_number(n, pattern, mode, max_nodes=max_nodes, time_limit_ms=time_limit_ms)
        except BudgetExceeded:
            est.truncated = True
            est.truncated_at = n
            break
        est.rows.append((n, res.value, Fraction(res.value, comb(n, pattern.r))))
    return est


def m_parameter(pattern: Hypergraph) -> Fraction:
    """``max (e(H') - 1) / (v(H') - r)`` over subgraphs with at least two edges.

    Only vertices incident to the chosen edges count towards ``v(H')``.
    Adding edges without adding vertices raises the ratio, so the maximum is
    attained on an induced subgraph and it is enough to scan vertex subsets.
    """
    if pattern.num_edges < 2:
        raise ValueError("m(H) is undefined for hypergraphs with fewer than two edges")
    r = pattern.r
    support = [v for v in range(pattern.n) if pattern.degrees[v] > 0]
    edges = pattern.edge_list
    best: Optional[Fraction] = None
    for size in range(r + 1, len(support) + 1):
        for subset in combinations(support, size):
            inside = set(subset)
            count = sum(1 for e in edges if inside.issuperset(e))
            if count >= 2:
                value = Fraction(count - 1, size - r)
                if best is None or value > best:
                    best = value
    return best


# ---------------------------------------------------------------------------
# symmetrization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetrizationStep:
    removed: int
    copied: int
    edges_before: int
    edges_after: int


@dataclass
class SymmetrizationTrace:
    steps: list[SymmetrizationStep]
    final: Hypergraph
    status: str  # "success" or "stuck"
    target_min_degree: int

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "target_min_degree": self.target_min_degree,
            "steps": [vars(s) for s in self.steps],
            "final_edges": [list(e) for e in self.final.edge_list],
            "final_min_degree": min_degree(self.final) if self.final.n else None,
        }


def degree_target(density: float, eps: float, n: int, r: int):
    """``(density - eps) * n^(r-1) / (r-1)!``, the degree aimed at by symmetrization.

    Exact when the inputs are rationals.
    """
    return (density - eps) * n ** (r - 1) / factorial(r - 1)


def symmetrize(g: Hypergraph, pattern: Hypergraph, target_min_degree, verify: bool = True) -> SymmetrizationTrace:
    """Replace low-degree vertices by twins of a maximum-degree vertex.

    While some vertex has degree below the target, the lowest-degree vertex
    ``v`` (smallest id on ties) is deleted and a twin of the highest-degree
    vertex ``u != v`` (smallest id on ties) takes its place. A step is kept
    only if it strictly increases the edge count; otherwise the run stops
    with status ``"stuck"``. Twinning preserves homomorphism-freeness; with
    ``verify`` every accepted graph is rechecked anyway.

    Raises:
        ValueError: if ``g`` admits a homomorphism from ``pattern``.
    """
    if not is_hom_free(g, pattern):
        raise ValueError("starting graph is not homomorphism-free for the pattern")
    steps: list[SymmetrizationStep] = []
    current = g
    while current.n and min(current.degrees) < target_min_degree:
        deg = current.degrees
        v = min(range(current.n), key=lambda x: (deg[x], x))
        others = [x for x in range(current.n) if x != v]
        if not others:
            return SymmetrizationTrace(steps, current, "stuck", target_min_degree)
        u = min(others, key=lambda x: (-deg[x], x))
        nxt = duplicate_vertex(current, v, u)
        if nxt.num_edges <= current.num_edges:
            return SymmetrizationTrace(steps, current, "stuck", target_min_degree)
        if verify and not is_hom_free(nxt, pattern):
            raise AssertionError(f"twinning {u} over {v} created a homomorphic image of the pattern")
        steps.append(SymmetrizationStep(v, u, current.num_edges, nxt.num_edges))
        current = nxt
    return SymmetrizationTrace(steps, current, "success", target_min_degree)
