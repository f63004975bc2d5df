"""Randomized list colorings that avoid a monochromatic pattern.

Two constructions are provided.

``union_bound_construct`` gives every color ``c`` an independently and
uniformly relabeled copy ``G_c`` of a target graph ``G`` on the host's
vertex set and colors each edge by some ``c`` in its list with
``e in G_c``. With ``G`` a complete balanced bipartite graph each color
class is bipartite. Attempts are repeated until every edge is covered.

``lll_construct`` gives every color a uniformly random vertex map
``phi_c`` from the host into ``G`` and keeps, for each edge, the colors
whose map sends the edge onto an edge of ``G``. An edge with no such color
is a bad event; bad events are repaired by resampling the variables
``phi_c(u)`` (``c`` in the edge's list, ``u`` in the edge) of the lowest
bad edge in colex order until none is left (Moser-Tardos). Each color class
then maps homomorphically into ``G`` via ``phi_c``, so if ``G`` admits no
homomorphism from ``H`` the coloring has no monochromatic ``H``.

Randomness comes from :func:`numpy.random.default_rng` (PCG64); the same
seed and inputs always give the same output and the same counters.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Optional

import mpmath
import numpy as np

from .coloring import Coloring, ListAssignment
from .hypergraph import Hypergraph, min_degree
from .morphism import VertexMap

GENERATOR = "numpy.PCG64"


class ConstructionFailed(RuntimeError):
    """A randomized construction gave up; ``report`` says how far it got."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


class InfeasibleParameters(ValueError):
    """The local-lemma condition fails and best-effort mode was not requested."""


# ---------------------------------------------------------------------------
# feasibility
# ---------------------------------------------------------------------------

@dataclass
class FeasibilityReport:
    """The local-lemma condition ``e * p * (d + 1) <= 1`` for one instance.

    ``p`` bounds the probability that an edge keeps no color and is exact;
    ``condition_value`` is a float for display, while ``feasible`` is
    decided on an outward-rounded interval so it is never reported
    spuriously.
    """

    n: int
    r: int
    k: int
    min_degree: int
    target_vertices: int
    p: Fraction
    d: int
    condition_value: float
    condition_upper: float
    feasible: bool
    d_intersecting: Optional[int] = None
    d_refined: Optional[int] = None

    def to_dict(self) -> dict:
        out = dict(vars(self))
        out["p"] = float(self.p)
        out["p_exact"] = str(self.p)
        return out


def edge_keep_probability(r: int, g: Hypergraph) -> Fraction:
    """Lower bound ``(r-1)! * delta(G) / v(G)^(r-1)`` on a color surviving on an edge."""
    return Fraction(factorial(r - 1) * min_degree(g), g.n ** (r - 1))


def _condition(p: Fraction, d: int) -> tuple[float, float, bool]:
    with mpmath.workprec(200):
        value = mpmath.iv.e * mpmath.iv.mpf(p.numerator) / mpmath.iv.mpf(p.denominator) * (d + 1)
        upper = value.b
        return float(value.mid), float(upper), bool(upper <= 1)


def _check_target(r: int, g: Hypergraph) -> None:
    if g.r != r:
        raise ValueError(f"target has uniformity {g.r}, expected {r}")
    if g.n < r:
        raise ValueError(f"degenerate target: v(G) = {g.n} < r = {r}")


def complete_host_dependency(n: int, r: int) -> int:
    """Out-degree of the dependency digraph on the edges of ``K_n^(r)``.

    An edge depends on the other edges meeting it outside one distinguished
    vertex: ``C(n, r) - C(n - r + 1, r) - 1``.
    """
    return comb(n, r) - comb(n - r + 1, r) - 1


def lll_feasibility(n: int, r: int, k: int, g: Hypergraph) -> FeasibilityReport:
    """Check the local-lemma condition for lists of size ``k`` on ``K_n^(r)``."""
    _check_target(r, g)
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    p = (1 - edge_keep_probability(r, g)) ** k
    d = complete_host_dependency(n, r)
    value, upper, ok = _condition(p, d)
    return FeasibilityReport(n, r, k, min_degree(g), g.n, p, d, value, upper, ok, d_refined=d)


def max_intersecting(host: Hypergraph) -> int:
    """Largest number of other host edges meeting a single edge."""
    best = 0
    for e in host.edge_list:
        meeting = set()
        for v in e:
            meeting.update(host.incidence[v])
        best = max(best, len(meeting) - 1)
    return best


def lll_host_feasibility(host: Hypergraph, k: int, g: Hypergraph) -> FeasibilityReport:
    """Local-lemma condition on an arbitrary host.

    The dependency degree is the exact number of edges meeting an edge
    (disjoint edges give independent bad events). On complete hosts the
    smaller distinguished-vertex degree is valid too and is the one used;
    both are reported.
    """
    r = host.r
    _check_target(r, g)
    p = (1 - edge_keep_probability(r, g)) ** k
    d_int = max_intersecting(host)
    d_ref = complete_host_dependency(host.n, r) if host.is_complete() and host.n >= r else None
    d = d_ref if d_ref is not None else d_int
    value, upper, ok = _condition(p, d)
    return FeasibilityReport(host.n, r, k, min_degree(g), g.n, p, d, value, upper, ok, d_int, d_ref)


def max_feasible_n(r: int, k: int, g: Hypergraph) -> Optional[int]:
    """Largest ``n >= r`` for which :func:`lll_feasibility` holds, or ``None``.

    Feasibility is monotone in ``n`` so a doubling plus bisection search is used.
    """
    if not lll_feasibility(r, r, k, g).feasible:
        return None
    lo, hi = r, 2 * r
    while lll_feasibility(hi, r, k, g).feasible:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lll_feasibility(mid, r, k, g).feasible:
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# Moser-Tardos resampling
# ---------------------------------------------------------------------------

@dataclass
class HomomorphismSystem:
    """Per-color vertex maps from the host into the target graph."""

    target: Hypergraph
    maps: dict[int, VertexMap]

    def keeps(self, color: int, e: tuple[int, ...]) -> bool:
        return self.maps[color].map_edge(e) in self.target.edges

    def check(self, coloring: Coloring) -> list[tuple[tuple[int, ...], int]]:
        """Edges whose color's map does not send them onto a target edge."""
        return [(e, c) for e, c in coloring.colors.items() if not self.keeps(c, e)]

    def to_dict(self) -> dict:
        return {str(c): list(m.image) for c, m in sorted(self.maps.items())}


@dataclass
class LLLResult:
    coloring: Coloring
    system: HomomorphismSystem
    resamples: int
    seed: Optional[int]
    generator: str = GENERATOR
    feasibility: Optional[FeasibilityReport] = None

    def to_dict(self) -> dict:
        return {
            "method": "lll",
            "seed": self.seed,
            "generator": self.generator,
            "resamples": self.resamples,
            "class_sizes": {str(c): s for c, s in self.coloring.class_sizes().items()},
            "feasibility": None if self.feasibility is None else self.feasibility.to_dict(),
            **self.coloring.to_dict(),
            "maps": self.system.to_dict(),
        }


def lll_construct(
    lists: ListAssignment,
    g: Hypergraph,
    seed: Optional[int] = None,
    max_resamples: Optional[int] = None,
    best_effort: bool = False,
) -> LLLResult:
    """Find an ``L``-coloring whose color classes map homomorphically into ``g``.

    Args:
        lists: list assignment on the host.
        g: target graph, typically one admitting no homomorphism from the
            pattern to be avoided.
        seed: RNG seed.
        max_resamples: give up after this many resampling steps (default
            ``100 * e(host)``).
        best_effort: run even if the local-lemma condition fails.

    Raises:
        InfeasibleParameters: condition fails and ``best_effort`` is false.
        ConstructionFailed: the resampling budget ran out; the report lists
            the edges still bad.
    """
    host = lists.host
    r = host.r
    _check_target(r, g)
    report = lll_host_feasibility(host, lists.k, g)
    if not report.feasible and not best_effort:
        raise InfeasibleParameters(
            f"e*p*(d+1) = {report.condition_value:.4g} > 1 for n={host.n}, k={lists.k}; "
            "pass best_effort=True to run anyway"
        )
    edges = host.edge_list
    if max_resamples is None:
        max_resamples = 100 * len(edges)
    colors = lists.colors
    slot = {c: i for i, c in enumerate(colors)}
    edge_slots = [[slot[c] for c in lists[e]] for e in edges]
    incident: list[list[int]] = [[] for _ in range(host.n)]
    for i, e in enumerate(edges):
        for v in e:
            incident[v].append(i)

    rng = np.random.default_rng(seed)
    vg = g.n
    phi = rng.integers(0, vg, size=(len(colors), host.n)).tolist()
    target_edges = g.edges
    adj = g.adjacency if r == 2 else None

    def kept(i: int) -> list[int]:
        e = edges[i]
        out = []
        for s in edge_slots[i]:
            m = phi[s]
            if adj is not None:
                if adj[m[e[0]]] >> m[e[1]] & 1:
                    out.append(s)
            elif tuple(sorted(m[v] for v in e)) in target_edges:
                out.append(s)
        return out

    bad = bytearray(len(edges))
    heap = []
    for i in range(len(edges)):
        if not kept(i):
            bad[i] = 1
            heap.append(i)
    heapq.heapify(heap)

    resamples = 0
    while heap:
        i = heap[0]
        if not bad[i]:
            heapq.heappop(heap)
            continue
        if resamples >= max_resamples:
            still = [edges[j] for j in range(len(edges)) if bad[j]]
            raise ConstructionFailed(
                f"{len(still)} edges still have an empty restricted list after {resamples} resamples",
                {"seed": seed, "generator": GENERATOR, "resamples": resamples, "violated_edges": still},
            )
        e = edges[i]
        draws = rng.integers(0, vg, size=len(edge_slots[i]) * r).tolist()
        pos = 0
        for s in edge_slots[i]:
            for v in e:
                phi[s][v] = draws[pos]
                pos += 1
        resamples += 1
        touched = {j for v in e for j in incident[v]}
        for j in touched:
            now_bad = not kept(j)
            if now_bad and not bad[j]:
                heapq.heappush(heap, j)
            bad[j] = now_bad

    coloring = Coloring({e: colors[min(kept(i))] for i, e in enumerate(edges)}, lists.lists)
    system = HomomorphismSystem(g, {c: VertexMap(tuple(phi[slot[c]])) for c in colors})
    return LLLResult(coloring, system, resamples, seed, GENERATOR, report)


# ---------------------------------------------------------------------------
# union bound with relabeled copies
# ---------------------------------------------------------------------------

def balanced_bipartite(n: int) -> Hypergraph:
    """Complete bipartite graph with parts of sizes ``n // 2`` and ``n - n // 2``."""
    return Hypergraph.complete_bipartite(n // 2, n - n // 2)


@dataclass
class UnionBoundResult:
    coloring: Coloring
    attempts: int
    permutations: dict[int, tuple[int, ...]]
    seed: Optional[int]
    generator: str = GENERATOR

    def relabeled(self, g: Hypergraph, color: int) -> Hypergraph:
        """The copy ``sigma_c(G)`` drawn for ``color``."""
        sigma = self.permutations[color]
        return g.with_edges(tuple(sigma[v] for v in e) for e in g.edges)

    def to_dict(self) -> dict:
        return {
            "method": "union-bound",
            "seed": self.seed,
            "generator": self.generator,
            "retries": self.attempts,
            "class_sizes": {str(c): s for c, s in self.coloring.class_sizes().items()},
            **self.coloring.to_dict(),
            "permutations": {str(c): list(p) for c, p in sorted(self.permutations.items())},
        }


def union_bound_construct(
    lists: ListAssignment,
    g: Hypergraph,
    seed: Optional[int] = None,
    max_retries: int = 1000,
) -> UnionBoundResult:
    """Cover every edge by a randomly relabeled copy of ``g`` for one of its colors.

    Each attempt draws an independent uniform permutation ``sigma_c`` of the
    host vertices per color (ascending color order). The attempt succeeds
    when each edge lies in ``sigma_c(g)`` for some ``c`` in its list; the
    edge then gets the smallest such color. ``attempts`` counts the draws
    used, including the successful one.

    Raises:
        ConstructionFailed: no attempt covered every edge; the report gives
            the fewest uncovered edges seen.
    """
    host = lists.host
    if g.n != host.n:
        raise ValueError(f"target must have the host's {host.n} vertices, has {g.n}")
    if g.r != host.r:
        raise ValueError(f"target has uniformity {g.r}, expected {host.r}")
    rng = np.random.default_rng(seed)
    colors = lists.colors
    edges = host.edge_list
    r = host.r
    adj = g.adjacency if r == 2 else None
    fewest = None
    for attempt in range(1, max_retries + 1):
        perms = {c: rng.permutation(host.n).tolist() for c in colors}
        inverse = {}
        for c, sigma in perms.items():
            inv = [0] * host.n
            for v, w in enumerate(sigma):
                inv[w] = v
            inverse[c] = inv

        def covers(c: int, e: tuple[int, ...]) -> bool:
            inv = inverse[c]
            if adj is not None:
                return bool(adj[inv[e[0]]] >> inv[e[1]] & 1)
            return tuple(sorted(inv[v] for v in e)) in g.edges

        chosen = {}
        uncovered = 0
        for e in edges:
            c = next((c for c in lists[e] if covers(c, e)), None)
            if c is None:
                uncovered += 1
            else:
                chosen[e] = c
        if uncovered == 0:
            perms_t = {c: tuple(p) for c, p in perms.items()}
            return UnionBoundResult(Coloring(chosen, lists.lists), attempt, perms_t, seed)
        fewest = uncovered if fewest is None else min(fewest, uncovered)
    raise ConstructionFailed(
        f"no attempt covered every edge in {max_retries} tries",
        {"seed": seed, "generator": GENERATOR, "retries": max_retries, "fewest_uncovered": fewest},
    )


def prop14_threshold(n: int, pattern: Hypergraph, k: int, ex_value: Optional[int] = None, **budget) -> bool:
    """Whether ``n < (1 - ex(n, H) / C(n, r))^(-k / r)``.

    When true, relabeled copies of an extremal graph give an ``H``-free
    ``L``-coloring of ``K_n^(r)`` for any lists of size ``k``. The
    comparison is done exactly as ``n^r * (C - ex)^k < C^k``. ``ex(n, H)``
    is computed by :func:`listramsey.extremal.turan_number` unless given;
    ``budget`` is passed through to it.
    """
    r = pattern.r
    if ex_value is None:
        from .extremal import turan_number

        ex_value = turan_number(n, pattern, **budget).value
    total = comb(n, r)
    missing = total - ex_value
    if missing == 0:
        return True
    return n ** r * missing ** k < total ** k
