"""Homomorphism and copy search between uniform hypergraphs.

All searches share one backtracking kernel. Pattern vertices are processed
in a static order (pinned vertices first, then by decreasing degree with
ties broken by vertex id), and a pattern edge is checked as soon as its
last vertex in that order has been placed. For graphs the candidate images
of a vertex are cut down with neighbour bitmasks.

Homomorphisms may identify vertices but must send each pattern edge to an
``r``-set of distinct target vertices that is an edge; copies (embeddings)
are additionally injective.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

from .coloring import Coloring
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class VertexMap:
    """Image of every source vertex in a target vertex set."""

    image: tuple[int, ...]

    @property
    def from_n(self) -> int:
        return len(self.image)

    def __getitem__(self, v: int) -> int:
        return self.image[v]

    def map_edge(self, e) -> tuple[int, ...]:
        return tuple(sorted(self.image[v] for v in e))

    def is_homomorphism(self, pattern: Hypergraph, target: Hypergraph) -> bool:
        if len(self.image) != pattern.n or any(not 0 <= y < target.n for y in self.image):
            return False
        return all(self.map_edge(e) in target.edges for e in pattern.edges)


@dataclass(frozen=True)
class Embedding(VertexMap):
    """An injective vertex map witnessing a (not necessarily induced) copy."""

    def __post_init__(self):
        if len(set(self.image)) != len(self.image):
            raise ValueError(f"embedding image {self.image} is not injective")


class EdgeIndex:
    """Mutable edge set with the lookup structures the search kernel reads.

    Exposes the same attributes as :class:`Hypergraph` (``r``, ``n``,
    ``edges``, ``adjacency``, ``incidence``, ``degrees``) so either can be
    searched. Used by the branch-and-bound and decision searches, which add
    and remove edges while descending.
    """

    def __init__(self, r: int, n: int, edges=()):
        self.r = r
        self.n = n
        self.edges: set[tuple[int, ...]] = set()
        self.adjacency = [0] * n
        self.incidence: list[set[tuple[int, ...]]] = [set() for _ in range(n)]
        self.degrees = [0] * n
        for e in edges:
            self.add(tuple(sorted(e)))

    def add(self, e: tuple[int, ...]) -> None:
        self.edges.add(e)
        for v in e:
            self.incidence[v].add(e)
            self.degrees[v] += 1
        if self.r == 2:
            a, b = e
            self.adjacency[a] |= 1 << b
            self.adjacency[b] |= 1 << a

    def remove(self, e: tuple[int, ...]) -> None:
        self.edges.remove(e)
        for v in e:
            self.incidence[v].discard(e)
            self.degrees[v] -= 1
        if self.r == 2:
            a, b = e
            self.adjacency[a] &= ~(1 << b)
            self.adjacency[b] &= ~(1 << a)

    def freeze(self) -> Hypergraph:
        return Hypergraph(self.r, self.n, frozenset(self.edges))


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    # pattern edges completed when order[i] is placed
    checks: tuple[tuple[tuple[int, ...], ...], ...]
    # earlier-placed pattern vertices sharing an edge with order[i]
    back: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=4096)
def _plan(pattern: Hypergraph, pinned: tuple[int, ...]) -> _Plan:
    deg = pattern.degrees
    rest = sorted((v for v in range(pattern.n) if v not in pinned), key=lambda v: (-deg[v], v))
    order = tuple(pinned) + tuple(rest)
    pos = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, ...]]] = [[] for _ in order]
    back: list[set[int]] = [set() for _ in order]
    for e in pattern.edge_list:
        last = max(pos[v] for v in e)
        checks[last].append(e)
        for v in e:
            for w in e:
                if pos[w] < pos[v]:
                    back[pos[v]].add(w)
    return _Plan(order, tuple(map(tuple, checks)), tuple(tuple(sorted(b)) for b in back))


def _search(pattern, target, injective: bool, pinned: Optional[dict] = None) -> Iterator[tuple[int, ...]]:
    """Yield every vertex map of ``pattern`` into ``target`` meeting the constraints.

    ``pinned`` fixes the images of some pattern vertices up front.
    """
    pinned = pinned or {}
    plan = _plan(pattern, tuple(pinned))
    order, checks, back = plan.order, plan.checks, plan.back
    if pattern.n and not target.n:
        return
    graph = target.r == 2
    adj = target.adjacency if graph else None
    edges = target.edges
    tdeg = target.degrees
    pdeg = pattern.degrees
    img = [-1] * pattern.n
    all_mask = (1 << target.n) - 1
    m = len(order)

    def candidates(i: int):
        x = order[i]
        if x in pinned:
            return (pinned[x],)
        if graph:
            mask = all_mask
            for w in back[i]:
                mask &= adj[img[w]]
            out = []
            while mask:
                low = mask & -mask
                out.append(low.bit_length() - 1)
                mask ^= low
            return out
        if back[i]:
            anchor = min((img[w] for w in back[i]), key=lambda y: len(target.incidence[y]))
            return sorted({v for e in target.incidence[anchor] for v in e})
        return range(target.n)

    def rec(i: int, used: int):
        if i == m:
            yield tuple(img)
            return
        x = order[i]
        for y in candidates(i):
            if injective:
                if used >> y & 1 or tdeg[y] < pdeg[x]:
                    continue
            img[x] = y
            ok = True
            if not graph:
                for e in checks[i]:
                    if tuple(sorted(img[v] for v in e)) not in edges:
                        ok = False
                        break
            elif x in pinned:
                for a, b in checks[i]:
                    if not adj[img[a]] >> img[b] & 1:
                        ok = False
                        break
            if ok:
                yield from rec(i + 1, used | (1 << y))
        img[x] = -1

    yield from rec(0, 0)


def _first(pattern, target, injective: bool, pinned: dict, plan: _Plan) -> Optional[tuple[int, ...]]:
    """Existence version of :func:`_search`; returns the first map found."""
    order, checks, back = plan.order, plan.checks, plan.back
    if pattern.n and not target.n:
        return None
    edges = target.edges
    tdeg = target.degrees
    pdeg = pattern.degrees
    img = [-1] * pattern.n
    m = len(order)
    graph = target.r == 2
    adj = target.adjacency if graph else None
    all_mask = (1 << target.n) - 1
    incidence = target.incidence

    def rec(i: int, used: int) -> bool:
        if i == m:
            return True
        x = order[i]
        if x in pinned:
            y = pinned[x]
            if injective and (used >> y & 1 or tdeg[y] < pdeg[x]):
                return False
            img[x] = y
            if graph:
                for a, b in checks[i]:
                    if not adj[img[a]] >> img[b] & 1:
                        return False
            else:
                for e in checks[i]:
                    if tuple(sorted(img[v] for v in e)) not in edges:
                        return False
            return rec(i + 1, used | (1 << y))
        if graph:
            mask = all_mask
            for w in back[i]:
                mask &= adj[img[w]]
            if injective:
                mask &= ~used
            while mask:
                low = mask & -mask
                mask ^= low
                y = low.bit_length() - 1
                if injective and tdeg[y] < pdeg[x]:
                    continue
                img[x] = y
                if rec(i + 1, used | low):
                    return True
            return False
        if back[i]:
            anchor = min((img[w] for w in back[i]), key=lambda y: len(incidence[y]))
            cands = sorted({v for e in incidence[anchor] for v in e})
        else:
            cands = range(target.n)
        for y in cands:
            if injective and (used >> y & 1 or tdeg[y] < pdeg[x]):
                continue
            img[x] = y
            if all(tuple(sorted(img[v] for v in e)) in edges for e in checks[i]):
                if rec(i + 1, used | (1 << y)):
                    return True
        return False

    return tuple(img) if rec(0, 0) else None


@lru_cache(maxsize=1024)
def _through_plans(pattern: Hypergraph) -> tuple[tuple[tuple[int, ...], _Plan], ...]:
    """One plan per (pattern edge, vertex order) used to pin a new edge."""
    out = []
    seen = set()
    for f in pattern.edge_list:
        for perm in permutations(f):
            if perm in seen:
                continue
            seen.add(perm)
            out.append((perm, _plan(pattern, perm)))
    return tuple(out)


def _check_uniformity(pattern: Hypergraph, target) -> None:
    if pattern.r != target.r:
        raise ValueError(f"uniformity mismatch: pattern r={pattern.r}, target r={target.r}")


def find_homomorphism(pattern: Hypergraph, target: Hypergraph) -> Optional[VertexMap]:
    """A homomorphism from ``pattern`` to ``target``, or ``None`` if there is none."""
    _check_uniformity(pattern, target)
    img = _first(pattern, target, False, {}, _plan(pattern, ()))
    return None if img is None else VertexMap(img)


def is_hom_free(g: Hypergraph, pattern: Hypergraph) -> bool:
    """True when no homomorphism maps ``pattern`` into ``g``."""
    return find_homomorphism(pattern, g) is None


def find_copy(host: Hypergraph, pattern: Hypergraph) -> Optional[Embedding]:
    """An injective embedding of ``pattern`` into ``host``, or ``None``."""
    _check_uniformity(pattern, host)
    if pattern.n > host.n:
        return None
    img = _first(pattern, host, True, {}, _plan(pattern, ()))
    return None if img is None else Embedding(img)


def iter_copies(host: Hypergraph, pattern: Hypergraph, distinct: bool = True) -> Iterator[Embedding]:
    """Enumerate embeddings of ``pattern`` into ``host``.

    With ``distinct`` only one embedding per image edge set is produced, so
    automorphic relabelings of the same copy are reported once.
    """
    _check_uniformity(pattern, host)
    if pattern.n > host.n:
        return
    seen = set()
    for img in _search(pattern, host, injective=True):
        emb = Embedding(img)
        if distinct:
            key = frozenset(emb.map_edge(e) for e in pattern.edges)
            if key in seen:
                continue
            seen.add(key)
        yield emb


def find_through(target, pattern: Hypergraph, edge: tuple[int, ...], injective: bool) -> Optional[tuple[int, ...]]:
    """A map of ``pattern`` into ``target`` that uses ``edge`` as the image of some pattern edge.

    ``target`` must already contain ``edge``. Every map that uses the edge
    sends some pattern edge onto it in some vertex order, so trying each
    pattern edge in each order is complete. This is the incremental check
    used when a single edge has just been added.
    """
    _check_uniformity(pattern, target)
    edge = tuple(edge)
    for pinned_vertices, plan in _through_plans(pattern):
        img = _first(pattern, target, injective, dict(zip(pinned_vertices, edge)), plan)
        if img is not None:
            return img
    return None


def verify_coloring(host: Hypergraph, coloring: Coloring, pattern: Hypergraph):
    """Find a monochromatic copy of ``pattern`` in ``coloring``.

    Returns ``(color, embedding)`` for the first color class (ascending ids)
    containing a copy, or ``None`` if the coloring is ``pattern``-free.
    An edgeless pattern is found whenever it fits in the host; its color is
    then the smallest color used (``None`` if the host has no edges).

    Raises:
        ValueError: if some host edge is uncolored.
    """
    _check_uniformity(pattern, host)
    missing = host.edges - coloring.colors.keys()
    if missing:
        raise ValueError(f"coloring is incomplete: {len(missing)} edges uncolored, e.g. {min(missing)}")
    classes = coloring.classes()
    if pattern.num_edges == 0:
        if pattern.n > host.n:
            return None
        return (min(classes) if classes else None), Embedding(tuple(range(pattern.n)))
    for c in classes:
        emb = find_copy(coloring.class_graph(host, c), pattern)
        if emb is not None:
            return c, emb
    return None
