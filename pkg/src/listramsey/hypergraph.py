"""Uniform hypergraphs on dense integer vertex sets.

A :class:`Hypergraph` is an ``r``-uniform hypergraph on vertices ``0..n-1``
whose edges are stored as strictly increasing ``r``-tuples. Graphs are the
``r == 2`` case and get a bitmask adjacency mirror for the search kernels.

Besides the container this module holds the vertex-level parameters used
throughout the package: degrees, the weak chromatic number, the rainbow
``r``-partite test and the vertex duplication step of Zykov symmetrization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Optional


def colex_key(edge: tuple[int, ...]) -> tuple[int, ...]:
    """Sort key putting edges in colexicographic order."""
    return edge[::-1]


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph with vertices ``0..n-1``.

    Edges may be passed in any iterable form; they are canonicalized to
    sorted tuples and deduplicated. Instances are immutable.

    Example:
        >>> g = Hypergraph(2, 3, [(1, 0), (2, 1)])
        >>> g.edge_list
        [(0, 1), (1, 2)]
    """

    r: int
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.r or len(set(t)) != self.r:
                raise ValueError(f"edge {tuple(e)} is not a set of {self.r} distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise ValueError(f"edge {t} has a vertex outside 0..{self.n - 1}")
            canon.add(t)
        object.__setattr__(self, "edges", frozenset(canon))

    # ------------------------------------------------------------------ basics
    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> list[tuple[int, ...]]:
        """Edges in colex order (the canonical order used by every search)."""
        return sorted(self.edges, key=colex_key)

    @cached_property
    def adjacency(self) -> list[int]:
        """Neighbour bitmasks; only defined for graphs."""
        if self.r != 2:
            raise ValueError("bitmask adjacency is only available for r = 2")
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    @cached_property
    def incidence(self) -> list[list[tuple[int, ...]]]:
        inc: list[list[tuple[int, ...]]] = [[] for _ in range(self.n)]
        for e in self.edge_list:
            for v in e:
                inc[v].append(e)
        return inc

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(es) for es in self.incidence)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edges

    def is_complete(self) -> bool:
        return self.num_edges == comb(self.n, self.r)

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """A hypergraph on the same vertex set with a different edge set."""
        return Hypergraph(self.r, self.n, frozenset(tuple(e) for e in edges))

    def delete_vertex(self, v: int) -> "Hypergraph":
        """Remove vertex ``v`` and relabel the remaining vertices densely."""
        _check_vertex(self, v)
        relabel = lambda u: u - (u > v)  # noqa: E731
        edges = [tuple(relabel(u) for u in e) for e in self.edges if v not in e]
        return Hypergraph(self.r, self.n - 1, frozenset(edges))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, edges={self.edge_list})"

    # ------------------------------------------------------------ constructors
    @classmethod
    def complete(cls, n: int, r: int = 2) -> "Hypergraph":
        return cls(r, n, frozenset(combinations(range(n), r)))

    @classmethod
    def cycle(cls, n: int) -> "Hypergraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(2, n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Hypergraph":
        return cls(2, n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Hypergraph":
        return cls(2, a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def empty(cls, n: int, r: int = 2) -> "Hypergraph":
        return cls(r, n, frozenset())

    # --------------------------------------------------------------- text I/O
    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        """Parse the ``"r n"`` header followed by one edge per line."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty hypergraph description")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError(f"header must be 'r n', got {lines[0]!r}")
        r, n = int(header[0]), int(header[1])
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
        return cls(r, n, frozenset(edges))

    def to_text(self) -> str:
        rows = [f"{self.r} {self.n}"] + [" ".join(map(str, e)) for e in self.edge_list]
        return "\n".join(rows) + "\n"


_NAMED = [
    (re.compile(r"^K(\d+)\^\((\d+)\)$"), lambda m: Hypergraph.complete(int(m[1]), int(m[2]))),
    (re.compile(r"^K(\d+),(\d+)$"), lambda m: Hypergraph.complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^K(\d+)$"), lambda m: Hypergraph.complete(int(m[1]))),
    (re.compile(r"^C(\d+)$"), lambda m: Hypergraph.cycle(int(m[1]))),
    (re.compile(r"^P(\d+)$"), lambda m: Hypergraph.path(int(m[1]))),
]


def named(name: str) -> Hypergraph:
    """Resolve a built-in name such as ``K4``, ``K4^(3)``, ``C5`` or ``K2,3``."""
    key = name.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    for pattern, build in _NAMED:
        m = pattern.match(key)
        if m:
            return build(m)
    raise ValueError(f"unknown hypergraph name {name!r}")


# ---------------------------------------------------------------------------
# vertex parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexPartition:
    """Assignment of every vertex to one of ``t`` classes."""

    parts: tuple[int, ...]
    t: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.t)]
        for v, c in enumerate(self.parts):
            out[c].append(v)
        return out


def _check_vertex(g: Hypergraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")


def degree(g: Hypergraph, v: int) -> int:
    """Number of edges of ``g`` containing ``v``."""
    _check_vertex(g, v)
    return g.degrees[v]


def min_degree(g: Hypergraph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of an empty vertex set is undefined")
    return min(g.degrees)


def max_degree(g: Hypergraph) -> int:
    if g.n == 0:
        raise ValueError("maximum degree of an empty vertex set is undefined")
    return max(g.degrees)


def _closing_edges(g: Hypergraph) -> list[list[tuple[int, ...]]]:
    # edges indexed by their largest vertex: checked once that vertex is placed
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        closing[e[-1]].append(e)
    return closing


def _partition_search(g: Hypergraph, t: int, edge_ok) -> Optional[tuple[int, ...]]:
    """Backtrack over class assignments with first-occurrence symmetry breaking.

    Vertices are placed in increasing order and a vertex may only open the
    class right after the highest one used so far.
    """
    closing = _closing_edges(g)
    parts = [-1] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, t)):
            parts[v] = c
            if all(edge_ok([parts[u] for u in e]) for e in closing[v]):
                if place(v + 1, max(used, c + 1)):
                    return True
        parts[v] = -1
        return False

    return tuple(parts) if place(0, 0) else None


def weak_chromatic_number(g: Hypergraph, return_partition: bool = False):
    """Fewest classes such that no edge lies inside a single class.

    For graphs this is the ordinary chromatic number. An edgeless hypergraph
    on at least one vertex has weak chromatic number 1 (0 if ``n == 0``).
    """
    if g.n == 0:
        return (0, VertexPartition((), 0)) if return_partition else 0
    t = 1
    while True:
        parts = _partition_search(g, t, lambda cls: len(set(cls)) > 1)
        if parts is not None:
            return (t, VertexPartition(parts, t)) if return_partition else t
        t += 1


def is_colorable(g: Hypergraph, t: int) -> bool:
    """Whether the weak chromatic number of ``g`` is at most ``t``."""
    if g.n == 0:
        return True
    if t <= 0:
        return False
    return _partition_search(g, t, lambda cls: len(set(cls)) > 1) is not None


def is_r_partite(g: Hypergraph) -> tuple[bool, Optional[VertexPartition]]:
    """Test for a partition into ``r`` classes meeting every edge once each.

    Returns ``(True, witness)`` or ``(False, None)``. Classes may be empty.
    """
    parts = _partition_search(g, g.r, lambda cls: len(set(cls)) == len(cls))
    if parts is None:
        return False, None
    return True, VertexPartition(parts, g.r)


def duplicate_vertex(g: Hypergraph, remove: int, copy_of: int) -> Hypergraph:
    """Delete ``remove`` and put a twin of ``copy_of`` in its slot.

    The vertex count is unchanged: the new twin reuses the id of the deleted
    vertex. Edges through ``copy_of`` that avoided ``remove`` are kept and
    each gets a copy with ``copy_of`` replaced by the twin, so the twin is
    never adjacent to ``copy_of``.
    """
    _check_vertex(g, remove)
    _check_vertex(g, copy_of)
    if remove == copy_of:
        raise ValueError("cannot replace a vertex by a copy of itself")
    kept = [e for e in g.edges if remove not in e]
    twins = [tuple(remove if v == copy_of else v for v in e) for e in kept if copy_of in e]
    return g.with_edges(kept + twins)
