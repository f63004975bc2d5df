"""Edge colorings and list assignments.

Both are keyed by canonical (sorted) edge tuples of a host hypergraph.
JSON keys for edges are written as comma-separated vertex ids, e.g. ``"0,3"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from .hypergraph import Hypergraph


def edge_key(e: tuple[int, ...]) -> str:
    return ",".join(map(str, e))


def parse_edge_key(key: str) -> tuple[int, ...]:
    return tuple(sorted(int(x) for x in key.strip().strip("<>()[]").split(",")))


@dataclass(frozen=True)
class ListAssignment:
    """A list ``L(e)`` of ``k`` distinct colors for every edge of ``host``."""

    host: Hypergraph
    k: int
    lists: Mapping[tuple[int, ...], tuple[int, ...]]

    def __post_init__(self):
        canon = {}
        for e, cs in self.lists.items():
            e = tuple(sorted(e))
            cs = tuple(sorted(set(int(c) for c in cs)))
            if len(cs) != self.k:
                raise ValueError(f"list of edge {e} has {len(cs)} distinct colors, expected {self.k}")
            canon[e] = cs
        missing = self.host.edges - canon.keys()
        if missing:
            raise ValueError(f"{len(missing)} host edges have no list, e.g. {min(missing)}")
        extra = canon.keys() - self.host.edges
        if extra:
            raise ValueError(f"lists given for non-edges, e.g. {min(extra)}")
        object.__setattr__(self, "lists", canon)

    def __getitem__(self, e: tuple[int, ...]) -> tuple[int, ...]:
        return self.lists[e]

    @property
    def colors(self) -> list[int]:
        """Every color appearing in some list, ascending."""
        return sorted({c for cs in self.lists.values() for c in cs})

    def restrict(self, host: Hypergraph) -> "ListAssignment":
        """Lists of the edges of a sub-hypergraph ``host``."""
        return ListAssignment(host, self.k, {e: self.lists[e] for e in host.edges})

    # ------------------------------------------------------------- generators
    @classmethod
    def constant(cls, host: Hypergraph, k: int) -> "ListAssignment":
        """Every edge gets the list ``{0, ..., k-1}``."""
        base = tuple(range(k))
        return cls(host, k, {e: base for e in host.edges})

    @classmethod
    def random(cls, host: Hypergraph, k: int, universe: int, seed=None) -> "ListAssignment":
        """Independent uniform ``k``-subsets of ``{0, ..., universe-1}`` per edge.

        Edges are visited in colex order so a seed fixes the assignment.
        """
        if universe < k:
            raise ValueError(f"universe of {universe} colors cannot hold lists of size {k}")
        rng = np.random.default_rng(seed)
        lists = {}
        for e in host.edge_list:
            lists[e] = tuple(sorted(int(c) for c in rng.choice(universe, size=k, replace=False)))
        return cls(host, k, lists)

    # ------------------------------------------------------------------- JSON
    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "r": self.host.r,
            "k": self.k,
            "lists": {edge_key(e): list(self.lists[e]) for e in self.host.edge_list},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict, host: Optional[Hypergraph] = None) -> "ListAssignment":
        """Load lists; the host defaults to the complete ``r``-graph on ``n`` vertices."""
        lists = {parse_edge_key(key): tuple(cs) for key, cs in data["lists"].items()}
        if host is None:
            host = Hypergraph.complete(int(data["n"]), int(data["r"]))
        return cls(host, int(data["k"]), lists)

    @classmethod
    def from_json(cls, text: str, host: Optional[Hypergraph] = None) -> "ListAssignment":
        return cls.from_dict(json.loads(text), host)


@dataclass
class Coloring:
    """One color per edge, optionally remembering the list it was drawn from."""

    colors: dict[tuple[int, ...], int]
    lists: Optional[Mapping[tuple[int, ...], tuple[int, ...]]] = field(default=None, repr=False)

    def __getitem__(self, e: tuple[int, ...]) -> int:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, list[tuple[int, ...]]] = {}
        for e, c in self.colors.items():
            out.setdefault(c, []).append(e)
        return {c: sorted(out[c], key=lambda e: e[::-1]) for c in sorted(out)}

    def class_graph(self, host: Hypergraph, color: int) -> Hypergraph:
        """The spanning sub-hypergraph of ``host`` formed by one color."""
        return host.with_edges(e for e, c in self.colors.items() if c == color)

    def class_sizes(self) -> dict[int, int]:
        return {c: len(es) for c, es in self.classes().items()}

    def respects(self, lists: Mapping[tuple[int, ...], Iterable[int]]) -> bool:
        return all(c in lists[e] for e, c in self.colors.items())

    def restrict(self, host: Hypergraph) -> "Coloring":
        sub_lists = None if self.lists is None else {e: self.lists[e] for e in host.edges}
        return Coloring({e: self.colors[e] for e in host.edges}, sub_lists)

    def to_dict(self) -> dict:
        order = sorted(self.colors, key=lambda e: e[::-1])
        return {"colors": {edge_key(e): self.colors[e] for e in order}}

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        return cls({parse_edge_key(k): int(c) for k, c in data["colors"].items()})
