"""DIMACS CNF export of list-Ramsey decision instances.

One Boolean variable per (edge, color in the edge's list). Every edge takes
exactly one of its colors, and for every copy of the pattern in the host
and every color shared by all lists along that copy, a blocking clause
forbids the copy from being monochromatic in that color. The formula is
satisfiable exactly when the host is *not* list Ramsey. Nothing here calls
a solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring, ListAssignment, edge_key
from .hypergraph import Hypergraph
from .morphism import iter_copies


@dataclass
class CnfEncoding:
    variables: dict[tuple[tuple[int, ...], int], int]
    clauses: list[list[int]] = field(default_factory=list)
    copies: int = 0

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def to_dimacs(self) -> str:
        lines = [f"c list-Ramsey instance: {self.copies} pattern copies"]
        for (e, c), v in self.variables.items():
            lines.append(f"c var {v} edge {edge_key(e)} color {c}")
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, cl)) + " 0" for cl in self.clauses)
        return "\n".join(lines) + "\n"

    def assignment(self, coloring: Coloring) -> set[int]:
        """Positive literals of the model corresponding to ``coloring``."""
        return {v for (e, c), v in self.variables.items() if coloring[e] == c}

    def satisfied_by(self, coloring: Coloring) -> bool:
        true = self.assignment(coloring)
        return all(any((lit > 0) == (abs(lit) in true) for lit in cl) for cl in self.clauses)

    def decode(self, model) -> Coloring:
        """Coloring from a solver model (iterable of signed literals)."""
        true = {lit for lit in model if lit > 0}
        return Coloring({e: c for (e, c), v in self.variables.items() if v in true})


def encode(host: Hypergraph, lists: ListAssignment, pattern: Hypergraph) -> CnfEncoding:
    variables = {}
    for e in host.edge_list:
        for c in lists[e]:
            variables[(e, c)] = len(variables) + 1
    enc = CnfEncoding(variables)
    for e in host.edge_list:
        lits = [variables[(e, c)] for c in lists[e]]
        enc.clauses.append(lits)
        enc.clauses.extend([-a, -b] for a, b in combinations(lits, 2))
    if pattern.num_edges == 0:
        return enc
    for emb in iter_copies(host, pattern):
        image = sorted({emb.map_edge(f) for f in pattern.edges}, key=lambda e: e[::-1])
        enc.copies += 1
        shared = set(lists[image[0]]).intersection(*(lists[e] for e in image[1:]))
        for c in sorted(shared):
            enc.clauses.append([-variables[(e, c)] for e in image])
    return enc


def to_dimacs(host: Hypergraph, lists: ListAssignment, pattern: Hypergraph) -> str:
    return encode(host, lists, pattern).to_dimacs()
