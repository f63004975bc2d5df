"""Brute-force reference computations, independent of the package's search code.

Graphs on ``n`` vertices are encoded as bitmasks over the ``C(n, r)``
candidate edges in ``itertools.combinations`` order, so whole families of
labeled graphs can be checked at once with numpy.
"""

from itertools import combinations, permutations, product

import numpy as np


def slots(n, r=2):
    cand = list(combinations(range(n), r))
    return cand, {e: i for i, e in enumerate(cand)}


def all_graph_masks(n, r=2):
    m = len(list(combinations(range(n), r)))
    return np.arange(1 << m, dtype=np.int64)


def mask_of(edges, index):
    out = 0
    for e in edges:
        out |= 1 << index[tuple(sorted(e))]
    return out


def copy_masks(n, pattern_edges, pattern_n, r=2):
    """Edge masks of every labeled copy of a pattern inside ``K_n^(r)``."""
    _, index = slots(n, r)
    masks = set()
    for img in permutations(range(n), pattern_n):
        masks.add(mask_of([tuple(img[v] for v in e) for e in pattern_edges], index))
    return np.array(sorted(masks), dtype=np.int64)


def hom_masks(n, pattern_edges, pattern_n, r=2):
    """Edge masks of every homomorphic image (all ``n^v`` maps, edges kept as r-sets)."""
    _, index = slots(n, r)
    masks = set()
    for img in product(range(n), repeat=pattern_n):
        imgs = [tuple(sorted(img[v] for v in e)) for e in pattern_edges]
        if all(len(set(e)) == r for e in imgs):
            masks.add(mask_of(imgs, index))
    return np.array(sorted(masks), dtype=np.int64)


def free_mask(graphs, forbidden):
    """Boolean array: which graphs contain none of the forbidden edge masks."""
    free = np.ones(len(graphs), dtype=bool)
    for m in forbidden:
        free &= (graphs & m) != m
    return free


def popcount(a):
    a = a.copy()
    count = np.zeros(len(a), dtype=np.int64)
    while a.any():
        count += a & 1
        a >>= 1
    return count


def brute_ex(n, pattern_edges, pattern_n, r=2, hom=False):
    graphs = all_graph_masks(n, r)
    forb = (hom_masks if hom else copy_masks)(n, pattern_edges, pattern_n, r)
    free = free_mask(graphs, forb)
    return int(popcount(graphs[free]).max())


def bipartite_table(n):
    """For every labeled graph on ``n`` vertices, whether it is bipartite."""
    cand, _ = slots(n)
    graphs = all_graph_masks(n)
    cross = []
    for side in range(1 << n):
        m = 0
        for i, (a, b) in enumerate(cand):
            if (side >> a & 1) != (side >> b & 1):
                m |= 1 << i
        cross.append(m)
    ok = np.zeros(len(graphs), dtype=bool)
    for m in cross:
        ok |= (graphs & ~np.int64(m)) == 0
    return ok


def graph_edges(mask, n, r=2):
    cand, _ = slots(n, r)
    return [cand[i] for i in range(len(cand)) if mask >> i & 1]


def chromatic_brute(n, edges):
    """Smallest t admitting a vertex t-coloring with no monochromatic edge."""
    if n == 0:
        return 0
    for t in range(1, n + 1):
        for col in product(range(t), repeat=n):
            if all(len({col[v] for v in e}) > 1 for e in edges):
                return t
    return n


def has_hom_brute(pattern_n, pattern_edges, target_n, target_edges):
    tset = {tuple(sorted(e)) for e in target_edges}
    for img in product(range(target_n), repeat=pattern_n):
        if all(tuple(sorted(img[v] for v in e)) in tset and len({img[v] for v in e}) == len(e)
               for e in pattern_edges):
            return True
    return False


def m_by_edge_subsets(edges, r):
    """Maximum of (e' - 1)/(v' - r) over every edge subset with at least two edges."""
    from fractions import Fraction

    best = None
    for size in range(2, len(edges) + 1):
        for sub in combinations(edges, size):
            verts = {v for e in sub for v in e}
            val = Fraction(size - 1, len(verts) - r)
            if best is None or val > best:
                best = val
    return best
