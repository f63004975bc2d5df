# %% [markdown]
# Triangle-free list colorings from randomly relabeled bipartite graphs.
# Every color gets its own random balanced bipartition of the vertices; an edge
# is colored by the first color in its list whose bipartition separates it.

# %%
from collections import Counter

from listramsey import ListAssignment, named, union_bound_construct, verify_coloring
from listramsey.construct import balanced_bipartite, prop14_threshold, ConstructionFailed

# %%
n, k = 8, 6
lists = ListAssignment.constant(named(f"K{n}"), k)
g = balanced_bipartite(n)
res = union_bound_construct(lists, g, seed=0)
print("attempts", res.attempts, "class sizes", res.coloring.class_sizes())
print("monochromatic triangle:", verify_coloring(lists.host, res.coloring, named("K3")))

# %%
# 28 edges against 2^6 = 64: each attempt fails with probability at most 28/64
attempts = Counter()
for seed in range(200):
    try:
        attempts[union_bound_construct(lists, g, seed=seed, max_retries=100).attempts] += 1
    except ConstructionFailed:
        attempts["failed"] += 1
print(sorted(attempts.items(), key=str))

# %%
# the same idea with an extremal graph: when n < (1 - ex/C(n,2))^(-k/2) it always works
for k in range(1, 8):
    print(k, prop14_threshold(8, named("K3"), k))
