# %% [markdown]
# Resampling construction: each color gets a random map into K2, an edge keeps
# the colors whose map splits it, and edges left with nothing are resampled.

# %%
import math

from listramsey import ListAssignment, named, verify_coloring
from listramsey.construct import lll_feasibility, lll_construct, max_feasible_n

K2 = named("K2")

# %%
for n in (23, 24, 25):
    rep = lll_feasibility(n, 2, 6, K2)
    print(n, rep.p, rep.d, f"{rep.condition_value:.4f}", rep.feasible)

# %%
# the largest feasible n tracks 2^k/e + 1
for k in range(2, 13):
    print(k, max_feasible_n(2, k, K2), round(2**k / math.e + 1, 2))

# %%
host = named("K24")
lists = ListAssignment.random(host, 6, 12, seed=7)
res = lll_construct(lists, K2, seed=7)
print("resamples", res.resamples)
print("monochromatic triangle:", verify_coloring(host, res.coloring, named("K3")))

# %%
# each color class maps into K2 under its own map, so it is bipartite
phi = res.system.maps
print(all(tuple(sorted(phi[c].map_edge(e))) == (0, 1) for e, c in res.coloring.colors.items()))
