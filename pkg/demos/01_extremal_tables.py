# %% [markdown]
# Exact Turán numbers, density tables and pattern parameters for tiny patterns.

# %%
from listramsey import named, turan_number, density_estimate, m_parameter
from listramsey import weak_chromatic_number, is_r_partite, symmetrize
from listramsey.hypergraph import Hypergraph

k3 = named("K3")

# %%
# triangle-free maxima follow floor(n^2/4)
for n in range(3, 9):
    res = turan_number(n, k3)
    print(n, res.value, n * n // 4, f"{res.nodes_explored} nodes")

# %%
# forbidding homomorphic images is stricter than forbidding copies
c5 = named("C5")
print("copy-free", turan_number(5, c5, "copy-free").value)
print("hom-free ", turan_number(5, c5, "hom-free").value)

# %%
# ratios ex(n,H)/C(n,r) never increase, so the last one bounds the density from above
for name in ("K3", "C4", "K4^(3)"):
    est = density_estimate(named(name), 7 if name != "K4^(3)" else 6)
    print(name, [f"{float(q):.3f}" for _, q in est.ratios])

# %%
for name in ("K3", "K4", "C5", "K3,3", "K4^(3)"):
    h = named(name)
    print(name, "chi =", weak_chromatic_number(h), " r-partite:", is_r_partite(h)[0],
          " m =", m_parameter(h))

# %%
# twinning a high-degree vertex over a low-degree one keeps triangle-freeness
star = Hypergraph.complete_bipartite(1, 3)
trace = symmetrize(star, k3, target_min_degree=2)
for step in trace.steps:
    print(step)
print(trace.status, trace.final.edge_list)
