# %% [markdown]
# Exhaustive search over list colorings, with certificates and a DIMACS export.

# %%
from listramsey import ListAssignment, named, is_list_ramsey, is_family_ramsey
from listramsey.cnf import encode
from listramsey.decide import scan_not_ramsey, scan_to_csv

k3 = named("K3")

# %%
for n in (5, 6):
    host = named(f"K{n}")
    out = is_list_ramsey(host, ListAssignment.constant(host, 2), k3)
    print(f"K{n}", out.verdict, out.nodes_explored, "nodes")

# %%
host = named("K5")
cert = is_list_ramsey(host, ListAssignment.constant(host, 2), k3).certificate
print({c: cls for c, cls in cert.classes().items()})

# %%
# colorings where every class is bipartite exist up to 2^2 = 4 vertices
for n in (4, 5):
    host = named(f"K{n}")
    print(f"K{n}", is_family_ramsey(host, ListAssignment.constant(host, 2), 2).verdict)

# %%
# random lists drawn from 4 colors; verdicts here are evidence only
print(scan_to_csv(scan_not_ramsey(6, 2, k3, "seeded-random", trials=3, universe=4, seed=1)))

# %%
enc = encode(host, ListAssignment.constant(host, 2), k3)
print(enc.num_vars, "variables", len(enc.clauses), "clauses")
print(enc.satisfied_by(cert))
