# %% [markdown]
# # Evangelists and influenced nodes
#
# Every node has two thresholds.  Once `t_I(v)` of its neighbors are
# evangelists it is influenced; once `t_E(v)` are, it becomes an evangelist
# itself and starts to count for its neighbors.  Seeds start as evangelists.

# %%
from evangelize import Graph, run_diffusion

# a - b - c; b needs two evangelist neighbors to spread the message
g = Graph.from_edges(3, [(0, 1), (1, 2)], t_inf=[1, 1, 1], t_evg=[1, 2, 1])

# %%
res = run_diffusion(g, [0], want_trace=True)
print("evangelists", sorted(res.evangelists))
print("influenced ", sorted(res.influenced))
print("rounds     ", res.rounds)

# %% [markdown]
# Seeding `a` influences `b` but `b` stays passive, so `c` never hears.
# Seeding the middle node is better: both ends evangelize in round 1.

# %%
res = run_diffusion(g, [1], want_trace=True)
for r, (new_e, new_i) in enumerate(res.trace, 1):
    print(f"round {r}: new evangelists {sorted(new_e)}, newly influenced {sorted(new_i)}")
