# %% [markdown]
# # Perfect seeds on dense graphs
#
# When every degree is large compared with the thresholds, a greedy set of at
# most `2 * te_bar - 2` seeds reaches everybody.  With both bounds equal to 2
# that is two seeds on any Dirac graph.

# %%
from evangelize import (brute_force_pes, build_pes_dense, check_dense_preconditions,
                        generate_instance, run_diffusion)

g = generate_instance("dense_dirac", {"n": 14, "te_bar": 2, "ti_bar": 2}, rng_seed=2)
print(check_dense_preconditions(g, 2, 2))
s = build_pes_dense(g, 2, 2)
print("greedy", list(s), "reaches", len(run_diffusion(g, s).influenced), "of", g.n)
print("optimum size", brute_force_pes(g).objective)

# %%
for te, ti in [(3, 2), (4, 3), (5, 5)]:
    g = generate_instance("dense_dirac", {"n": 40, "te_bar": te, "ti_bar": ti}, rng_seed=te)
    s = build_pes_dense(g, te, ti)
    print(te, ti, len(s), "<=", max(ti, 2 * te - 2))

# %% [markdown]
# With `te_bar = ti_bar = 1` the degree condition admits two disjoint edges,
# and a single seed cannot cover both; the guarantee does not hold there.

# %%
from evangelize import Graph

two_edges = Graph.from_edges(4, [(0, 1), (2, 3)], [1] * 4, [1] * 4)
print(check_dense_preconditions(two_edges, 1, 1).ok, brute_force_pes(two_edges).objective)
