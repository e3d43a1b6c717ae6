# %% [markdown]
# # Graphs with few node types
#
# Two nodes have the same type when they see the same neighbors apart from
# each other.  With `t` types the solver only has to decide how many seeds go
# into each class; inside a class the choice is greedy.

# %%
from evangelize import (brute_force_mes, compute_type_partition, generate_instance,
                        min_vertex_cover, solve_mes_nd, solve_mes_vc)

g = generate_instance("bounded_nd", {"n": 12, "t": 3, "p": 0.5}, rng_seed=7)
part = compute_type_partition(g)
for cls, kind in zip(part.classes, part.kinds):
    print(kind, cls)
print(part.adjacency.astype(int))

# %%
for beta in range(5):
    res = solve_mes_nd(g, beta)
    print(beta, res.objective, brute_force_mes(g, beta).objective, res.explored, "allocations")

# %% [markdown]
# A small vertex cover also bounds the number of types, which gives the
# decision version "can `beta` seeds influence `alpha` nodes?".

# %%
cover = min_vertex_cover(g)
print("cover", cover)
for alpha in (4, 8, 12):
    print(alpha, solve_mes_vc(g, cover, alpha, 2)[0])
