# %% [markdown]
# # From influence maximization to evangelizing sets
#
# Each node of an influence maximization instance becomes a star with `n`
# leaves.  Leaves are influenced by their center alone, so `k` activated
# nodes turn into `k(n + 1)` influenced nodes and the two optima line up.

# %%
from evangelize import IMInstance, im_to_mes_gadget, verify_gadget_correspondence

im = IMInstance(3, ((0, 1), (1, 2)), (1, 2, 1))
g = im_to_mes_gadget(im)
print(g.n, "nodes,", g.m, "edges")
print("centers", [i * (im.n + 1) for i in range(im.n)])

# %%
for beta in range(im.n + 1):
    for k in range(im.n + 1):
        rep = verify_gadget_correspondence(im, k, beta)
        print(beta, k, rep.im_optimum, rep.gadget_optimum, rep.holds)
