"""Seeded random instance families used by the tests, demos and benchmark."""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, PreconditionError

KINDS = ("tree", "clique", "bounded_nd", "dense_dirac", "random_gnp")


def _random_thresholds(rng, degrees, ti_cap=None, te_cap=None):
    t_inf, t_evg = [], []
    for d in degrees:
        hi_e = d + 1 if te_cap is None else min(d + 1, te_cap)
        hi_i = hi_e if ti_cap is None else min(hi_e, ti_cap)
        a = int(rng.integers(0, hi_i + 1))
        b = int(rng.integers(a, hi_e + 1))
        t_inf.append(a)
        t_evg.append(b)
    return t_inf, t_evg


def _finish(rng, n, edges, thresholds="random", ti_cap=None, te_cap=None):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if thresholds == "random":
        t_inf, t_evg = _random_thresholds(rng, deg, ti_cap, te_cap)
    elif thresholds == "max":
        t_evg = [min(d + 1, te_cap if te_cap is not None else d + 1) for d in deg]
        t_inf = [min(te, ti_cap if ti_cap is not None else te) for te in t_evg]
    else:
        raise ValueError(f"unknown threshold mode {thresholds!r}")
    return Graph.from_edges(n, edges, t_inf, t_evg)


def random_tree_edges(rng, n):
    """Uniform random labelled tree on ``n`` nodes via a Pruefer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def bounded_nd_edges(rng, n, t, p=0.5):
    """Edges of a random graph whose type partition has at most ``t`` classes.

    Returns ``(edges, classes)``; the planted classes are shuffled over the ids.
    """
    if not 1 <= t <= max(n, 1):
        raise PreconditionError(f"need 1 <= t <= n, got t={t}, n={n}")
    if n == 0:
        return [], []
    cuts = sorted(rng.choice(np.arange(1, n), size=t - 1, replace=False).tolist()) if t > 1 else []
    bounds = [0] + cuts + [n]
    perm = rng.permutation(n).tolist()
    classes = [sorted(perm[bounds[i]:bounds[i + 1]]) for i in range(t)]
    is_clique = rng.random(t) < 0.5
    joined = rng.random((t, t)) < p
    edges = set()
    for i in range(t):
        for a in range(len(classes[i])):
            for j in range(i, t):
                if i == j:
                    if not is_clique[i]:
                        continue
                    others = classes[i][a + 1:]
                elif joined[i, j]:
                    others = classes[j]
                else:
                    continue
                u = classes[i][a]
                for w in others:
                    edges.add((min(u, w), max(u, w)))
    return sorted(edges), classes


def dense_min_degree(n, te_bar, ti_bar):
    """Smallest integer degree satisfying ``d >= (n + te_bar + ti_bar)/2 - 2``."""
    return math.ceil((n + te_bar + ti_bar) / 2) - 2


def dense_edges(rng, n, min_deg, drop=1.0):
    """Random graph with minimum degree ``>= min_deg``: delete edges of K_n at random."""
    if min_deg > n - 1:
        raise PreconditionError(f"minimum degree {min_deg} unrealizable on {n} nodes")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    order = rng.permutation(len(edges))
    deg = [n - 1] * n
    keep = [True] * len(edges)
    for idx in order:
        if rng.random() >= drop:
            continue
        u, v = edges[idx]
        if deg[u] > min_deg and deg[v] > min_deg:
            keep[idx] = False
            deg[u] -= 1
            deg[v] -= 1
    return [e for e, k in zip(edges, keep) if k]


def generate_instance(kind: str, params: dict, rng_seed: int = 0) -> Graph:
    """Generate a graph of family ``kind``.

    ``params`` per kind:

    * ``tree``: ``n``
    * ``clique``: ``n``
    * ``bounded_nd``: ``n``, ``t``, optional ``p`` (class join probability)
    * ``dense_dirac``: ``n``, ``te_bar``, ``ti_bar``, optional ``drop`` and
      ``thresholds`` (``"random"`` or ``"max"``)
    * ``random_gnp``: ``n``, ``p``

    Output is a pure function of ``(kind, params, rng_seed)``.
    """
    rng = np.random.default_rng(rng_seed)
    n = int(params.get("n", 0))
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if kind == "tree":
        return _finish(rng, n, random_tree_edges(rng, n))
    if kind == "clique":
        return _finish(rng, n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "bounded_nd":
        edges, _ = bounded_nd_edges(rng, n, int(params["t"]), float(params.get("p", 0.5)))
        return _finish(rng, n, edges)
    if kind == "dense_dirac":
        te_bar, ti_bar = int(params["te_bar"]), int(params["ti_bar"])
        if te_bar + ti_bar > n + 2:
            raise PreconditionError(f"te_bar + ti_bar = {te_bar + ti_bar} exceeds n + 2 = {n + 2}")
        if ti_bar < 0 or te_bar < 0:
            raise PreconditionError("threshold bounds must be non-negative")
        delta = max(dense_min_degree(n, te_bar, ti_bar), 0)
        edges = dense_edges(rng, n, delta, float(params.get("drop", 1.0)))
        return _finish(rng, n, edges, params.get("thresholds", "random"),
                       ti_cap=min(ti_bar, te_bar), te_cap=te_bar)
    if kind == "random_gnp":
        p = float(params["p"])
        if not 0.0 <= p <= 1.0:
            raise PreconditionError(f"edge probability {p} outside [0, 1]")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return _finish(rng, n, edges)
    raise PreconditionError(f"unknown instance kind {kind!r}; expected one of {KINDS}")
