import random
from itertools import combinations
from math import comb

import pytest

from evangelize import Graph, generate_instance


def literal_diffusion(adj, t_inf, t_evg, seeds, always=()):
    """Round-by-round rescan of the dynamics, written straight from the rule.

    ``always`` nodes are evangelists from round 0 but are not reported.
    Returns ``(evg, inf, rounds, trace)``.
    """
    n = len(adj)
    evg = set(seeds) | set(always)
    inf = set(seeds)
    trace = []
    rounds = 0
    while True:
        rounds += 1
        cnt = [sum(1 for w in adj[u] if w in evg) for u in range(n)]
        new_e = {u for u in range(n) if u not in evg and cnt[u] >= t_evg[u]}
        new_i = {u for u in range(n) if u not in inf and cnt[u] >= t_inf[u]}
        inf |= new_i
        evg |= new_e
        trace.append((new_e, new_i))
        if not new_e:
            break
    return evg - set(always), inf, rounds, trace


def path3():
    # a=0, b=1, c=2 with (t_I, t_E) = (1,1), (1,2), (1,1)
    return Graph.from_edges(3, [(0, 1), (1, 2)], [1, 1, 1], [1, 2, 1])


def k4_all(ti, te):
    return Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)],
                            [ti] * 4, [te] * 4)


def star3(center=(1, 2), leaf=(1, 1)):
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)],
                            [center[0]] + [leaf[0]] * 3, [center[1]] + [leaf[1]] * 3)


@pytest.fixture
def path():
    return path3()


def random_instances(count, seed, n_max=12, kinds=("tree", "clique", "bounded_nd", "random_gnp")):
    """Deterministic mixed bag of small instances."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        n = rng.randint(1, n_max)
        params = {"n": n}
        if kind == "bounded_nd":
            params.update(t=rng.randint(1, min(4, n)), p=rng.random())
        elif kind == "random_gnp":
            params["p"] = rng.random()
        out.append(generate_instance(kind, params, rng.randrange(2**31)))
    return out


def composition_oracle(total, caps):
    """Capped compositions counted by inclusion-exclusion over the caps."""
    t = len(caps)
    out = 0
    for r in range(t + 1):
        for sub in combinations(caps, r):
            rest = total - sum(c + 1 for c in sub)
            if rest >= 0:
                out += (-1) ** r * comb(rest + t - 1, t - 1)
    return out
