"""FPT exact MES parameterized by neighborhood diversity, and by vertex cover.

Nodes ``u, v`` have the same type when ``N(u) - {v} == N(v) - {u}``.  The
type classes are cliques or independent sets, and two classes are either
completely joined or not joined at all, so every node of a class sees the
same number of final evangelists.  For a fixed number of seeds per class a
greedy choice is optimal; the solver enumerates all such allocations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clique import swap_uninfluenceable, top_by_evangelization
from .diffusion import run_diffusion
from .graph import Graph, PreconditionError, SeedSet, WorkGuardExceeded
from .oracle import SolveResult

MAX_COMPOSITIONS = 1_000_000


@dataclass(frozen=True)
class TypePartition:
    classes: tuple            # tuples of node ids, ordered by smallest member
    kinds: tuple              # "clique" or "independent" per class
    adjacency: np.ndarray     # (t, t) bool, True where two classes are fully joined
    class_of: tuple           # node id -> class index

    @property
    def t(self) -> int:
        return len(self.classes)

    def sizes(self) -> list:
        return [len(c) for c in self.classes]


def compute_type_partition(g: Graph) -> TypePartition:
    """Minimum type partition.

    False twins (equal open neighborhoods) form independent classes and true
    twins (equal closed neighborhoods) form clique classes; no node can have
    twins of both kinds.  Singletons are reported as cliques.
    """
    open_groups, closed_groups = {}, {}
    for v in range(g.n):
        open_groups.setdefault(g.adj[v], []).append(v)
        closed_groups.setdefault(tuple(sorted(g.adj[v] + (v,))), []).append(v)
    class_of = [-1] * g.n
    classes, kinds = [], []
    for v in range(g.n):
        if class_of[v] >= 0:
            continue
        twins = open_groups[g.adj[v]]
        kind = "independent"
        if len(twins) < 2:
            twins = closed_groups[tuple(sorted(g.adj[v] + (v,)))]
            kind = "clique"
        for u in twins:
            class_of[u] = len(classes)
        classes.append(tuple(twins))
        kinds.append(kind)
    t = len(classes)
    adjacency = np.zeros((t, t), dtype=bool)
    for i in range(t):
        for j in range(t):
            if i != j:
                adjacency[i, j] = g.has_edge(classes[i][0], classes[j][0])
    return TypePartition(tuple(classes), tuple(kinds), adjacency, tuple(class_of))


def neighborhood_diversity(g: Graph) -> int:
    return compute_type_partition(g).t


def n_i_of(g: Graph, partition: TypePartition, i: int, final_evangelists) -> int:
    """Evangelists adjacent to every node of class ``i`` (class members included
    when the class is a clique)."""
    evg = set(final_evangelists)
    total = 0
    for j in range(partition.t):
        if partition.adjacency[i, j] or (j == i and partition.kinds[i] == "clique"):
            total += sum(1 for v in partition.classes[j] if v in evg)
    return total


def me_nd_seed(g: Graph, partition: TypePartition, s, debug: bool = False) -> SeedSet:
    """Best seed with exactly ``s[i]`` nodes from class ``i``.

    Take the largest-``t_E`` nodes of each class, simulate once to fix every
    class's evangelist count, then swap seeds that would be influenced anyway
    for class mates that cannot be.  ``debug`` re-simulates after each swap.
    """
    if len(s) != partition.t:
        raise ValueError(f"composition has {len(s)} entries for {partition.t} classes")
    picks = []
    for cls, k in zip(partition.classes, s):
        if not 0 <= k <= len(cls):
            raise ValueError(f"cannot pick {k} nodes from a class of size {len(cls)}")
        picks.append(top_by_evangelization(cls, g.t_evg, k))
    first = sorted(v for p in picks for v in p)
    evg = run_diffusion(g, first).evangelists
    bars = [n_i_of(g, partition, i, evg) for i in range(partition.t)]
    seeds = set(first)
    prev_inf = len(run_diffusion(g, first).influenced) if debug else None
    for i, (cls, p) in enumerate(zip(partition.classes, picks)):
        chosen = set(p)
        _, swaps = swap_uninfluenceable(p, [v for v in cls if v not in chosen], g.t_inf, bars[i])
        for u, v in swaps:
            seeds.discard(u)
            seeds.add(v)
            if debug:
                now = len(run_diffusion(g, seeds).influenced)
                assert now >= prev_inf, f"swap {u}->{v} lowered |Inf| from {prev_inf} to {now}"
                prev_inf = now
    return SeedSet(sorted(seeds))


def count_compositions(total: int, caps) -> int:
    """Number of vectors ``0 <= s_i <= caps[i]`` summing to ``total``."""
    ways = [1] + [0] * total
    for c in caps:
        nxt = [0] * (total + 1)
        for j in range(total + 1):
            if ways[j]:
                for x in range(min(c, total - j) + 1):
                    nxt[j + x] += ways[j]
        ways = nxt
    return ways[total]


def compositions(total: int, caps):
    """Capped compositions of ``total`` in lexicographic order."""
    caps = list(caps)
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    vec = [0] * len(caps)

    def rec(i, left):
        if i == len(caps):
            if left == 0:
                yield tuple(vec)
            return
        for x in range(max(0, left - suffix[i + 1]), min(caps[i], left) + 1):
            vec[i] = x
            yield from rec(i + 1, left - x)
    if total <= suffix[0]:
        yield from rec(0, total)


def solve_mes_nd(g: Graph, beta: int, max_compositions: int = MAX_COMPOSITIONS,
                 partition: TypePartition | None = None, debug: bool = False) -> SolveResult:
    """Optimal MES by trying every per-class seed allocation.

    ``explored`` is the number of allocations tried.  Ties go to the
    lexicographically smallest allocation.
    """
    if beta < 0:
        raise ValueError("budget must be non-negative")
    beta = min(beta, g.n)
    part = partition or compute_type_partition(g)
    caps = part.sizes()
    total = count_compositions(beta, caps)
    if total > max_compositions:
        raise WorkGuardExceeded(
            f"{total} allocations over t={part.t} classes exceed the limit {max_compositions}")
    best, best_seed, explored = -1, SeedSet(()), 0
    for s in compositions(beta, caps):
        explored += 1
        seed = me_nd_seed(g, part, s, debug=debug)
        val = len(run_diffusion(g, seed).influenced)
        if val > best:
            best, best_seed = val, seed
    return SolveResult(SeedSet(best_seed.members, beta), best, "nd", explored)


def is_vertex_cover(g: Graph, cover) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


def min_vertex_cover(g: Graph, max_size: int = 20) -> list:
    """Exact minimum vertex cover by bounded search (small covers only)."""

    def search(edges, k):
        if not edges:
            return []
        if k == 0:
            return None
        deg = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        u, v = max(edges, key=lambda e: (max(deg[e[0]], deg[e[1]]), -e[0], -e[1]))
        for pick in sorted((u, v), key=lambda x: (-deg[x], x)):
            rest = [e for e in edges if pick not in e]
            sub = search(rest, k - 1)
            if sub is not None:
                return [pick] + sub
        return None

    edges = list(g.edges)
    for k in range(max_size + 1):
        found = search(edges, k)
        if found is not None:
            return sorted(found)
    raise WorkGuardExceeded(f"no vertex cover of size <= {max_size}")


def solve_mes_vc(g: Graph, cover, alpha: int, beta: int,
                 max_compositions: int = MAX_COMPOSITIONS):
    """Decide whether some seed of size <= beta influences >= alpha nodes.

    ``cover`` must be a vertex cover.  When it fits in the budget it is tried
    as the seed first; the answer is confirmed by simulation, since nodes
    outside the cover whose ``t_E`` exceeds their degree never evangelize.
    Otherwise the neighborhood-diversity solver decides (a cover of size l
    bounds the number of types by ``2**l + l``).

    Returns ``(answer, seed)``.
    """
    cover = sorted(set(cover))
    if not is_vertex_cover(g, cover):
        raise PreconditionError("the given node set is not a vertex cover")
    beta = min(beta, g.n)
    if alpha <= beta:
        return True, SeedSet(range(max(alpha, 0)), beta)
    if beta >= len(cover):
        if len(run_diffusion(g, cover).influenced) >= alpha:
            return True, SeedSet(cover, beta)
    res = solve_mes_nd(g, beta, max_compositions)
    return res.objective >= alpha, res.seed

