"""Exhaustive MES/PES solvers for small graphs, and PES from any exact MES solver.

The enumeration evaluates many seed sets at once with a dense numpy
simulator (``batch_influence``).  That code path shares nothing with
:func:`evangelize.diffusion.run_diffusion`, which keeps the oracle an
independent check on the other solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .graph import Graph, SeedSet, WorkGuardExceeded

MAX_ORACLE_NODES = 25
_CHUNK = 4096


@dataclass(frozen=True)
class SolveResult:
    seed: SeedSet
    objective: int
    solver: str
    explored: int

    def as_dict(self) -> dict:
        return {
            "seed": list(self.seed.members),
            "budget": self.seed.budget,
            "objective": self.objective,
            "solver": self.solver,
            "explored": self.explored,
        }


def batch_influence(g: Graph, seed_masks: np.ndarray):
    """Final (evangelist, influenced) masks for a batch of seed sets.

    ``seed_masks`` is a boolean ``(batch, n)`` array.  Every row iterates the
    synchronous rule until its evangelist set stops changing.
    """
    a = g.adjacency_matrix(np.int32)
    t_evg = np.asarray(g.t_evg, dtype=np.int32)
    t_inf = np.asarray(g.t_inf, dtype=np.int32)
    evg = seed_masks.astype(bool).copy()
    while True:
        cnt = evg.astype(np.int32) @ a
        nxt = evg | (cnt >= t_evg)
        if np.array_equal(nxt, evg):
            break
        evg = nxt
    inf = seed_masks.astype(bool) | (cnt >= t_inf)
    return evg, inf


def _masks(n, subsets):
    m = np.zeros((len(subsets), n), dtype=bool)
    for r, s in enumerate(subsets):
        m[r, list(s)] = True
    return m


def _guard(g, max_nodes):
    if g.n > max_nodes:
        raise WorkGuardExceeded(
            f"brute force refused: n={g.n} exceeds the oracle limit of {max_nodes} nodes")


def _subsets_of_size(n, k):
    it = combinations(range(n), k)
    while True:
        chunk = [c for _, c in zip(range(_CHUNK), it)]
        if not chunk:
            return
        yield chunk


def brute_force_mes(g: Graph, beta: int, max_nodes: int = MAX_ORACLE_NODES) -> SolveResult:
    """Best seed of size <= beta; ties go to the lexicographically smallest member list."""
    _guard(g, max_nodes)
    if beta < 0:
        raise ValueError("budget must be non-negative")
    beta = min(beta, g.n)
    best, best_seed, explored = -1, None, 0
    for k in range(beta + 1):
        for chunk in _subsets_of_size(g.n, k):
            _, inf = batch_influence(g, _masks(g.n, chunk))
            scores = inf.sum(axis=1)
            explored += len(chunk)
            top = int(scores.max())
            if top < best:
                continue
            cand = min(chunk[r] for r in np.flatnonzero(scores == top))
            if top > best or cand < best_seed:
                best, best_seed = top, cand
    return SolveResult(SeedSet(best_seed, beta), best, "oracle", explored)


def mes_profile(g: Graph, beta: int, max_nodes: int = MAX_ORACLE_NODES) -> list:
    """Optimal MES objective for every budget 0..beta (exhaustive)."""
    _guard(g, max_nodes)
    beta = min(beta, g.n)
    out = []
    for k in range(beta + 1):
        top = -1
        for chunk in _subsets_of_size(g.n, k):
            _, inf = batch_influence(g, _masks(g.n, chunk))
            top = max(top, int(inf.sum(axis=1).max()))
        out.append(max(top, out[-1]) if out else top)
    return out


def brute_force_pes(g: Graph, max_nodes: int = MAX_ORACLE_NODES) -> SolveResult:
    """Minimum-size seed with ``Inf = V``; lexicographic tie-break."""
    _guard(g, max_nodes)
    explored = 0
    for k in range(g.n + 1):
        for chunk in _subsets_of_size(g.n, k):
            _, inf = batch_influence(g, _masks(g.n, chunk))
            explored += len(chunk)
            ok = np.flatnonzero(inf.all(axis=1))
            if ok.size:
                # combinations() yields lexicographic order, so the first hit is minimal
                return SolveResult(SeedSet(chunk[int(ok[0])]), k, "oracle", explored)
    raise AssertionError("unreachable: S = V is always perfect")


def pes_via_binary_search(g: Graph, mes_solver) -> SolveResult:
    """Smallest budget whose optimal MES objective reaches ``n``.

    ``mes_solver(g, beta)`` must return an exact :class:`SolveResult`.  The
    optimum is non-decreasing in the budget, so bisection over ``0..n`` is
    sound.
    """
    lo, hi = 0, g.n
    witness = None
    explored = 0
    while lo < hi:
        mid = (lo + hi) // 2
        res = mes_solver(g, mid)
        explored += res.explored
        if res.objective >= g.n:
            hi, witness = mid, res
        else:
            lo = mid + 1
    if witness is None or len(witness.seed) > lo:
        witness = mes_solver(g, lo)
        explored += witness.explored
    seed = SeedSet(witness.seed.members)
    return SolveResult(seed, len(seed), f"binary-search[{witness.solver}]", explored)


def subset_count(n: int, beta: int) -> int:
    return sum(comb(n, k) for k in range(min(beta, n) + 1))
