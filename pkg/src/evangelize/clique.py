"""Linear-time exact MES on complete graphs."""

from __future__ import annotations

from .diffusion import run_diffusion
from .graph import Graph, PreconditionError, SeedSet
from .oracle import SolveResult


def top_by_evangelization(nodes, t_evg, k):
    """The ``k`` nodes with the largest ``t_E``; ties go to the lowest id."""
    return sorted(nodes, key=lambda v: (-t_evg[v], v))[:k]


def swap_uninfluenceable(seeds, outside, t_inf, bar):
    """Trade seeds that would be influenced anyway (``t_I <= bar``) for outside
    nodes that never will be (``t_I > bar``), lowest ids first.

    ``bar`` is frozen for the whole loop.  Returns the new seed list and the
    swaps performed as ``(out, in)`` pairs.
    """
    give = sorted(u for u in seeds if t_inf[u] <= bar)
    take = sorted(v for v in outside if t_inf[v] > bar)
    swaps = list(zip(give, take))
    dropped = {u for u, _ in swaps}
    new = sorted([u for u in seeds if u not in dropped] + [v for _, v in swaps])
    return new, swaps


def solve_mes_clique(g: Graph, beta: int, debug: bool = False) -> SolveResult:
    """MES on ``K_n``.

    Seed the ``beta`` nodes hardest to evangelize, measure how many
    evangelists that produces, then replace seeds that would be influenced by
    that many evangelists with nodes that would not.  With ``debug`` every
    swap is re-simulated to confirm the influenced count never drops.
    """
    if not g.is_complete():
        raise PreconditionError("graph is not complete")
    if beta < 0:
        raise ValueError("budget must be non-negative")
    beta = min(beta, g.n)
    x = top_by_evangelization(range(g.n), g.t_evg, beta)
    eta = len(run_diffusion(g, x).evangelists)
    chosen = set(x)
    outside = [v for v in range(g.n) if v not in chosen]
    seeds, swaps = swap_uninfluenceable(x, outside, g.t_inf, eta)
    if debug:
        cur = sorted(x)
        before = len(run_diffusion(g, cur).influenced)
        for u, v in swaps:
            cur = sorted((set(cur) - {u}) | {v})
            after = len(run_diffusion(g, cur).influenced)
            assert after >= before, f"swap {u}->{v} lowered |Inf| from {before} to {after}"
            before = after
    objective = len(run_diffusion(g, seeds).influenced)
    return SolveResult(SeedSet(seeds, beta), objective, "clique", 1 + len(swaps))
