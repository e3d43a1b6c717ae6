"""Perfect evangelizing sets on graphs of large minimum degree.

If every ``t_E(v) <= te_bar`` and ``t_I(v) <= ti_bar`` with
``te_bar + ti_bar <= n + 2``, and every degree is at least
``(n + te_bar + ti_bar) / 2 - 2``, a greedy set of at most
``max(ti_bar, 2 * te_bar - 2)`` seeds influences the whole graph.  With
``te_bar = ti_bar = 2`` this is the two-seed bound for Dirac graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .diffusion import run_diffusion
from .graph import Graph, PreconditionError, SeedSet


@dataclass
class DenseReport:
    ok: bool
    te_bar: int
    ti_bar: int
    required_degree: int
    violations: list = field(default_factory=list)


def required_min_degree(n: int, te_bar: int, ti_bar: int) -> int:
    # ceil keeps d >= (n + te + ti)/2 - 2 valid when the right side is fractional
    return math.ceil((n + te_bar + ti_bar) / 2) - 2


def check_dense_preconditions(g: Graph, te_bar: int, ti_bar: int) -> DenseReport:
    need = required_min_degree(g.n, te_bar, ti_bar)
    bad = []
    for v in range(g.n):
        if g.t_evg[v] > te_bar:
            bad.append(f"node {v}: t_E={g.t_evg[v]} exceeds te_bar={te_bar}")
            break
    for v in range(g.n):
        if g.t_inf[v] > ti_bar:
            bad.append(f"node {v}: t_I={g.t_inf[v]} exceeds ti_bar={ti_bar}")
            break
    if te_bar + ti_bar > g.n + 2:
        bad.append(f"te_bar + ti_bar = {te_bar + ti_bar} exceeds n + 2 = {g.n + 2}")
    for v in range(g.n):
        if g.degree(v) < need:
            bad.append(f"node {v}: degree {g.degree(v)} below required {need}")
            break
    return DenseReport(not bad, te_bar, ti_bar, need, bad)


def _initial_set(g: Graph, size: int) -> list:
    chosen = []
    if size >= 2:
        pair = next(((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                     if not g.has_edge(u, v)), None)
        if pair is not None:
            chosen = list(pair)
    taken = set(chosen)
    for v in range(g.n):
        if len(chosen) >= size:
            break
        if v not in taken:
            chosen.append(v)
            taken.add(v)
    return chosen


def build_pes_dense(g: Graph, te_bar: int | None = None, ti_bar: int | None = None) -> SeedSet:
    """Greedy perfect seed set; bounds default to the largest thresholds present.

    Start from ``ti_bar`` nodes including a non-adjacent pair when one exists,
    then, while fewer than ``2 * (te_bar - 1)`` nodes are chosen, add the
    lowest-id outside node with fewer than ``ti_bar`` chosen neighbors.
    """
    if te_bar is None:
        te_bar = max(g.t_evg, default=0)
    if ti_bar is None:
        ti_bar = max(g.t_inf, default=0)
    report = check_dense_preconditions(g, te_bar, ti_bar)
    if not report.ok:
        raise PreconditionError("; ".join(report.violations))
    s = _initial_set(g, ti_bar)
    in_s = set(s)
    hits = [0] * g.n
    for u in s:
        for w in g.adj[u]:
            hits[w] += 1
    limit = 2 * (te_bar - 1)
    while len(s) < limit:
        v = next((v for v in range(g.n) if v not in in_s and hits[v] <= ti_bar - 1), None)
        if v is None:
            break
        s.append(v)
        in_s.add(v)
        for w in g.adj[v]:
            hits[w] += 1
    res = run_diffusion(g, s)
    if len(res.influenced) != g.n:
        raise AssertionError(
            f"greedy set {sorted(s)} leaves {g.n - len(res.influenced)} nodes uninfluenced")
    return SeedSet(sorted(s))
