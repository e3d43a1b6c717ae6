"""Star gadget turning an Influence Maximization instance into an MES instance.

In Influence Maximization (IM) each node has one threshold ``t`` and the goal
is to maximize the number of activated nodes.  Node ``v_i`` becomes a star
whose center (id ``i*(n+1)``) keeps ``v_i``'s edges and threshold and whose
``n`` leaves (ids ``i*(n+1)+1 .. i*(n+1)+n``) have thresholds ``(1, 1)``.
Every node is influenced by a single evangelist neighbor, so ``k`` active
nodes in the IM graph correspond to ``k(n+1)`` influenced nodes in the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph
from .oracle import batch_influence, mes_profile

MAX_GADGET_SOURCE = 5


@dataclass(frozen=True)
class IMInstance:
    n: int
    edges: tuple
    t: tuple
    beta: int = 0

    def __post_init__(self):
        # validates simple-graph structure and 0 <= t <= d + 1
        self.as_graph()

    @classmethod
    def from_graph(cls, g: Graph, beta: int = 0) -> "IMInstance":
        """Read an IM instance stored as a graph with ``t_I = t_E = t``."""
        if g.t_inf != g.t_evg:
            raise ValueError("IM instances need t_I == t_E on every node")
        return cls(g.n, tuple(g.edges), tuple(g.t_evg), beta)

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges, self.t, self.t)


def im_to_mes_gadget(im: IMInstance) -> Graph:
    """Build the ``n(n+1)``-node MES instance.

    A center whose IM threshold is 0 gets ``t_I = 0`` rather than 1, because
    ``t_I <= t_E`` must hold; it evangelizes unconditionally, so it is
    influenced under either value.
    """
    n = im.n
    size = n + 1
    edges = [(u * size, v * size) for u, v in im.edges]
    t_inf, t_evg = [1] * (n * size), [1] * (n * size)
    for i in range(n):
        c = i * size
        t_evg[c] = im.t[i]
        t_inf[c] = min(1, im.t[i])
        edges.extend((c, c + j) for j in range(1, size))
    return Graph.from_edges(n * size, edges, t_inf, t_evg)


def im_profile(im: IMInstance, beta: int) -> list:
    """Best activated count of the IM instance for every budget 0..beta."""
    g = im.as_graph()
    beta = min(beta, g.n)
    out = []
    for k in range(beta + 1):
        subs = list(combinations(range(g.n), k))
        masks = np.zeros((len(subs), g.n), dtype=bool)
        for r, s in enumerate(subs):
            masks[r, list(s)] = True
        evg, _ = batch_influence(g, masks)
        top = int(evg.sum(axis=1).max())
        out.append(max(top, out[-1]) if out else top)
    return out


@dataclass(frozen=True)
class GadgetReport:
    beta: int
    k: int
    im_optimum: int
    gadget_optimum: int
    im_side: bool
    gadget_side: bool

    @property
    def holds(self) -> bool:
        return self.im_side == self.gadget_side


def verify_gadget_correspondence(im: IMInstance, k: int, beta: int | None = None) -> GadgetReport:
    """Check ``IM optimum >= k  <=>  gadget MES optimum >= k(n+1)`` exhaustively."""
    if im.n > MAX_GADGET_SOURCE:
        raise ValueError(f"IM instance has {im.n} nodes; exhaustive check allows {MAX_GADGET_SOURCE}")
    beta = im.beta if beta is None else beta
    beta = min(beta, im.n)
    im_best = im_profile(im, beta)[-1]
    gadget = im_to_mes_gadget(im)
    gad_best = mes_profile(gadget, beta, max_nodes=gadget.n)[-1]
    return GadgetReport(beta, k, im_best, gad_best, im_best >= k, gad_best >= k * (im.n + 1))
