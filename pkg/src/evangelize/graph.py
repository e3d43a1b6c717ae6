"""Undirected graphs carrying a (t_I, t_E) threshold pair on every node.

Node ids are dense integers ``0..n-1``.  Neighbor lists are kept sorted so
that every traversal in the package is deterministic ("lowest id first").
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

FORMAT_HEADER = "evg-graph v1"


class GraphFormatError(ValueError):
    """Raised for malformed instance text or an invalid graph."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ThresholdError(GraphFormatError):
    """A node violates ``0 <= t_I <= t_E <= d + 1``."""

    def __init__(self, node, t_inf, t_evg, degree, line=None):
        self.node = node
        super().__init__(
            f"node {node}: thresholds (t_I={t_inf}, t_E={t_evg}) outside "
            f"0 <= t_I <= t_E <= d+1 = {degree + 1}",
            line,
        )


class PreconditionError(ValueError):
    """Input is outside the graph class or hypotheses a solver requires."""


class WorkGuardExceeded(RuntimeError):
    """An exponential enumeration would exceed its configured work budget."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with per-node thresholds.

    Build instances through :meth:`from_edges` or :func:`parse_graph`; both
    validate the simple-graph and threshold invariants.
    """

    n: int
    adj: tuple
    t_inf: tuple
    t_evg: tuple
    _edges: tuple = field(default=(), repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   t_inf: Sequence[int], t_evg: Sequence[int]) -> "Graph":
        if n < 0:
            raise GraphFormatError(f"negative node count {n}")
        t_inf = tuple(int(x) for x in t_inf)
        t_evg = tuple(int(x) for x in t_evg)
        if len(t_inf) != n or len(t_evg) != n:
            raise GraphFormatError(f"expected {n} threshold pairs")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"self-loop on node {u}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        for v in range(n):
            if not 0 <= t_inf[v] <= t_evg[v] <= len(adj[v]) + 1:
                raise ThresholdError(v, t_inf[v], t_evg[v], len(adj[v]))
        edge_list = tuple((u, w) for u in range(n) for w in adj[u] if u < w)
        return cls(n, adj, t_inf, t_evg, edge_list)

    def with_thresholds(self, t_inf, t_evg) -> "Graph":
        return Graph.from_edges(self.n, self.edges, t_inf, t_evg)

    @property
    def edges(self) -> tuple:
        """Edges as ``(u, v)`` pairs with ``u < v``, in ascending order."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self) -> list:
        """Connected components, each a sorted node list, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def adjacency_matrix(self, dtype=np.int32) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self._edges:
            a[u, v] = a[v, u] = 1
        return a


@dataclass(frozen=True)
class SeedSet:
    """Sorted, duplicate-free set of seed node ids."""

    members: tuple
    budget: Optional[int] = None

    def __post_init__(self):
        members = tuple(sorted(int(x) for x in self.members))
        if len(set(members)) != len(members):
            raise ValueError("duplicate seed node")
        if self.budget is not None and len(members) > self.budget:
            raise ValueError(f"{len(members)} seeds exceed budget {self.budget}")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in set(self.members)

    def as_set(self) -> frozenset:
        return frozenset(self.members)


def parse_graph(text: str) -> Graph:
    """Parse ``evg-graph v1`` text into a validated :class:`Graph`."""
    header_seen = False
    n = None
    thresholds = {}
    t_lines = {}
    edges = []
    edge_lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line.split() != FORMAT_HEADER.split():
                raise GraphFormatError(f"expected header '{FORMAT_HEADER}'", lineno)
            header_seen = True
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise GraphFormatError(f"non-integer field in '{line}'", lineno) from None
        if tag == "n":
            if n is not None:
                raise GraphFormatError("repeated 'n' line", lineno)
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("'n' takes one non-negative integer", lineno)
            n = nums[0]
        elif tag == "t":
            if n is None:
                raise GraphFormatError("'t' line before 'n'", lineno)
            if len(nums) != 3:
                raise GraphFormatError("'t' takes <id> <tI> <tE>", lineno)
            v, ti, te = nums
            if not 0 <= v < n:
                raise GraphFormatError(f"dangling node id {v}", lineno)
            if v in thresholds:
                raise GraphFormatError(f"repeated thresholds for node {v}", lineno)
            thresholds[v] = (ti, te)
            t_lines[v] = lineno
        elif tag == "e":
            if n is None:
                raise GraphFormatError("'e' line before 'n'", lineno)
            if len(nums) != 2:
                raise GraphFormatError("'e' takes <u> <v>", lineno)
            u, v = nums
            if u == v:
                raise GraphFormatError(f"self-loop on node {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"dangling node id in edge ({u}, {v})", lineno)
            if u > v:
                raise GraphFormatError(f"edge ({u}, {v}) must be written with u < v", lineno)
            if (u, v) in edge_lines:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
            edge_lines[(u, v)] = lineno
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown record '{tag}'", lineno)
    if not header_seen:
        raise GraphFormatError(f"missing header '{FORMAT_HEADER}'")
    if n is None:
        raise GraphFormatError("missing 'n' line")
    missing = [v for v in range(n) if v not in thresholds]
    if missing:
        raise GraphFormatError(f"no thresholds for node {missing[0]}")
    t_inf = [thresholds[v][0] for v in range(n)]
    t_evg = [thresholds[v][1] for v in range(n)]
    try:
        return Graph.from_edges(n, edges, t_inf, t_evg)
    except ThresholdError as exc:
        raise ThresholdError(exc.node, t_inf[exc.node], t_evg[exc.node],
                             sum(exc.node in e for e in edges),
                             t_lines[exc.node]) from None


def serialize_graph(g: Graph) -> str:
    """Canonical ``evg-graph v1`` text: nodes then edges, ascending."""
    lines = [FORMAT_HEADER, f"n {g.n}"]
    lines += [f"t {v} {g.t_inf[v]} {g.t_evg[v]}" for v in range(g.n)]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(g))
