"""Exact MES on trees and forests by a six-table dynamic program.

For every node ``v`` and budget ``b`` the DP keeps the best number of
influenced nodes inside the subtree ``T(v)`` under three end states of ``v``
(agnostic, influenced only, evangelist), each once with ``v``'s own
thresholds and once with *residual* thresholds ``max(t - 1, 0)`` that model
an evangelist parent.  Children are merged by max-plus knapsacks over the
budget while counting how many children end up evangelists:

* ``A`` -- ``v`` is not an evangelist; children see no help from ``v``.
* ``C`` -- ``v`` is a seed; children use residual tables.
* ``D`` -- ``v`` is evangelized by its children; the counted children must
  evangelize on their own, the others may rely on ``v``.

Infeasible cells hold ``-inf`` (``NEG``); float addition saturates there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, PreconditionError, SeedSet
from .oracle import SolveResult

NEG = float("-inf")

NO, INF, EVG = "no", "inf", "evg"


@dataclass
class NodeTables:
    no: list
    inf: list
    evg: list
    no_hat: list
    inf_hat: list
    evg_hat: list

    def get(self, state, hat=False):
        return getattr(self, state + ("_hat" if hat else ""))

    def best(self, hat=False):
        return [max(x) for x in zip(self.get(NO, hat), self.get(INF, hat), self.get(EVG, hat))]


@dataclass
class _Layers:
    """Per-node knapsack layers kept for backtracking."""

    a: list = field(default_factory=list)
    c: list = field(default_factory=list)
    d: list = field(default_factory=list)


@dataclass
class TreeInstance:
    graph: Graph
    roots: list
    children: list
    postorder: list


class _Counter:
    __slots__ = ("ops",)

    def __init__(self):
        self.ops = 0


def _residual(t):
    return t - 1 if t > 0 else 0


def root_forest(g: Graph) -> TreeInstance:
    """Root each component at its smallest id; children in ascending id order."""
    if not g.is_forest():
        raise PreconditionError("graph contains a cycle; the tree solver needs a forest")
    children = [[] for _ in range(g.n)]
    roots, post = [], []
    seen = [False] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        order = [r]
        i = 0
        while i < len(order):
            u = order[i]
            i += 1
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    children[u].append(w)
                    order.append(w)
        post.extend(reversed(order))
    return TreeInstance(g, roots, children, post)


def _leaf_values(t_inf, t_evg, beta):
    no = [0 if t_inf > 0 else NEG] * (beta + 1)
    inf = [1 if (t_inf == 0 and t_evg > 0) else NEG] * (beta + 1)
    evg = [1 if (b >= 1 or t_evg == 0) else NEG for b in range(beta + 1)]
    return no, inf, evg


def leaf_tables(g: Graph, leaf: int, beta: int) -> NodeTables:
    """Tables of a single-node subtree.

    Agnostic/influenced values do not depend on ``b``: a budget is an upper
    bound on seeds, and leaving it unused keeps the leaf out of the seed set.
    """
    ti, te = g.t_inf[leaf], g.t_evg[leaf]
    return NodeTables(*_leaf_values(ti, te, beta),
                      *_leaf_values(_residual(ti), _residual(te), beta))


def _knapsack(children, plain, counted, beta, kmax, work):
    """Layers of a max-plus knapsack that also counts ``counted`` children.

    ``plain[c]`` / ``counted[c]`` are per-budget values of child ``c`` in the
    not-counted / counted case; ``kmax`` bounds the tracked count (higher
    counts are dropped).  Returns the list of layers, one per child.
    """
    layers = []
    prev = None
    for i, c in enumerate(children):
        p, e = plain[c], counted[c]
        ktop = min(i + 1, kmax)
        cur = [[NEG] * (kmax + 1) for _ in range(beta + 1)]
        if prev is None:
            for j in range(beta + 1):
                cur[j][0] = p[j]
                if kmax >= 1:
                    cur[j][1] = e[j]
            work.ops += beta + 1
        else:
            for j in range(beta + 1):
                row = cur[j]
                for a in range(j + 1):
                    src = prev[a]
                    pj, ej = p[j - a], e[j - a]
                    for k in range(ktop + 1):
                        best = src[k] + pj
                        if k and src[k - 1] + ej > best:
                            best = src[k - 1] + ej
                        if best > row[k]:
                            row[k] = best
                    work.ops += ktop + 1
        layers.append(cur)
        prev = cur
    return layers


def _knapsack_1d(children, vals, beta, work):
    layers = []
    prev = None
    for c in children:
        v = vals[c]
        if prev is None:
            cur = list(v)
            work.ops += beta + 1
        else:
            cur = [NEG] * (beta + 1)
            for j in range(beta + 1):
                for a in range(j + 1):
                    s = prev[a] + v[j - a]
                    if s > cur[j]:
                        cur[j] = s
                work.ops += j + 1
        layers.append(cur)
        prev = cur
    return layers


def _agnostic_from_a(last, t_inf, t_evg, beta):
    no = [NEG] * (beta + 1)
    inf = [NEG] * (beta + 1)
    for b in range(beta + 1):
        row = last[b]
        for k in range(min(t_inf, len(row))):
            no[b] = max(no[b], row[k])
        for k in range(t_inf, min(t_evg, len(row))):
            inf[b] = max(inf[b], row[k] + 1)
    return no, inf


def combine_agnostic(children_tables, t_inf, t_evg, beta, work=None):
    """``(NO, Inf, NO_hat, Inf_hat, A-layers)`` for a node with the given children.

    Children that are not evangelists use their original thresholds: a
    non-evangelist parent never helps them.
    """
    work = work or _Counter()
    idx = range(len(children_tables))
    plain = [[max(x, y) for x, y in zip(t.no, t.inf)] for t in children_tables]
    counted = [t.evg for t in children_tables]
    kmax = min(t_evg, len(children_tables) + 1) - 1
    if kmax < 0:
        empty = [NEG] * (beta + 1)
        return list(empty), list(empty), list(empty), list(empty), []
    layers = _knapsack(idx, plain, counted, beta, kmax, work)
    last = layers[-1]
    no, inf = _agnostic_from_a(last, t_inf, t_evg, beta)
    no_h, inf_h = _agnostic_from_a(last, _residual(t_inf), _residual(t_evg), beta)
    return no, inf, no_h, inf_h, layers


def _evg_from(c_last, d_last, t_evg, beta):
    out = [NEG] * (beta + 1)
    for b in range(beta + 1):
        m1 = c_last[b - 1] + 1 if (t_evg > 0 and b >= 1) else NEG
        m2 = NEG
        row = d_last[b]
        for k in range(t_evg, len(row)):
            m2 = max(m2, row[k] + 1)
        out[b] = max(m1, m2)
    return out


def combine_evangelist(children_tables, t_evg, beta, work=None):
    """``(Evg, Evg_hat, C-layers, D-layers)``.

    ``Evg[b] = max(M1, M2)``: ``M1`` seeds ``v`` and lets every child use
    residual tables with ``b - 1`` seeds; ``M2`` needs at least ``t_E(v)``
    children that evangelize without ``v``'s help.
    """
    work = work or _Counter()
    idx = range(len(children_tables))
    hat_any = [t.best(hat=True) for t in children_tables]
    unhat_evg = [t.evg for t in children_tables]
    c_layers = _knapsack_1d(idx, hat_any, beta, work)
    d_layers = _knapsack(idx, hat_any, unhat_evg, beta, len(children_tables), work)
    evg = _evg_from(c_layers[-1], d_layers[-1], t_evg, beta)
    evg_h = _evg_from(c_layers[-1], d_layers[-1], _residual(t_evg), beta)
    return evg, evg_h, c_layers, d_layers


def _check_remark(t: NodeTables, v):
    for name in ("no", "inf", "evg", "no_hat", "inf_hat", "evg_hat"):
        col = getattr(t, name)
        assert all(col[b] <= col[b + 1] for b in range(len(col) - 1)), \
            f"table {name} of node {v} not monotone in the budget"
    assert all(x <= y for x, y in zip(t.evg, t.evg_hat)), f"Evg > Evg_hat at node {v}"
    assert all(x <= y for x, y in zip(t.best(), t.best(hat=True))), \
        f"residual thresholds lowered the optimum at node {v}"


def compute_tables(inst: TreeInstance, beta: int, work=None):
    """Postorder DP.  Returns ``(tables, layers)`` indexed by node id."""
    g = inst.graph
    work = work or _Counter()
    tables = [None] * g.n
    layers = [None] * g.n
    for v in inst.postorder:
        kids = inst.children[v]
        if not kids:
            tables[v] = leaf_tables(g, v, beta)
            layers[v] = _Layers()
            continue
        kt = [tables[c] for c in kids]
        no, inf, no_h, inf_h, a = combine_agnostic(kt, g.t_inf[v], g.t_evg[v], beta, work)
        evg, evg_h, c, d = combine_evangelist(kt, g.t_evg[v], beta, work)
        tables[v] = NodeTables(no, inf, evg, no_h, inf_h, evg_h)
        layers[v] = _Layers(a, c, d)
        _check_remark(tables[v], v)
    return tables, layers


def _pick_state(tables, v, hat, b, target, allowed):
    t = tables[v]
    for s in allowed:
        if t.get(s, hat)[b] == target:
            return s
    raise AssertionError(f"no state of node {v} reaches {target}")


def _walk(layers, kids, j, k, value_of, first_value_of):
    """Undo a knapsack: yield ``(child, budget, counted)`` from last to first."""
    out = []
    for i in range(len(kids) - 1, -1, -1):
        cur = layers[i][j] if k is None else layers[i][j][k]
        if i == 0:
            counted = first_value_of(kids[0], j, k, cur)
            out.append((kids[0], j, counted))
            break
        prev = layers[i - 1]
        found = False
        for a in range(j + 1):
            for counted in (False, True):
                if k is None and counted:
                    continue
                if counted and k == 0:
                    continue
                pk = k if (k is None or not counted) else k - 1
                base = prev[a] if k is None else prev[a][pk]
                if base + value_of(kids[i], j - a, counted) == cur:
                    out.append((kids[i], j - a, counted))
                    j, k = a, pk
                    found = True
                    break
            if found:
                break
        assert found, "inconsistent knapsack layer"
    return out


def reconstruct_seed(inst: TreeInstance, tables, layers, root_budgets) -> list:
    """Backtrack through stored layers; ``root_budgets`` maps root -> budget."""
    g = inst.graph
    seeds = []
    stack = []
    for r, b in root_budgets.items():
        target = tables[r].best()[b]
        stack.append((r, _pick_state(tables, r, False, b, target, (NO, INF, EVG)), False, b))
    while stack:
        v, state, hat, b = stack.pop()
        t = tables[v]
        target = t.get(state, hat)[b]
        assert target != NEG, f"backtracking into infeasible cell at node {v}"
        kids = inst.children[v]
        ti, te = g.t_inf[v], g.t_evg[v]
        if hat:
            ti, te = _residual(ti), _residual(te)
        if not kids:
            if state == EVG and te > 0:
                seeds.append(v)
            continue
        ly = layers[v]
        if state in (NO, INF):
            last = ly.a[-1][b]
            ks = range(ti) if state == NO else range(ti, te)
            bonus = 0 if state == NO else 1
            k = next(k for k in ks if k < len(last) and last[k] + bonus == target)
            plain = lambda c, j, counted: (tables[c].evg[j] if counted
                                           else max(tables[c].no[j], tables[c].inf[j]))

            def first_a(c, j, k, cur):
                return k == 1
            for c, j, counted in _walk(ly.a, kids, b, k, plain, first_a):
                if counted:
                    stack.append((c, EVG, False, j))
                else:
                    stack.append((c, _pick_state(tables, c, False, j,
                                                 plain(c, j, False), (NO, INF)), False, j))
            continue
        # evangelist
        if te > 0 and b >= 1 and ly.c[-1][b - 1] + 1 == target:
            seeds.append(v)
            hv = lambda c, j, counted: tables[c].best(hat=True)[j]
            for c, j, _ in _walk(ly.c, kids, b - 1, None, hv, lambda *a: False):
                stack.append((c, _pick_state(tables, c, True, j, hv(c, j, False),
                                             (NO, INF, EVG)), True, j))
            continue
        last = ly.d[-1][b]
        k = next(k for k in range(te, len(last)) if last[k] + 1 == target)
        dv = lambda c, j, counted: (tables[c].evg[j] if counted
                                    else tables[c].best(hat=True)[j])

        def first_d(c, j, k, cur):
            return k == 1
        for c, j, counted in _walk(ly.d, kids, b, k, dv, first_d):
            if counted:
                stack.append((c, EVG, False, j))
            else:
                stack.append((c, _pick_state(tables, c, True, j, dv(c, j, False),
                                             (NO, INF, EVG)), True, j))
    return sorted(seeds)


def _max_plus(x, y, beta):
    out = [NEG] * (beta + 1)
    arg = [0] * (beta + 1)
    for j in range(beta + 1):
        for a in range(j + 1):
            s = x[a] + y[j - a]
            if s > out[j]:
                out[j], arg[j] = s, a
    return out, arg


def solve_mes_tree(g: Graph, beta: int, check: bool = True) -> SolveResult:
    """Optimal MES on a forest; components share the budget through a knapsack.

    ``explored`` counts max-plus evaluations, the unit of the
    ``O(n Delta^2 beta^3)`` bound.  With ``check`` the reconstructed seed is
    re-simulated and must reproduce the DP optimum.
    """
    if beta < 0:
        raise ValueError("budget must be non-negative")
    beta = min(beta, g.n)
    inst = root_forest(g)
    work = _Counter()
    tables, layers = compute_tables(inst, beta, work)
    total = [0] * (beta + 1)
    splits = []
    for r in inst.roots:
        total, arg = _max_plus(total, tables[r].best(), beta)
        splits.append(arg)
    objective = total[beta]
    budgets = {}
    j = beta
    for r, arg in zip(reversed(inst.roots), reversed(splits)):
        a = arg[j]
        budgets[r] = j - a
        j = a
    seed = reconstruct_seed(inst, tables, layers, budgets)
    result = SolveResult(SeedSet(seed, beta), int(objective), "tree", work.ops)
    if check:
        from .diffusion import run_diffusion
        got = len(run_diffusion(g, seed).influenced)
        assert got == objective, f"reconstructed seed influences {got}, DP claims {objective}"
    return result
