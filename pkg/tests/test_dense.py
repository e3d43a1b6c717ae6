import pytest

from conftest import k4_all, path3
from evangelize import (Graph, PreconditionError, brute_force_pes, build_pes_dense,
                        check_dense_preconditions, generate_instance, run_diffusion)
from evangelize.dense import required_min_degree


def complete(n, ti, te):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], [ti] * n, [te] * n)


def test_precondition_examples():
    assert check_dense_preconditions(k4_all(2, 2), 2, 2).ok
    rep = check_dense_preconditions(path3().with_thresholds([1, 1, 1], [1, 2, 1]), 2, 2)
    assert not rep.ok and any("degree" in v for v in rep.violations)
    rep = check_dense_preconditions(complete(3, 3, 3), 3, 3)
    assert not rep.ok and any("n + 2" in v for v in rep.violations)


def test_rounding_is_ceiling():
    assert required_min_degree(4, 2, 2) == 2
    assert required_min_degree(5, 2, 2) == 3


def test_build_examples():
    s = build_pes_dense(k4_all(2, 2))
    assert len(s) == 2 and len(run_diffusion(k4_all(2, 2), s).influenced) == 4
    k5 = complete(5, 1, 1)
    s = build_pes_dense(k5, 1, 1)
    assert len(s) == 1 and len(run_diffusion(k5, s).influenced) == 5
    with pytest.raises(PreconditionError):
        build_pes_dense(complete(5, 5, 5), 5, 5)


def test_initial_set_prefers_independent_pair():
    # C4 with a chord missing: 0-2 is the lowest non-adjacent pair
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [2] * 4, [2] * 4)
    assert build_pes_dense(g).members == (0, 2)


def test_two_disjoint_edges_break_the_guarantee():
    # te_bar = ti_bar = 1 allows min degree ceil(n/2) - 1 = 1, i.e. a disconnected
    # graph, while the size bound is max(1, 0) = 1 seed
    g = Graph.from_edges(4, [(0, 1), (2, 3)], [1] * 4, [1] * 4)
    assert check_dense_preconditions(g, 1, 1).ok
    assert brute_force_pes(g).objective == 2
    with pytest.raises(AssertionError):
        build_pes_dense(g, 1, 1)


@pytest.mark.parametrize("seed", range(60))
def test_size_bound_and_perfectness(seed):
    te = 2 + seed % 3
    ti = 1 + seed % te
    n = 8 + seed % 6
    g = generate_instance("dense_dirac", {"n": n, "te_bar": te, "ti_bar": ti}, seed)
    s = build_pes_dense(g, te, ti)
    assert len(s) <= max(ti, 2 * te - 2)
    assert len(run_diffusion(g, s).influenced) == g.n
    if len(s) < 2 * (te - 1):
        assert all(sum(1 for w in g.adj[v] if w in s) >= ti for v in range(g.n) if v not in s)
    assert len(s) >= brute_force_pes(g).objective
