from itertools import combinations

import numpy as np
import pytest

from conftest import k4_all, path3, random_instances
from evangelize import (Graph, WorkGuardExceeded, brute_force_mes, brute_force_pes,
                        generate_instance, pes_via_binary_search, run_diffusion)
from evangelize.oracle import batch_influence, mes_profile


def test_path_mes():
    res = brute_force_mes(path3(), 1)
    assert res.seed.members == (1,)
    assert res.objective == 3
    assert res.explored == 4


def test_full_budget():
    g = generate_instance("random_gnp", {"n": 7, "p": 0.3}, 2)
    assert brute_force_mes(g, 7).objective == 7


def test_zero_budget():
    g = path3()
    res = brute_force_mes(g, 0)
    assert res.seed.members == () and res.objective == 0


def test_k4_pes():
    res = brute_force_pes(k4_all(2, 2))
    assert res.objective == 2 and res.seed.members == (0, 1)


def test_single_node_pes():
    g = Graph.from_edges(1, [], [0], [1])
    assert brute_force_pes(g).seed.members == ()


def test_path_pes():
    res = brute_force_pes(path3())
    assert res.seed.members == (1,) and res.objective == 1


def test_binary_search_examples():
    assert pes_via_binary_search(path3(), brute_force_mes).seed.members == (1,)
    assert pes_via_binary_search(k4_all(2, 2), brute_force_mes).objective == 2


def test_saturated_node_must_be_seeded():
    # node 2 has t_I = t_E = d + 1: nothing but seeding reaches it
    g = Graph.from_edges(3, [(0, 1), (1, 2)], [0, 0, 2], [0, 0, 2])
    res = pes_via_binary_search(g, brute_force_mes)
    assert res.objective >= 1 and 2 in res.seed


def test_guard():
    g = Graph.from_edges(26, [], [0] * 26, [0] * 26)
    with pytest.raises(WorkGuardExceeded):
        brute_force_mes(g, 1)
    with pytest.raises(WorkGuardExceeded):
        brute_force_pes(g)


@pytest.mark.parametrize("g", random_instances(60, seed=21, n_max=10))
def test_batch_simulator_agrees_with_run_diffusion(g):
    subs = [s for k in range(min(g.n, 3) + 1) for s in combinations(range(g.n), k)]
    masks = np.zeros((len(subs), g.n), dtype=bool)
    for r, s in enumerate(subs):
        masks[r, list(s)] = True
    evg, inf = batch_influence(g, masks)
    for r, s in enumerate(subs):
        res = run_diffusion(g, s)
        assert set(np.flatnonzero(evg[r])) == res.evangelists
        assert set(np.flatnonzero(inf[r])) == res.influenced


@pytest.mark.parametrize("g", random_instances(40, seed=22, n_max=9))
def test_tie_break_and_monotone_budget(g):
    prev = -1
    for beta in range(g.n + 1):
        res = brute_force_mes(g, beta)
        assert res.objective >= prev
        prev = res.objective
        best = [s for k in range(beta + 1) for s in combinations(range(g.n), k)
                if len(run_diffusion(g, s).influenced) == res.objective]
        assert res.seed.members == min(best)
        assert len(run_diffusion(g, res.seed).influenced) == res.objective
    assert mes_profile(g, g.n)[-1] == g.n


@pytest.mark.parametrize("g", random_instances(40, seed=23, n_max=9))
def test_pes_self_consistency(g):
    direct = brute_force_pes(g)
    via = pes_via_binary_search(g, brute_force_mes)
    assert direct.objective == via.objective
    assert len(run_diffusion(g, via.seed).influenced) == g.n
