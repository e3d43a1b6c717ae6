import random

import pytest

from conftest import k4_all, path3
from evangelize import Graph, PreconditionError, brute_force_mes, run_diffusion, solve_mes_clique
from evangelize.clique import swap_uninfluenceable, top_by_evangelization


def clique(n, t_inf, t_evg):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], t_inf, t_evg)


def test_k4_swap_example():
    g = clique(4, [1, 1, 1, 4], [4, 1, 1, 4])
    assert top_by_evangelization(range(4), g.t_evg, 1) == [0]
    assert len(run_diffusion(g, [0]).evangelists) == 3
    res = solve_mes_clique(g, 1, debug=True)
    assert res.objective == 4 == brute_force_mes(g, 1).objective
    assert res.seed.members == (3,)
    assert res.explored == 2


def test_small_cases():
    assert solve_mes_clique(k4_all(1, 1).with_thresholds([1] * 4, [1] * 4), 1).objective == 4
    assert solve_mes_clique(clique(3, [1] * 3, [1] * 3), 1).objective == 3
    assert solve_mes_clique(clique(6, [2] * 6, [3] * 6), 6).objective == 6
    assert solve_mes_clique(clique(5, [1] * 5, [2] * 5), 0).objective == 0


def test_not_complete():
    with pytest.raises(PreconditionError):
        solve_mes_clique(path3(), 1)


def test_swap_helper_frozen_bar():
    new, swaps = swap_uninfluenceable([0, 1, 2], [3, 4], [0, 5, 1, 9, 9], 2)
    assert swaps == [(0, 3), (2, 4)]
    assert new == [1, 3, 4]


def _random_cliques(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 10)
        te = [rng.randint(0, n) for _ in range(n)]
        ti = [rng.randint(0, e) for e in te]
        yield clique(n, ti, te)


@pytest.mark.parametrize("g", list(_random_cliques(120, 5)))
def test_matches_oracle_with_post_loop_invariant(g):
    for beta in range(g.n + 1):
        res = solve_mes_clique(g, beta, debug=True)
        assert res.objective == brute_force_mes(g, beta).objective
        x = top_by_evangelization(range(g.n), g.t_evg, beta)
        eta = len(run_diffusion(g, x).evangelists)
        s = set(res.seed)
        low_in = any(g.t_inf[u] <= eta for u in s)
        high_out = any(g.t_inf[v] > eta for v in range(g.n) if v not in s)
        assert not (low_in and high_out)
