import math

import numpy as np
import pytest

from metdom import generators as gen
from metdom.domination import (
    domination_number,
    greedy_dominating_set,
    is_dominating_set,
    is_single_vertex,
    private_neighbors,
)
from metdom.errors import BudgetExceeded
from metdom.sweep import connected_labeled_graphs

import oracles


def test_dominating_examples():
    assert is_dominating_set(gen.complete(5), [0])
    assert is_dominating_set(gen.cycle(6), [0, 3])
    check = is_dominating_set(gen.path(5), [0])
    assert not check
    # 2, 3 and 4 are all undominated; the smallest is reported
    assert check.witness == 2
    assert not is_dominating_set(gen.path(5), [0, 1]).ok


@pytest.mark.parametrize("G, gamma", [
    (gen.complete(6), 1),
    (gen.cycle(6), 2),
    (gen.subdivided_wheel(6), 7),
    (gen.complete_bipartite(2, 3), 2),
    (gen.complete(1), 1),
])
def test_domination_examples(G, gamma):
    res = domination_number(G)
    assert res.gamma == gamma
    assert len(res.dominating_set) == gamma
    assert is_dominating_set(G, res.dominating_set)


def test_c6_needs_two():
    assert oracles.brute_domination_number(gen.cycle(6))[0] == 2


def test_exhaustive_against_unpruned_oracle():
    for G in connected_labeled_graphs(6):
        gamma, first = oracles.brute_domination_number(G)
        res = domination_number(G)
        assert (res.gamma, res.dominating_set) == (gamma, first)


def test_random_against_unpruned_oracle():
    rng = np.random.default_rng(7)
    for i in range(300):
        G = gen.random_connected(int(rng.integers(7, 11)), float(rng.uniform(0.15, 0.7)), seed=i)
        assert domination_number(G).dominating_set == oracles.brute_domination_number(G)[1]


@pytest.mark.parametrize("n", range(3, 16))
def test_paths_and_cycles(n):
    assert domination_number(gen.path(n)).gamma == math.ceil(n / 3)
    assert domination_number(gen.cycle(n)).gamma == math.ceil(n / 3)


def test_greedy_is_dominating_and_upper_bound():
    rng = np.random.default_rng(8)
    for i in range(200):
        G = gen.random_connected(int(rng.integers(2, 20)), 0.3, seed=i)
        S = greedy_dominating_set(G)
        assert is_dominating_set(G, S)
        assert len(S) >= domination_number(G).gamma


def test_budget():
    G = gen.subdivided_wheel(8)
    with pytest.raises(BudgetExceeded) as info:
        domination_number(G, budget=20)
    assert info.value.upper_bound == len(greedy_dominating_set(G))
    assert is_dominating_set(G, info.value.best)


def test_private_neighbors_examples():
    assert private_neighbors(gen.star(4), [0], 0) == (1, 2, 3, 4)
    assert private_neighbors(gen.cycle(4), [0, 2], 0) == ()
    assert private_neighbors(gen.path(4), [1, 2], 1) == (0,)


def test_private_neighbors_requires_membership():
    with pytest.raises(ValueError):
        private_neighbors(gen.path(4), [1, 2], 0)
    with pytest.raises(ValueError):
        is_single_vertex(gen.path(4), [1, 2], 3)


def test_single_vertex_examples():
    assert is_single_vertex(gen.cycle(4), [0, 2], 0)
    assert not is_single_vertex(gen.star(4), [0], 0)
    assert not is_single_vertex(gen.path(4), [1, 2], 1)


def test_minimum_set_members_are_private_or_single():
    rng = np.random.default_rng(9)
    graphs = list(connected_labeled_graphs(5))
    graphs += [gen.random_connected(int(rng.integers(6, 11)), 0.35, seed=i) for i in range(300)]
    for G in graphs:
        S = domination_number(G).dominating_set
        for u in S:
            assert private_neighbors(G, S, u) or is_single_vertex(G, S, u)
