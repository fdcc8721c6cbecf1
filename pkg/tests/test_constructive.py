import numpy as np
import pytest

from metdom import generators as gen
from metdom.constructive import (
    COMPLETE,
    COMPLETE_BIPARTITE,
    FALSE_TWIN,
    SINGLE_VERTEX,
    STRICT,
    NormalizationTrace,
    Swap,
    classify_equality,
    eliminate_false_twins,
    ensure_private_neighbors,
    false_twin_pairs,
    inner_edge_count,
    resolving_from_dominating,
    single_vertices,
    structural_class,
)
from metdom.domination import domination_number, is_dominating_set, private_neighbors
from metdom.errors import GraphError
from metdom.graph import Graph
from metdom.resolve import is_resolving_set, metric_dimension
from metdom.sweep import connected_labeled_graphs, trace_violations


def test_eliminate_c4():
    trace = eliminate_false_twins(gen.cycle(4), [0, 2])
    assert trace.steps == [Swap(0, 1, FALSE_TWIN)]
    assert trace.final_set == (1, 2)


def test_eliminate_k23():
    G = gen.complete_bipartite(2, 3)
    trace = eliminate_false_twins(G, [0, 1])
    assert len(trace.steps) == 1
    assert trace.steps[0].removed == 0 and trace.steps[0].inserted in (2, 3, 4)
    assert not false_twin_pairs(G, trace.final_set)
    assert is_dominating_set(G, trace.final_set)


def test_eliminate_twin_free_is_noop():
    trace = eliminate_false_twins(gen.path(4), [1, 2])
    assert trace.steps == [] and trace.final_set == (1, 2)


def test_eliminate_rejects_bad_input():
    with pytest.raises(GraphError):
        eliminate_false_twins(gen.path(5), [0])
    with pytest.raises(GraphError):
        eliminate_false_twins(gen.path(4), [0, 2, 3], verify_minimum=True)
    eliminate_false_twins(gen.path(4), [1, 2], verify_minimum=True)


def test_private_c4_noop():
    assert ensure_private_neighbors(gen.cycle(4), [1, 2]).steps == []


def test_private_c4_forced_twins():
    G = gen.cycle(4)
    trace = ensure_private_neighbors(G, [0, 2])
    final = trace.final_set
    assert all(s.reason == SINGLE_VERTEX for s in trace.steps)
    assert G.has_edge(*final)
    assert all(private_neighbors(G, final, u) for u in final)


def test_private_complete_noop():
    assert ensure_private_neighbors(gen.complete(5), [0]).steps == []


def test_private_swap_can_create_a_new_single_vertex():
    # The first swap fixes vertex 2 but leaves 1 single; termination comes
    # from the growing number of edges inside the set.
    G = Graph(6, [(0, 3), (0, 5), (1, 4), (2, 3), (3, 4)])
    assert domination_number(G).dominating_set == (0, 1, 2)
    trace = ensure_private_neighbors(G, [0, 1, 2])
    sets = trace.sets()
    assert [len(single_vertices(G, S)) for S in sets] == [1, 1, 0]
    assert [inner_edge_count(G, S) for S in sets] == [0, 1, 2]
    assert trace.final_set == (0, 3, 4)


def test_private_needs_two_vertices():
    with pytest.raises(GraphError):
        ensure_private_neighbors(gen.complete(1), [0])


def test_trace_chaining():
    a = NormalizationTrace((0, 2), [Swap(0, 1, FALSE_TWIN)])
    b = NormalizationTrace((1, 2), [])
    assert (a + b).final_set == (1, 2)
    with pytest.raises(ValueError):
        b + a


@pytest.mark.parametrize("G, n_minus_gamma, beta", [
    (gen.complete(5), 4, 4),
    (gen.cycle(6), 4, 2),
    (gen.petersen(), 7, 3),
])
def test_resolving_from_dominating_examples(G, n_minus_gamma, beta):
    built = resolving_from_dominating(G)
    assert len(built.resolving_set) == n_minus_gamma
    assert is_resolving_set(G, built.resolving_set)
    assert metric_dimension(G).beta == beta


def test_resolving_from_dominating_k1():
    built = resolving_from_dominating(gen.complete(1))
    assert built.dominating_set == (0,) and built.resolving_set == ()


def test_pipeline_invariants_exhaustive():
    for G in connected_labeled_graphs(6):
        gamma = domination_number(G).gamma
        built = resolving_from_dominating(G)
        assert len(built.resolving_set) == G.n - gamma
        assert is_resolving_set(G, built.resolving_set)
        assert trace_violations(G, built.trace) == []
        twin_steps = sum(s.reason == FALSE_TWIN for s in built.trace.steps)
        assert twin_steps <= len(false_twin_pairs(G, built.trace.initial_set))


def test_twin_free_complement_resolves_without_private_pass():
    rng = np.random.default_rng(10)
    graphs = list(connected_labeled_graphs(5))
    graphs += [gen.random_connected(int(rng.integers(6, 15)), 0.3, seed=i) for i in range(300)]
    for G in graphs:
        built = resolving_from_dominating(G, private=False)
        assert all(s.reason == FALSE_TWIN for s in built.trace.steps)
        assert is_resolving_set(G, built.resolving_set)


@pytest.mark.parametrize("G, verdict, params, beta, gamma", [
    (gen.complete(7), COMPLETE, (7,), 6, 1),
    (gen.complete_bipartite(2, 3), COMPLETE_BIPARTITE, (2, 3), 3, 2),
    (gen.complete_bipartite(2, 2), COMPLETE_BIPARTITE, (2, 2), 2, 2),
    (gen.star(4), STRICT, (), 3, 1),
    (gen.petersen(), STRICT, (), 3, 3),
    (gen.path(2), COMPLETE, (2,), 1, 1),
    (gen.complete(1), COMPLETE, (1,), 0, 1),
])
def test_classify_examples(G, verdict, params, beta, gamma):
    c = classify_equality(G)
    assert (c.verdict, c.params, c.beta, c.gamma) == (verdict, params, beta, gamma)


def test_classification_str():
    assert str(classify_equality(gen.complete_bipartite(2, 2))) == "CompleteBipartite(2, 2)"
    assert str(classify_equality(gen.path(4))) == "StrictInequality"


def test_structural_class_side_order():
    # sides are reported in BFS colour order from vertex 0
    assert structural_class(gen.complete_bipartite(3, 2)) == (COMPLETE_BIPARTITE, (3, 2))
    assert structural_class(gen.cycle(6))[0] == STRICT


def test_equality_biconditional_random():
    rng = np.random.default_rng(11)
    for i in range(300):
        G = gen.random_connected(int(rng.integers(7, 13)), float(rng.uniform(0.2, 0.9)), seed=i)
        c = classify_equality(G)
        assert (c.beta == G.n - c.gamma) == (c.verdict != STRICT)
        assert c.beta <= G.n - c.gamma
