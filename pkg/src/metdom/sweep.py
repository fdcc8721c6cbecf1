"""Property sweep: check ``beta <= n - gamma``, the equality characterisation,
the constructive pipeline and every bound on many graphs.

Graphs come from two sources, always in the same order: every connected
labeled graph up to a given order (edge subsets enumerated as bitmasks),
then seeded random connected graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .bounds import bound_diameter, bound_domination, corollary_bounds, gamma_lower_bounds
from .constructive import (
    FALSE_TWIN,
    STRICT,
    false_twin_pairs,
    resolving_from_dominating,
    single_vertices,
    structural_class,
)
from .domination import domination_number, is_dominating_set
from .errors import AnomalyError
from .generators import random_connected
from .graph import Graph
from .resolve import is_resolving_set, metric_dimension

CATEGORIES = ("domination_bound", "equality", "construction", "bounds")


def connected_labeled_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All connected graphs on ``{0..n-1}`` for ``min_n <= n <= max_n``.

    Within one order the edge set is the binary expansion of a counter over
    the pairs in lexicographic order, so enumeration order is fixed.
    """
    for n in range(min_n, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
            if G.connected:
                yield G


def random_graphs(count: int, min_n: int, max_n: int, p: float, seed: int) -> Iterator[tuple[int, Graph]]:
    """``count`` random connected graphs; yields ``(order, graph)``.

    The orders are drawn from the root seed; graph ``i`` uses the ``i``-th
    spawned child seed.
    """
    root = np.random.SeedSequence(seed)
    sizes = np.random.Generator(np.random.PCG64(root)).integers(min_n, max_n + 1, size=count)
    for n, child in zip(sizes, root.spawn(count)):
        yield int(n), random_connected(int(n), p, seed=child)


def trace_violations(G: Graph, trace) -> list[str]:
    """Everything wrong with a normalization trace (empty when it is sound)."""
    problems = []
    sets = trace.sets()
    size = len(sets[0])
    for i, S in enumerate(sets):
        if len(S) != size:
            problems.append(f"step {i}: size {len(S)} != {size}")
        if not is_dominating_set(G, S):
            problems.append(f"step {i}: {S} not dominating")
    for i, step in enumerate(trace.steps):
        if step.reason == FALSE_TWIN:
            before = len(false_twin_pairs(G, sets[i]))
            after = len(false_twin_pairs(G, sets[i + 1]))
            if after >= before:
                problems.append(f"step {i + 1}: false-twin pairs {before} -> {after}")
    final = sets[-1]
    if G.n > 1 and single_vertices(G, final):
        problems.append(f"final set {final} has single vertices")
    if false_twin_pairs(G, final):
        problems.append(f"final set {final} has false twins")
    return problems


@dataclass
class GraphCheck:
    source: str
    n: int
    m: int
    beta: int
    gamma: int
    verdict: str
    violations: dict[str, list[str]] = field(default_factory=dict)


def check_graph(G: Graph, source: str = "") -> GraphCheck:
    """Run every check on one connected graph; never raises on a violation."""
    n = G.n
    beta = metric_dimension(G).beta
    gamma = domination_number(G).gamma
    verdict, params = structural_class(G)
    found = {c: [] for c in CATEGORIES}

    if beta > n - gamma:
        found["domination_bound"].append(f"beta={beta} > n-gamma={n - gamma}")

    tight = beta == n - gamma
    if tight != (verdict != STRICT):
        found["equality"].append(f"{verdict}{params}: beta={beta}, n-gamma={n - gamma}")

    try:
        built = resolving_from_dominating(G)
    except AnomalyError as exc:
        found["construction"].append(f"anomaly: {exc}")
    else:
        if not is_resolving_set(G, built.resolving_set):
            found["construction"].append(f"{built.resolving_set} does not resolve")
        if len(built.resolving_set) != n - gamma:
            found["construction"].append(f"|W|={len(built.resolving_set)} != n-gamma={n - gamma}")
        found["construction"] += trace_violations(G, built.trace)

    uppers = [bound_diameter(G), bound_domination(G, gamma)] + corollary_bounds(G)
    for e in uppers:
        if e.applicable and e.value < beta:
            found["bounds"].append(f"upper bound {e.name}={e.value} < beta={beta}")
    for e in gamma_lower_bounds(G):
        if e.applicable and e.value > gamma:
            found["bounds"].append(f"lower bound {e.name}={e.value} > gamma={gamma}")

    return GraphCheck(source, n, G.m, beta, gamma, str(verdict),
                      {k: v for k, v in found.items() if v})


@dataclass
class SweepResult:
    graphs: int = 0
    exhaustive: int = 0
    random: int = 0
    equality_cases: int = 0
    violations: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CATEGORIES})
    failures: list[GraphCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def as_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "exhaustive": self.exhaustive,
            "random": self.random,
            "equality_cases": self.equality_cases,
            "violations": dict(self.violations),
            "failures": [
                {"source": f.source, "n": f.n, "m": f.m, "beta": f.beta, "gamma": f.gamma,
                 "verdict": f.verdict, "violations": f.violations}
                for f in self.failures
            ],
        }


def verify(count: int = 1000, min_n: int = 7, max_n: int = 18, p: float = 0.35,
           seed: int = 0, exhaustive_upto: int = 6, on_graph=None) -> SweepResult:
    """Exhaustive sweep up to ``exhaustive_upto`` vertices plus ``count`` random graphs.

    ``on_graph(index, check)`` is called after each graph, in enumeration order.
    """
    result = SweepResult()

    def record(check):
        result.graphs += 1
        if check.verdict != STRICT:
            result.equality_cases += 1
        for k in check.violations:
            result.violations[k] += 1
        if check.violations:
            result.failures.append(check)
        if on_graph is not None:
            on_graph(result.graphs - 1, check)

    for i, G in enumerate(connected_labeled_graphs(exhaustive_upto)):
        record(check_graph(G, f"exhaustive n={G.n} #{i}"))
        result.exhaustive += 1
    if count:
        for i, (n, G) in enumerate(random_graphs(count, min_n, max_n, p, seed)):
            record(check_graph(G, f"random seed={seed} #{i} n={n}"))
            result.random += 1
    return result
