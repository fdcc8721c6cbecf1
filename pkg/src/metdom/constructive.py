"""From a minimum dominating set to a resolving set.

A minimum dominating set is first rid of false-twin pairs, then of single
vertices, by swapping one member at a time for an outside neighbor. Its
complement then resolves the graph, which gives ``beta <= n - gamma``.
Equality holds exactly for complete graphs and complete bipartite graphs
with both sides of size at least two; :func:`classify_equality` detects that
structure and cross-checks it against the exact solvers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .domination import (
    domination_number,
    is_dominating_set,
    is_single_vertex,
    private_neighbors,
)
from .errors import AnomalyError, GraphError
from .graph import Graph, bipartition
from .resolve import is_resolving_set, metric_dimension

FALSE_TWIN = "false-twin"
SINGLE_VERTEX = "single-vertex"


@dataclass(frozen=True)
class Swap:
    removed: int
    inserted: int
    reason: str


@dataclass
class NormalizationTrace:
    initial_set: tuple[int, ...]
    steps: list[Swap] = field(default_factory=list)

    @property
    def final_set(self) -> tuple[int, ...]:
        return self.sets()[-1]

    def sets(self) -> list[tuple[int, ...]]:
        """Every intermediate set, starting with the input."""
        current = set(self.initial_set)
        out = [tuple(sorted(current))]
        for s in self.steps:
            current.discard(s.removed)
            current.add(s.inserted)
            out.append(tuple(sorted(current)))
        return out

    def __add__(self, other: NormalizationTrace) -> NormalizationTrace:
        if other.initial_set != self.final_set:
            raise ValueError("traces do not chain")
        return NormalizationTrace(self.initial_set, self.steps + other.steps)


@dataclass(frozen=True)
class Construction:
    dominating_set: tuple[int, ...]
    resolving_set: tuple[int, ...]
    trace: NormalizationTrace


COMPLETE = "CompleteGraph"
COMPLETE_BIPARTITE = "CompleteBipartite"
STRICT = "StrictInequality"


@dataclass(frozen=True)
class Classification:
    verdict: str
    params: tuple[int, ...]
    beta: int
    gamma: int

    def __str__(self):
        if self.params:
            return f"{self.verdict}({', '.join(map(str, self.params))})"
        return self.verdict


def false_twin_pairs(G: Graph, S: Iterable[int]) -> list[tuple[int, int]]:
    """Pairs ``u < v`` inside ``S`` with ``N(u) == N(v)``, in lexicographic order."""
    S = sorted(S)
    return [(u, v) for u, v in combinations(S, 2) if G.masks[u] == G.masks[v]]


def single_vertices(G: Graph, S: Iterable[int]) -> list[int]:
    S = sorted(S)
    return [u for u in S if is_single_vertex(G, S, u)]


def inner_edge_count(G: Graph, S: Iterable[int]) -> int:
    """Number of edges with both ends in ``S``."""
    mask = sum(1 << v for v in S)
    return sum((G.masks[v] & mask).bit_count() for v in S) // 2


def _check_input(G, dominating, verify_minimum):
    G.require_connected()
    dominating = tuple(sorted(set(dominating)))
    check = is_dominating_set(G, dominating)
    if not check:
        raise GraphError(f"{dominating} is not dominating: vertex {check.witness} uncovered")
    if verify_minimum:
        gamma = domination_number(G).gamma
        if gamma < len(dominating):
            raise GraphError(f"{dominating} is not minimum: domination number is {gamma}")
    return dominating


def _outside_neighbor(G, current, u):
    candidates = [x for x in sorted(G.adjacency[u]) if x not in current]
    if not candidates:
        raise AnomalyError(f"vertex {u} has no neighbor outside {sorted(current)}")
    return candidates[0]


def eliminate_false_twins(G: Graph, dominating: Iterable[int],
                          verify_minimum: bool = False) -> NormalizationTrace:
    """Swap members of a minimum dominating set until it holds no false-twin pair.

    While some pair ``u < v`` shares an open neighborhood (smallest pair
    first), ``u`` is replaced by its smallest neighbor outside the set.
    Minimality guarantees each swap strictly lowers the twin-pair count; a
    swap that does not is reported as :class:`AnomalyError`.
    """
    start = _check_input(G, dominating, verify_minimum)
    trace = NormalizationTrace(start)
    current = set(start)
    pairs = false_twin_pairs(G, current)
    while pairs:
        if len(trace.steps) >= G.n ** 2:
            raise AnomalyError("false-twin elimination exceeded n^2 swaps")
        u, _ = pairs[0]
        x = _outside_neighbor(G, current, u)
        current.discard(u)
        current.add(x)
        trace.steps.append(Swap(u, x, FALSE_TWIN))
        after = false_twin_pairs(G, current)
        if len(after) >= len(pairs):
            raise AnomalyError(f"swap {u}->{x} did not reduce false-twin pairs ({len(pairs)} -> {len(after)})")
        pairs = after
    return trace


def ensure_private_neighbors(G: Graph, dominating: Iterable[int],
                             verify_minimum: bool = False) -> NormalizationTrace:
    """Swap out single vertices until every member has a private neighbor.

    The smallest single vertex ``u`` is replaced by its smallest neighbor
    ``x`` outside the set; ``u`` then becomes a private neighbor of ``x``.

    The number of single vertices need not drop at every swap: on the tree
    with edges 0-3, 0-5, 1-4, 2-3, 3-4 and set {0, 1, 2}, swapping 2 for 3
    steals the only private neighbor of 1. What does strictly grow is the
    number of edges inside the set, since ``u`` had none there and ``x`` has
    at least one (otherwise it would have been private to ``u``). That count
    is the termination measure checked here.

    A lone vertex has nobody to be private to, so ``G`` needs ``n >= 2``.
    """
    if G.n < 2:
        raise GraphError("private neighbors need a graph with at least 2 vertices")
    start = _check_input(G, dominating, verify_minimum)
    trace = NormalizationTrace(start)
    current = set(start)
    singles = single_vertices(G, current)
    edges = inner_edge_count(G, current)
    while singles:
        if len(trace.steps) >= G.n ** 2:
            raise AnomalyError("single-vertex removal exceeded n^2 swaps")
        u = singles[0]
        x = _outside_neighbor(G, current, u)
        current.discard(u)
        current.add(x)
        trace.steps.append(Swap(u, x, SINGLE_VERTEX))
        after = inner_edge_count(G, current)
        if after <= edges:
            raise AnomalyError(f"swap {u}->{x} did not add an edge inside the set ({edges} -> {after})")
        edges = after
        singles = single_vertices(G, current)
    return trace


def resolving_from_dominating(G: Graph, budget: int | None = None,
                              private: bool = True) -> Construction:
    """Build a resolving set of size ``n - gamma`` from a minimum dominating set.

    ``private=False`` skips the single-vertex pass and uses the twin-free set
    directly; the complement is still expected to resolve. The pass is also
    skipped on K_1, whose empty complement resolves trivially.
    """
    G.require_connected()
    gamma_set = domination_number(G, budget=budget).dominating_set
    trace = eliminate_false_twins(G, gamma_set)
    if private and G.n > 1:
        trace = trace + ensure_private_neighbors(G, trace.final_set)
    final = trace.final_set
    inside = set(final)
    W = tuple(v for v in range(G.n) if v not in inside)
    check = is_resolving_set(G, W)
    if not check:
        raise AnomalyError(f"complement of {final} does not resolve: {check.witness} collide")
    return Construction(final, W, trace)


def structural_class(G: Graph) -> tuple[str, tuple[int, ...]]:
    """Recognise K_n and K_{s,t} (s, t >= 2) from adjacency alone."""
    G.require_connected()
    n = G.n
    if G.m == n * (n - 1) // 2:
        return COMPLETE, (n,)
    sides = bipartition(G)
    if sides is not None:
        s, t = (len(x) for x in sides)
        if s >= 2 and t >= 2 and G.m == s * t:
            return COMPLETE_BIPARTITE, (s, t)
    return STRICT, ()


def classify_equality(G: Graph, budget: int | None = None) -> Classification:
    """Decide whether ``beta = n - gamma`` and check the answer two ways.

    The verdict comes from the structure of ``G``; the exact metric dimension
    and domination number must agree with it, otherwise :class:`AnomalyError`.
    """
    verdict, params = structural_class(G)
    beta = metric_dimension(G, budget=budget).beta
    gamma = domination_number(G, budget=budget).gamma
    tight = beta == G.n - gamma
    if tight != (verdict != STRICT) or beta > G.n - gamma:
        raise AnomalyError(f"{verdict}{params} but beta={beta}, n-gamma={G.n - gamma}")
    return Classification(verdict, params, beta, gamma)


def private_neighbor_map(G: Graph, dominating: Iterable[int]) -> dict[int, tuple[int, ...]]:
    dominating = tuple(sorted(dominating))
    return {u: private_neighbors(G, dominating, u) for u in dominating}
