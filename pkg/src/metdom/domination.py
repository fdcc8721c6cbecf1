"""Dominating sets: verification, exact domination number, private neighbors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AnomalyError, BudgetExceeded
from .graph import Graph, max_degree
from .resolve import Check


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    dominating_set: tuple[int, ...]
    examined: int = 0


def _closed_masks(G: Graph) -> list[int]:
    return [m | (1 << v) for v, m in enumerate(G.masks)]


def is_dominating_set(G: Graph, S: Iterable[int]) -> Check:
    """Whether every vertex outside ``S`` has a neighbor in ``S``.

    The witness on failure is the smallest undominated vertex.
    """
    covered = 0
    closed = _closed_masks(G)
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} not in graph of order {G.n}")
        covered |= closed[v]
    missing = ~covered & ((1 << G.n) - 1)
    if missing:
        return Check(False, (missing & -missing).bit_length() - 1)
    return Check(True)


def greedy_dominating_set(G: Graph) -> tuple[int, ...]:
    """Repeatedly take the vertex covering most undominated vertices (lowest index on ties)."""
    closed = _closed_masks(G)
    full = (1 << G.n) - 1
    covered = 0
    chosen = []
    while covered != full:
        gain = [((c & ~covered).bit_count(), -v) for v, c in enumerate(closed)]
        _, v = max(gain)
        chosen.append(-v)
        covered |= closed[-v]
    return tuple(sorted(chosen))


def domination_number(G: Graph, budget: int | None = None) -> DominationResult:
    """Exact domination number with the lexicographically smallest minimum set.

    Sizes run from ``ceil(n / (1 + Delta))`` up to the greedy solution size.
    Within a size, subsets are visited in lexicographic order; a branch is cut
    when the lowest undominated vertex has no neighbor left to pick or when the
    remaining picks cannot cover what is left.
    """
    G.require_connected()
    n = G.n
    closed = _closed_masks(G)
    full = (1 << n) - 1
    greedy = greedy_dominating_set(G)
    reach = max_degree(G) + 1
    last = [max(c.bit_length() - 1, 0) for c in closed]
    examined = 0

    def search(start, covered, need):
        nonlocal examined
        examined += 1
        if budget is not None and examined > budget:
            raise BudgetExceeded("domination number", len(greedy), greedy, examined - 1)
        if covered == full:
            return ()
        if need == 0:
            return None
        rest = full & ~covered
        if rest.bit_count() > need * reach:
            return None
        u = (rest & -rest).bit_length() - 1
        stop = min(n - need, last[u])
        for v in range(start, stop + 1):
            found = search(v + 1, covered | closed[v], need - 1)
            if found is not None:
                return (v,) + found
        return None

    lower = max(1, -(-n // reach))
    for k in range(lower, len(greedy) + 1):
        chosen = search(0, 0, k)
        if chosen is not None:
            if len(chosen) != k:
                raise AnomalyError(f"dominating set of size {len(chosen)} found while searching size {k}")
            return DominationResult(k, chosen, examined)
    raise AnomalyError(f"greedy set {greedy} not recovered by exact search")


def private_neighbors(G: Graph, dominating: Iterable[int], u: int) -> tuple[int, ...]:
    """Vertices outside the set whose only neighbor inside it is ``u``."""
    inside = set(dominating)
    if u not in inside:
        raise ValueError(f"vertex {u} is not in the dominating set")
    return tuple(sorted(
        x for x in G.adjacency[u]
        if x not in inside and not any(y in inside for y in G.adjacency[x] if y != u)
    ))


def is_single_vertex(G: Graph, dominating: Iterable[int], u: int) -> bool:
    """Whether ``u`` has no private neighbor and no neighbor inside the set.

    This is the one place the notion is defined; the normalization in
    :mod:`metdom.constructive` relies on it.
    """
    inside = set(dominating)
    if u not in inside:
        raise ValueError(f"vertex {u} is not in the dominating set")
    if any(x in inside for x in G.adjacency[u]):
        return False
    return not private_neighbors(G, inside, u)
