"""Metric representations, resolving-set checks and exact metric dimension."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AnomalyError, BudgetExceeded
from .graph import Graph, diameter, twin_classes


@dataclass(frozen=True)
class Check:
    """Outcome of a set predicate plus a counterexample when it fails.

    Truthiness follows ``ok``, so ``if is_resolving_set(G, W):`` works.
    """

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class MetricBasis:
    beta: int
    basis: tuple[int, ...]
    examined: int = 0


def _vertices(G: Graph, W: Iterable[int]) -> list[int]:
    W = [int(w) for w in W]
    for w in W:
        if not 0 <= w < G.n:
            raise ValueError(f"vertex {w} not in graph of order {G.n}")
    return W


def metric_representation(G: Graph, v: int, W: Sequence[int]) -> tuple[int, ...]:
    """Distances from ``v`` to each vertex of ``W``, in ``W``'s order."""
    W = _vertices(G, W)
    if not W:
        raise ValueError("metric representation needs a non-empty W")
    row = G.rows[v]
    return tuple(row[w] for w in W)


def is_resolving_set(G: Graph, W: Iterable[int]) -> Check:
    """Whether ``W`` resolves ``G``.

    Only vertices outside ``W`` are compared; each member of ``W`` is the
    unique vertex at distance 0 from itself. On failure the witness is the
    first colliding pair ``(u, v)``, ``u < v``, in vertex order.
    """
    W = _vertices(G, W)
    rows = G.rows
    inside = set(W)
    seen = {}
    for v in range(G.n):
        if v in inside:
            continue
        row = rows[v]
        key = tuple(row[w] for w in W)
        if key in seen:
            return Check(False, (seen[key], v))
        seen[key] = v
    return Check(True)


def diametral_resolving_set(G: Graph) -> tuple[int, ...]:
    """A resolving set of size ``n - diam(G)``.

    Take a shortest path ``v0 .. vd`` between two vertices at maximum
    distance and drop ``v1 .. vd``; ``v0`` alone separates the dropped
    vertices, and everything else is in the set.
    """
    rows = G.rows
    d = diameter(G)
    if d == 0:
        return ()
    u = next(x for x in range(G.n) if max(rows[x]) == d)
    v = rows[u].index(d)
    path = []
    x = v
    while x != u:
        path.append(x)
        x = min(y for y in G.adjacency[x] if rows[u][y] == rows[u][x] - 1)
    dropped = set(path)
    return tuple(x for x in range(G.n) if x not in dropped)


def metric_dimension(G: Graph, budget: int | None = None, prune: bool = True) -> MetricBasis:
    """Exact metric dimension with the lexicographically smallest basis.

    Sizes are tried in increasing order and, within a size, candidate sets in
    lexicographic order, so the first resolving set found is canonical.
    With ``prune`` the search keeps all but the largest member of every twin
    class (any resolving set must contain them, and swapping twins is an
    automorphism) and only branches over one representative per class.

    ``budget`` caps the number of search nodes; when it runs out
    :class:`BudgetExceeded` is raised carrying the ``n - diam`` certificate.
    """
    G.require_connected()
    n = G.n
    if n == 1:
        return MetricBasis(0, ())
    rows = G.rows
    width = diameter(G) + 1
    if prune:
        classes = twin_classes(G)
    else:
        classes = [(v,) for v in range(n)]
    forced = sorted(v for c in classes for v in c[:-1])
    reps = sorted(c[-1] for c in classes)
    certificate = diametral_resolving_set(G)
    upper = len(certificate)

    base = [0] * n
    for w in forced:
        row = rows[w]
        base = [a * width + row[i] for i, a in enumerate(base)]
    columns = {w: rows[w] for w in reps}
    examined = 0

    def search(start, labels, need):
        nonlocal examined
        examined += 1
        if budget is not None and examined > budget:
            raise BudgetExceeded("metric dimension", upper, certificate, examined - 1)
        if need == 0:
            return () if len(set(labels)) == n else None
        if len(set(labels)) * width ** need < n:
            return None
        for j in range(start, len(reps) - need + 1):
            w = reps[j]
            col = columns[w]
            found = search(j + 1, [a * width + col[i] for i, a in enumerate(labels)], need - 1)
            if found is not None:
                return (w,) + found
        return None

    for k in range(max(len(forced), 1), upper + 1):
        chosen = search(0, base, k - len(forced))
        if chosen is not None:
            return MetricBasis(k, tuple(sorted(forced + list(chosen))), examined)
    raise AnomalyError(f"no resolving set of size <= {upper} found on {G!r}")
