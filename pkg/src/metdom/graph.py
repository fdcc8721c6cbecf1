"""Immutable simple graphs and their structural invariants.

Vertices are the integers ``0..n-1``. A :class:`Graph` computes its
all-pairs BFS distances once, at construction, since almost every query in
this package (resolving checks, diameter, bounds) reads them.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

import numpy as np

from .errors import DisconnectedGraphError, GraphError

#: Girth of a graph without cycles. Compares greater than every integer, so
#: every ``girth >= g`` gate is satisfied by forests.
ACYCLIC = math.inf


class Graph:
    """A finite simple graph on vertices ``0..n-1``.

    Duplicate edges are collapsed; self-loops and out-of-range endpoints
    raise :class:`GraphError`. Disconnected graphs may be built (``connected``
    is then False) but distance-based queries refuse them.
    """

    __slots__ = ("n", "m", "edges", "adjacency", "masks", "connected",
                 "_rows", "_dist", "_unreachable")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        adj = [set() for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adjacency = tuple(frozenset(a) for a in adj)
        self.edges = tuple((u, v) for u in range(n) for v in sorted(adj[u]) if u < v)
        self.m = len(self.edges)
        self.masks = tuple(sum(1 << v for v in a) for a in adj)
        self._rows, self._unreachable = _bfs_all(self.adjacency)
        self.connected = self._unreachable is None
        self._dist = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __setattr__(self, name, value):
        if hasattr(self, "_dist") and name != "_dist":
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Distance matrix as nested tuples; fast path for hot loops."""
        self.require_connected()
        return self._rows

    def require_connected(self):
        if self._unreachable is not None:
            raise DisconnectedGraphError(*self._unreachable)


def _bfs_all(adjacency):
    n = len(adjacency)
    rows = []
    unreachable = None
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        if s == 0 and -1 in dist:
            unreachable = (0, dist.index(-1))
        rows.append(tuple(dist))
    return tuple(rows), unreachable


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the corresponding :class:`Graph`."""
    return Graph(n, edges)


def is_connected(G: Graph) -> bool:
    return G.connected


def all_pairs_distances(G: Graph) -> np.ndarray:
    """Return the n-by-n matrix of hop distances (read-only int array).

    Raises :class:`DisconnectedGraphError` naming two mutually unreachable
    vertices when ``G`` is not connected.
    """
    G.require_connected()
    if G._dist is None:
        d = np.array(G._rows, dtype=np.int64)
        d.flags.writeable = False
        G._dist = d
    return G._dist


def diameter(G: Graph) -> int:
    return max(max(r) for r in G.rows)


def girth(G: Graph) -> int | float:
    """Length of a shortest cycle, or :data:`ACYCLIC` for forests.

    Runs a BFS from every root; a non-tree edge between levels ``a`` and
    ``b`` closes a walk of length ``a + b + 1`` through the root, and the
    minimum over all roots is exactly the girth.
    """
    best = ACYCLIC
    adj = G.adjacency
    for r in range(G.n):
        level = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if 2 * level[u] >= best:
                break
            for w in adj[u]:
                if w not in level:
                    level[w] = level[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, level[u] + level[w] + 1)
    return best


def degree_sequence(G: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasingly."""
    return tuple(sorted((len(a) for a in G.adjacency), reverse=True))


def max_degree(G: Graph) -> int:
    return max(len(a) for a in G.adjacency)


def min_degree(G: Graph) -> int:
    return min(len(a) for a in G.adjacency)


def _group_by(n, key):
    groups = {}
    for v in range(n):
        groups.setdefault(key(v), []).append(v)
    return sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])


def false_twin_partition(G: Graph) -> list[tuple[int, ...]]:
    """Partition of V into classes of equal open neighborhoods.

    Classes are sorted tuples, listed by smallest member.
    """
    return _group_by(G.n, lambda v: G.masks[v])


def true_twin_partition(G: Graph) -> list[tuple[int, ...]]:
    """Partition of V into classes of equal closed neighborhoods."""
    return _group_by(G.n, lambda v: G.masks[v] | (1 << v))


def twin_classes(G: Graph) -> list[tuple[int, ...]]:
    """Classes of the combined twin relation (equal open or closed neighborhoods).

    Any permutation inside one class is an automorphism, so no landmark
    outside a class can tell its members apart.
    """
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (false_twin_partition(G), true_twin_partition(G)):
        for cls in part:
            for v in cls[1:]:
                a, b = find(cls[0]), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return _group_by(G.n, find)


def bipartition(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-colour a connected graph by BFS; None if it has an odd cycle."""
    G.require_connected()
    colour = [-1] * G.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if colour[w] < 0:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    side0 = tuple(v for v in range(G.n) if colour[v] == 0)
    side1 = tuple(v for v in range(G.n) if colour[v] == 1)
    return side0, side1


def laplacian_matrix(G: Graph) -> np.ndarray:
    """L = D - A as a dense float array."""
    L = np.zeros((G.n, G.n))
    for u, v in G.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(G.n)] = [len(a) for a in G.adjacency]
    return L


def laplacian_max_eigenvalue(G: Graph) -> float:
    """Largest Laplacian eigenvalue, via LAPACK's symmetric solver."""
    if G.n < 2:
        raise GraphError("Laplacian spectral radius needs at least 2 vertices")
    return float(np.linalg.eigvalsh(laplacian_matrix(G))[-1])
