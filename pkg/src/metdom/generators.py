"""Named graph families and seeded random connected graphs.

Random graphs come from numpy's PCG64 generator seeded through
``numpy.random.SeedSequence``, whose output is stable across platforms and
numpy releases. Sweeps derive one child sequence per graph with
``SeedSequence.spawn`` so that graph ``i`` does not depend on how many graphs
were drawn before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import GraphError
from .graph import Graph

MAX_ATTEMPTS = 10_000


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with sides ``[0, s)`` and ``[s, s+t)``."""
    if s < 1 or t < 1:
        raise GraphError("complete bipartite graph needs s, t >= 1")
    return Graph(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star(t: int) -> Graph:
    """K_{1,t}; vertex 0 is the center."""
    if t < 1:
        raise GraphError("star needs t >= 1")
    return complete_bipartite(1, t)


def kneser_vertices(n: int, k: int) -> list[tuple[int, ...]]:
    """The k-subsets of {1..n} in lexicographic order (vertex i is entry i)."""
    return list(combinations(range(1, n + 1), k))


def kneser(n: int, k: int) -> Graph:
    """KG(n, k): k-subsets of {1..n}, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise GraphError(f"Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")
    sets = [frozenset(s) for s in kneser_vertices(n, k)]
    return Graph(len(sets), ((i, j) for i, j in combinations(range(len(sets)), 2)
                             if not sets[i] & sets[j]))


def petersen() -> Graph:
    return kneser(5, 2)


def subdivided_wheel(k: int) -> Graph:
    """Wheel with k rim vertices whose spokes are paths of length three.

    Numbering: hub 0; spoke ``i`` (``0 <= i < k``) is ``0 - 3i+1 - 3i+2 - 3i+3``
    with ``3i+3`` on the rim, and rim vertices form the cycle in spoke order.
    Order ``3k+1``, size ``4k``.
    """
    if k < 3:
        raise GraphError("subdivided wheel needs k >= 3")
    edges = []
    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a), (a, b), (b, c), (c, 3 * ((i + 1) % k) + 3)]
    return Graph(3 * k + 1, edges)


def random_connected(n: int, p: float, seed=None) -> Graph:
    """G(n, p) resampled until connected (at most 10,000 draws).

    ``seed`` may be an int, a ``SeedSequence`` or None.
    """
    if n < 1:
        raise GraphError("random graph needs n >= 1")
    if not 0 < p <= 1:
        raise GraphError(f"edge probability must lie in (0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    for _ in range(MAX_ATTEMPTS):
        keep = rng.random(len(pairs)) < p
        G = Graph(n, (e for e, k in zip(pairs, keep) if k))
        if G.connected:
            return G
    raise GraphError(f"no connected G({n}, {p}) in {MAX_ATTEMPTS} draws; try a larger p")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple
    seed: int | None = None

    def build(self) -> Graph:
        return make(self.family, *self.params, seed=self.seed)

    def __str__(self):
        text = " ".join([self.family, *map(str, self.params)])
        return text if self.seed is None else f"{text} --seed {self.seed}"


#: family name -> (constructor, parameter types)
FAMILIES = {
    "complete": (complete, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "path": (path, (int,)),
    "cycle": (cycle, (int,)),
    "star": (star, (int,)),
    "kneser": (kneser, (int, int)),
    "petersen": (petersen, ()),
    "subdivided_wheel": (subdivided_wheel, (int,)),
    "random_connected": (random_connected, (int, float)),
}


def parse_family(family: str, params, seed=None) -> FamilySpec:
    """Validate family name and arity and coerce parameter strings."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    _, types = FAMILIES[family]
    if len(params) != len(types):
        raise GraphError(f"{family} takes {len(types)} parameter(s), got {len(params)}")
    try:
        values = tuple(t(x) for t, x in zip(types, params))
    except ValueError as exc:
        raise GraphError(f"bad parameter for {family}: {exc}") from None
    return FamilySpec(family, values, seed)


def make(family: str, *params, seed=None) -> Graph:
    ctor, _ = FAMILIES[family]
    if family == "random_connected":
        return ctor(*params, seed=seed)
    return ctor(*params)
