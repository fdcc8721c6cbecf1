"""Lower bounds on the domination number and the upper bounds on metric
dimension they induce through ``beta <= n - gamma``.

Each bound is a :class:`BoundEntry` that records its gate (girth and degree
conditions) whether or not the gate holds. Forests pass every girth gate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .domination import domination_number
from .errors import AnomalyError, BudgetExceeded
from .graph import (
    Graph,
    degree_sequence,
    diameter,
    girth,
    laplacian_max_eigenvalue,
    max_degree,
    min_degree,
)
from .resolve import metric_dimension

#: Slack subtracted before taking ceilings of floating-point ratios.
CEIL_SLACK = 1e-6


@dataclass(frozen=True)
class BoundEntry:
    name: str
    condition: str
    applicable: bool
    value: int | None = None
    real_value: float | None = None


@dataclass
class BoundReport:
    entries: list[BoundEntry]
    beta_exact: int | None = None
    gamma_exact: int | None = None
    timeouts: dict[str, int] = field(default_factory=dict)

    @property
    def tightest(self) -> str | None:
        """Name of the smallest applicable upper bound on beta (first on ties)."""
        live = [e for e in self.entries if e.applicable]
        if not live:
            return None
        return min(live, key=lambda e: e.value).name

    def __getitem__(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def _ceil(x: float) -> int:
    return math.ceil(x - CEIL_SLACK)


def degree_sum_threshold(degrees) -> int:
    """Smallest ``k`` with ``k + d_1 + ... + d_k >= n`` for non-increasing degrees."""
    n = len(degrees)
    total = 0
    for k, d in enumerate(degrees, start=1):
        total += d
        if k + total >= n:
            return k
    return n


def bound_diameter(G: Graph) -> BoundEntry:
    return BoundEntry("diameter", "always", True, G.n - diameter(G))


def bound_domination(G: Graph, gamma: int) -> BoundEntry:
    return BoundEntry("domination", "always", True, G.n - gamma)


def gamma_lower_bounds(G: Graph) -> list[BoundEntry]:
    """Lower bounds on the domination number, in a fixed order.

    ``laplacian`` carries both the real ratio ``n / mu_max`` and its ceiling;
    it is inapplicable on a single vertex.
    """
    n = G.n
    g = girth(G)
    delta, Delta = min_degree(G), max_degree(G)
    entries = [
        BoundEntry("min_degree", "girth >= 5", g >= 5, delta if g >= 5 else None),
        BoundEntry("twice_min_degree", "girth >= 6", g >= 6, 2 * (delta - 1) if g >= 6 else None),
        BoundEntry("max_degree_cover", "always", True, -(-n // (1 + Delta))),
        BoundEntry("degree_sequence", "always", True, degree_sum_threshold(degree_sequence(G))),
    ]
    if n >= 2:
        ratio = n / laplacian_max_eigenvalue(G)
        entries.append(BoundEntry("laplacian", "n >= 2", True, _ceil(ratio), ratio))
    else:
        entries.append(BoundEntry("laplacian", "n >= 2", False))
    ok = delta >= 2 and g >= 7
    entries.append(BoundEntry("max_degree_girth", "min degree >= 2 and girth >= 7", ok,
                              Delta if ok else None))
    return entries


def corollary_bounds(G: Graph) -> list[BoundEntry]:
    """Upper bounds ``n - L`` on beta for every lower bound ``L`` on gamma.

    The ``laplacian`` entry keeps the unrounded ``n - n / mu_max`` in
    ``real_value``; ``value`` is the integer ``n - ceil(n / mu_max)``.
    """
    n = G.n
    out = []
    for e in gamma_lower_bounds(G):
        if not e.applicable:
            out.append(e)
            continue
        real = None if e.real_value is None else n - e.real_value
        out.append(BoundEntry(e.name, e.condition, True, n - e.value, real))
    return out


def bound_report(G: Graph, compute_exact: bool = False, budget: int | None = None) -> BoundReport:
    """Every upper bound on beta, optionally alongside the exact beta and gamma.

    A budget overrun in either solver is recorded in ``timeouts`` (with the
    best known upper bound) and the report is still returned. A known gamma
    puts ``n - gamma`` at the head of the catalog, so it wins ties for
    ``tightest``; a known beta is checked against every applicable entry.
    """
    G.require_connected()
    report = BoundReport([bound_diameter(G)] + corollary_bounds(G))
    if not compute_exact:
        return report
    try:
        report.gamma_exact = domination_number(G, budget=budget).gamma
    except BudgetExceeded as exc:
        report.timeouts["gamma"] = exc.upper_bound
    try:
        report.beta_exact = metric_dimension(G, budget=budget).beta
    except BudgetExceeded as exc:
        report.timeouts["beta"] = exc.upper_bound
    if report.gamma_exact is not None:
        report.entries.insert(0, bound_domination(G, report.gamma_exact))
    if report.beta_exact is not None:
        bad = [e for e in report.entries if e.applicable and e.value < report.beta_exact]
        if bad:
            raise AnomalyError(f"bounds below beta={report.beta_exact}: {bad}")
    return report
