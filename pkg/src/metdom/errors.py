"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction (self-loop, out-of-range index, bad params)."""


class GraphFormatError(GraphError):
    """An edge-list or JSON graph file could not be parsed."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected graph.

    ``pair`` holds two vertices with no path between them.
    """

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


class BudgetExceeded(RuntimeError):
    """An exact search ran out of work units before certifying optimality.

    The search never reports a truncated answer as exact; instead it raises
    this with the best certified upper bound and a set achieving it.
    """

    def __init__(self, what, upper_bound, best=None, examined=0):
        super().__init__(
            f"{what}: budget exhausted after {examined} subsets; "
            f"best known upper bound {upper_bound}"
        )
        self.what = what
        self.upper_bound = upper_bound
        self.best = best
        self.examined = examined


class AnomalyError(AssertionError):
    """A result contradicted one of the theorems the library relies on.

    This must never fire; if it does, it is a bug report.
    """
