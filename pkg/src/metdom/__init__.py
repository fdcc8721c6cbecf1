"""Exact metric dimension and domination number of small graphs, the
dominating-set-to-resolving-set construction, and bounds on metric dimension.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    bound_diameter,
    bound_domination,
    bound_report,
    corollary_bounds,
    gamma_lower_bounds,
)
from .constructive import (
    Classification,
    Construction,
    NormalizationTrace,
    Swap,
    classify_equality,
    eliminate_false_twins,
    ensure_private_neighbors,
    resolving_from_dominating,
)
from .domination import (
    DominationResult,
    domination_number,
    is_dominating_set,
    is_single_vertex,
    private_neighbors,
)
from .errors import AnomalyError, BudgetExceeded, DisconnectedGraphError, GraphError, GraphFormatError
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    kneser,
    path,
    petersen,
    random_connected,
    star,
    subdivided_wheel,
)
from .graph import (
    ACYCLIC,
    Graph,
    all_pairs_distances,
    build_graph,
    degree_sequence,
    diameter,
    false_twin_partition,
    girth,
    is_connected,
    laplacian_max_eigenvalue,
)
from .io import read_graph, write_graph
from .resolve import MetricBasis, is_resolving_set, metric_dimension, metric_representation

__version__ = "0.1.0"
