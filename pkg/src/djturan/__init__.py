"""Doubled Johnson graph toolkit.

Builds J(n;k,k+1) on bitmask subsets, enumerates paths and even cycles,
classifies hexagon intersections, constructs the two-path auxiliary
graphs with their edge-sum identities, and runs exact and heuristic
even-cycle Turan searches, all at desk scale with deterministic output.
"""

__version__ = "0.1.0"

from .core import (
    DoubledJohnsonGraph,
    EdgeSubgraph,
    KSubset,
    build_graph,
    cycle_free_lower_bound,
    distance,
    from_edge_list,
    seeded_random_subgraphs,
    to_edge_list,
)
from .cycles import (
    Cycle,
    PathSpec,
    contains_cycle,
    count_cycles,
    count_six_cycles,
    count_two_paths,
    enumerate_cycles,
    girth,
    six_cycles_through_path,
)
from .errors import BudgetError, ConsistencyError, ParameterError

__all__ = [
    "BudgetError",
    "ConsistencyError",
    "Cycle",
    "DoubledJohnsonGraph",
    "EdgeSubgraph",
    "KSubset",
    "ParameterError",
    "PathSpec",
    "build_graph",
    "contains_cycle",
    "count_cycles",
    "count_six_cycles",
    "count_two_paths",
    "cycle_free_lower_bound",
    "distance",
    "enumerate_cycles",
    "from_edge_list",
    "girth",
    "seeded_random_subgraphs",
    "six_cycles_through_path",
    "to_edge_list",
    "__version__",
]
