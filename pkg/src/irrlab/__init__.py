"""Graph irregularity measures, greedy trees, extremal constructions, and
exhaustive desk-scale verification of their exact relationships."""

from .graphs import (
    Graph,
    classify_tree,
    degrees,
    from_edge_list,
    is_connected,
    is_path_graph,
    is_star_graph,
    is_tree,
    relabel,
)
from .graph6 import parse_graph6, write_graph6
from .measures import (
    MeasureReport,
    measure_all,
    ratio,
    sigma_t_closed_form,
    sigma_t_naive,
    sum_centered_squares,
)
from .trees import (
    Delta3Profile,
    RootedTree,
    delta3_profile,
    enumerate_free_trees,
    enumerate_tree_degree_sequences,
    greedy_tree,
    subtree_g_values,
)
from .constructions import (
    ChainParams,
    difference_factor,
    extremal_chain,
    near_regular_block,
    quadratic_example,
    side_block,
)
from .verify import (
    GreedyWalkResult,
    TheoremReport,
    check_greedy_identity,
    check_ratio_bounds,
    check_tree_theorems,
    enumerate_connected_labeled_graphs,
    exhaustive_tree_scan,
    greedy_scan,
    min_greedy_walk,
    ratio_scan,
)
from .kernels import active_backend, prufer_free_tree_count, scan_connected_graphs

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "MeasureReport",
    "RootedTree",
    "Delta3Profile",
    "ChainParams",
    "GreedyWalkResult",
    "TheoremReport",
    "from_edge_list",
    "degrees",
    "is_connected",
    "is_tree",
    "is_path_graph",
    "is_star_graph",
    "classify_tree",
    "relabel",
    "parse_graph6",
    "write_graph6",
    "measure_all",
    "sigma_t_closed_form",
    "sigma_t_naive",
    "sum_centered_squares",
    "ratio",
    "enumerate_free_trees",
    "enumerate_tree_degree_sequences",
    "greedy_tree",
    "subtree_g_values",
    "delta3_profile",
    "difference_factor",
    "near_regular_block",
    "side_block",
    "extremal_chain",
    "quadratic_example",
    "check_tree_theorems",
    "check_greedy_identity",
    "min_greedy_walk",
    "check_ratio_bounds",
    "enumerate_connected_labeled_graphs",
    "exhaustive_tree_scan",
    "greedy_scan",
    "ratio_scan",
    "active_backend",
    "scan_connected_graphs",
    "prufer_free_tree_count",
]
