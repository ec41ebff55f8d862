"""Separating path systems of graphs.

A family of paths separates a graph's edges when every pair of distinct
edges lies in different subsets of the family. This package builds such
families (closed forms for paths, stars, combs, ladders, and trees;
general strategies for dense and random graphs), verifies them, decodes
probe outcomes back to a failing edge, and computes exact minima on
small instances.
"""

from .errors import (
    CatalogOverflow,
    DecodeError,
    DecompositionError,
    FormatError,
    PathError,
    StrategyFailed,
)
from .graph import (
    ColoredMultigraph,
    Graph,
    Path,
    PathSystem,
    is_tree,
    parse_graph,
    parse_path_system,
    path_from_vertices,
    path_system,
    serialize_graph,
    serialize_path_system,
    tree_path,
)
from .verify import (
    SeparationReport,
    complete_lower_bound,
    decode,
    info_lower_bound,
    signature,
    tree_endpoint_violations,
    tree_lower_bound,
    verify,
)
from .decompose import MatchingFamily, matching_decompose, path_decompose
from .families import (
    LadderSubsetPath,
    gnp,
    ladder_subset_path,
    make_hair_comb,
    make_ladder,
    make_path_graph,
    make_star,
    random_tree,
    separate_hair_comb,
    separate_ladder,
    separate_path_graph,
    separate_star,
    separate_tree,
)
from .strategies import (
    CommonNeighborGraph,
    SplitPair,
    StrategyOutcome,
    alternating_cover,
    common_neighbor_graph,
    dense_strategy,
    min_degree_strategy,
    portfolio,
    random_graph_strategy,
    random_split,
)
from .exact import ExactResult, PathCatalog, enumerate_paths, exact_min
from .kernel import HAVE_COMPILED

__version__ = "0.1.0"

__all__ = [
    "CatalogOverflow",
    "ColoredMultigraph",
    "CommonNeighborGraph",
    "DecodeError",
    "DecompositionError",
    "ExactResult",
    "FormatError",
    "Graph",
    "HAVE_COMPILED",
    "LadderSubsetPath",
    "MatchingFamily",
    "Path",
    "PathCatalog",
    "PathError",
    "PathSystem",
    "SeparationReport",
    "SplitPair",
    "StrategyFailed",
    "StrategyOutcome",
    "alternating_cover",
    "common_neighbor_graph",
    "complete_lower_bound",
    "decode",
    "dense_strategy",
    "enumerate_paths",
    "exact_min",
    "gnp",
    "info_lower_bound",
    "is_tree",
    "ladder_subset_path",
    "make_hair_comb",
    "make_ladder",
    "make_path_graph",
    "make_star",
    "matching_decompose",
    "min_degree_strategy",
    "parse_graph",
    "parse_path_system",
    "path_decompose",
    "path_from_vertices",
    "path_system",
    "portfolio",
    "random_graph_strategy",
    "random_split",
    "random_tree",
    "separate_hair_comb",
    "separate_ladder",
    "separate_path_graph",
    "separate_star",
    "separate_tree",
    "serialize_graph",
    "serialize_path_system",
    "signature",
    "tree_endpoint_violations",
    "tree_lower_bound",
    "tree_path",
    "verify",
]
