"""Additive tree spanners from tree decompositions of small breadth."""

import json as _json

from ._treespan import (  # noqa: F401
    BoundViolationError,
    BuildResult,
    DisconnectedGraphError,
    Graph,
    InvalidDecompositionError,
    NotSpanningTreeError,
    ParseError,
    TreeDecomposition,
    __version__,
    apsp_matrix,
    bfs,
    branch_and_leaf,
    breadth,
    build_from_multiplicative,
    build_spanner,
    complete_binary_tree,
    complete_graph,
    cycle_graph,
    d_of_tree,
    from_multiplicative_spanner,
    grid_graph,
    is_connected,
    is_spanning_tree,
    layering_decomposition,
    min_additive_tree_stretch_bruteforce,
    multiplicative_stretch,
    nested_sequence,
    normalize,
    path_graph,
    pbt_exact,
    radius_of_set,
    random_connected,
    random_tree,
    snowflake,
    snowflake_decomposition,
    star_graph,
    validate,
)
from ._treespan import additive_stretch as _additive_stretch_json


def additive_stretch(g, tree_edges, sampled=0, seed=0, bound=None):
    """Stretch report as a dict (see the JSON schema in the README)."""
    return _json.loads(_additive_stretch_json(g, tree_edges, sampled, seed, bound))


def build_report(result):
    """Parsed JSON report of a BuildResult."""
    return _json.loads(result.report_json)
