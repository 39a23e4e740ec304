"""Smoke tests for the Python bindings: exercise every bound the library
promises on a handful of instances."""

import pytest

import treespan as ts


def test_graph_basics():
    g = ts.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.m == 4
    assert g.neighbors(0) == [1, 3]
    assert ts.is_connected(g)
    dist, parent = ts.bfs(g, [0])
    assert dist == [0, 1, 2, 1]
    assert parent[2] == 1  # smallest-id parent on the previous level


def test_graph_rejects_self_loops():
    with pytest.raises(ValueError):
        ts.Graph(2, [(0, 0)])


def test_snowflake_pipeline_obeys_the_bound():
    for k in (2, 3, 4):
        g = ts.snowflake(k)
        assert g.n == 3 * 2 ** (k - 1)
        td = ts.snowflake_decomposition(k)
        assert ts.validate(td, g) == []
        assert ts.breadth(td, g) == 1
        result = ts.build_spanner(g, td)
        assert result.rho == 1
        assert result.bound == 8 * (2 * result.d + 1)
        assert result.max_additive <= result.bound
        assert result.bound_holds
        assert ts.is_spanning_tree(g, result.tree_edges)


def test_heuristic_pipeline_on_a_grid():
    g = ts.grid_graph(6, 7)
    result = ts.build_spanner(g)  # layering heuristic
    assert result.bound_holds
    report = ts.build_report(result)
    assert report["schema"] == 1
    assert report["stretch"]["mode"] == "exact"
    assert len(report["trace"]["levels"]) == result.d + 1


def test_stretch_reports():
    g = ts.cycle_graph(6)
    tree = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    report = ts.additive_stretch(g, tree)
    assert report["max_additive"] == 4
    assert report["witness_add"] == [0, 5]
    num, den = ts.multiplicative_stretch(g, tree)
    assert (num, den) == (5, 1)
    sampled = ts.additive_stretch(g, tree, sampled=30, seed=3)
    assert sampled["mode"] == "sampled"
    assert sampled["max_additive"] <= 4


def test_tree_metrics():
    assert ts.d_of_tree(ts.path_graph(3)) == 0
    assert ts.d_of_tree(ts.path_graph(5)) == 1
    assert ts.pbt_exact(ts.path_graph(3)) == 1
    for b in range(4):
        assert ts.pbt_exact(ts.complete_binary_tree(b)) == b
    levels, depth = ts.nested_sequence(ts.star_graph(3))
    assert depth == 1
    assert levels[1] == [0]


def test_ball_decomposition_from_spanner():
    g = ts.cycle_graph(6)
    tree = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    td = ts.from_multiplicative_spanner(g, tree, 5)
    assert ts.validate(td, g) == []
    assert ts.breadth(td, g) <= 3
    result = ts.build_from_multiplicative(g, tree, 5)
    assert result.bound_holds


def test_layering_decomposition_is_valid():
    g = ts.random_connected(40, 70, seed=11)
    td = ts.layering_decomposition(g)
    assert ts.validate(td, g) == []
    normalized = ts.normalize(td)
    assert len(normalized.bags) <= len(td.bags)
    assert ts.validate(normalized, g) == []


def test_lower_bound_oracle():
    out = ts.min_additive_tree_stretch_bruteforce(ts.snowflake(2))
    assert out["conclusive"]
    assert out["min_additive"] >= 2


def test_errors_map_to_python_exceptions():
    disconnected = ts.Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ts.DisconnectedGraphError):
        ts.layering_decomposition(disconnected)
    g = ts.path_graph(3)
    with pytest.raises(ts.NotSpanningTreeError):
        ts.multiplicative_stretch(g, [(0, 1)])
