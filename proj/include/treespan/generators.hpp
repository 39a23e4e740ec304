#ifndef TREESPAN_GENERATORS_HPP_
#define TREESPAN_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/treedec.hpp"

namespace treespan {

/// Snowflake lower-bound family: G_1 is a triangle and G_{k+1} adds, for
/// every edge uv of G_k with an endpoint of degree 2, a new vertex adjacent
/// to u and v. Order 3 * 2^(k-1); vertices are numbered generation-major,
/// new vertices in edge-scan order.
Graph snowflake(int k);

/// The breadth-1 witness decomposition of snowflake(k): one bag per triangle,
/// host tree following the creation hierarchy.
TreeDecomposition snowflake_decomposition(int k);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaf_count);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
/// Heap-indexed: node i has children 2i+1 and 2i+2; 2^(depth+1) - 1 nodes.
Graph complete_binary_tree(int depth);

/// Uniform random tree via a random Pruefer sequence; identical output for
/// identical seeds on every platform.
Graph random_tree(int n, uint64_t seed);

/// Random spanning tree plus random extra edges until size m.
Graph random_connected(int n, int m, uint64_t seed);

}  // namespace treespan

#endif  // TREESPAN_GENERATORS_HPP_
