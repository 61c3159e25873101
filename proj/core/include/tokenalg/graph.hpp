#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tokenalg/matrix.hpp"

namespace tokenalg {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n with a sorted, duplicate-free
/// edge set of pairs {u, v}, u < v.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    bool has_edge(int u, int v) const;
    bool operator==(const Graph& other) const = default;
};

/// Validates, normalizes (u < v) and sorts the edge set. Rejects loops,
/// out-of-range endpoints and duplicates.
Graph make_graph(int n, std::vector<Edge> edges);

/// Parses the line-oriented edge-list format: `n <count>` first, then one
/// `u v` pair per line, `#` comments ignored. Errors carry line numbers.
Graph graph_from_edge_list(const std::string& text);

/// Decodes the standard graph6 format (single-byte size, n <= 62), with the
/// optional `>>graph6<<` header.
Graph graph_from_graph6(const std::string& bytes);

std::string graph_to_graph6(const Graph& g);

/// Dispatches on the `>>graph6<<` header or a leading `n ` line.
Graph parse_graph(const std::string& content);

Graph complement(const Graph& g);
Graph complete_graph(int n);

/// The graph on n vertices whose only edge is e.
Graph elementary_graph(int n, Edge e);

Matrix adjacency(const Graph& g);
Matrix laplacian(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Neighbor lists indexed by vertex (1-based; index 0 unused).
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

struct DistanceMatrices {
    int diameter = 0;
    std::vector<Matrix> mats;  // A_0 = I, A_1 = adjacency, ..., A_diameter
};

/// Distance matrices of a connected graph; throws InputError naming an
/// unreachable pair otherwise.
DistanceMatrices distance_matrices(const Graph& g);

}  // namespace tokenalg
