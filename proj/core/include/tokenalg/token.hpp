#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tokenalg/graph.hpp"
#include "tokenalg/linalg.hpp"
#include "tokenalg/subsets.hpp"

namespace tokenalg {

/// The k-token graph of a base graph: vertices are the k-subsets of the
/// base's vertices (lexicographic rank + 1), adjacent when their symmetric
/// difference is an edge of the base.
struct TokenGraph {
    Graph base;
    int k = 0;
    Graph graph;
    std::vector<KSubset> labels;  // rank -> subset
};

TokenGraph token_graph(const Graph& g, int k);

/// The C(n,k) x n 0/1 matrix whose rows are characteristic vectors of the
/// k-subsets in lexicographic order.
Matrix binomial_matrix(int n, int k);

struct IntertwiningReport {
    bool products_match = false;       // B L1 = Lk B
    bool base_recovered = false;       // L1 = Bt Lk B / C(n-2,k-1)
    bool column_space_invariant = false;  // rank [B | Lk B] = rank B
    std::optional<std::pair<int, int>> first_mismatch;
    bool all_pass() const { return products_match && base_recovered && column_space_invariant; }
};

/// Checks the three exact identities relating the base Laplacian L1 to the
/// token Laplacian Lk through the binomial matrix.
IntertwiningReport verify_intertwining(const Graph& g, int k);

std::vector<Rat> lift_vector(const Matrix& b, const std::vector<Rat>& v);
std::vector<Rat> project_vector(const Matrix& b, const std::vector<Rat>& u);

}  // namespace tokenalg
