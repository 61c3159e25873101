#pragma once

#include <optional>

#include "tokenalg/orthopoly.hpp"
#include "tokenalg/token.hpp"

namespace tokenalg {

/// The Johnson graph J(n,k): the k-token graph of the complete graph.
TokenGraph johnson_graph(int n, int k);

/// Closed-form intersection parameters b_j = (k-j)(n-k-j), c_j = j^2. For
/// k > n-k the parameters of the isomorphic J(n, n-k) are returned.
IntersectionArray johnson_intersection_array(int n, int k);

/// Tridiagonal quotient matrix: diagonal a_0..a_d, b's below, c's above.
Matrix quotient_matrix(const IntersectionArray& ia);

/// Closed-form Laplacian spectrum: eigenvalue j(n+1-j) with multiplicity
/// C(n,j) - C(n,j-1), j = 0..min(k, n-k).
Spectrum johnson_laplacian_spectrum(int n, int k);

/// Distance in J(n,k): k minus the intersection size.
int johnson_distance(const KSubset& a, const KSubset& b);

struct MIdentityReport {
    bool m_identity = false;  // B Bt = sum (k-i) A_i over the Johnson distance matrices
    Matrix m;
    bool commuting_family = true;  // with a supplied G: M, Lk, Lk-bar, L_J pairwise commute
    bool all_pass() const { return m_identity && commuting_family; }
};

MIdentityReport verify_M_identity(int n, int k, const std::optional<Graph>& g = std::nullopt);

struct BoseMesnerReport {
    int dim_adjacency_algebra = 0;  // distinct adjacency eigenvalues
    int dim_distance_algebra = 0;   // diameter + 1
    bool drg = false;
    bool intersection_ok = true;  // counting matches the polynomial route when drg
};

BoseMesnerReport bose_mesner_check(const Graph& g, double tol = 1e-9);

}  // namespace tokenalg
