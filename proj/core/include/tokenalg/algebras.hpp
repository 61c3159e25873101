#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tokenalg/johnson.hpp"

namespace tokenalg {

/// Level-indexed pairing of the token spectra of a graph and its complement
/// against the Johnson eigenvalues: within level j the lambda values ascend,
/// the lambda-bar values descend, and each row sums to j(n+1-j).
struct PairTable {
    int n = 0, k = 0;
    Spectrum::Mode mode = Spectrum::Mode::exact;

    struct Row {
        int level = 0, index = 0;
        Rat lambda, lambda_bar;
        long long johnson = 0;
    };
    struct RowF {
        int level = 0, index = 0;
        double lambda = 0, lambda_bar = 0;
        long long johnson = 0;
    };
    std::vector<Row> rows;
    std::vector<RowF> rows_f;

    double max_residual = 0.0;  // numeric path: worst |lambda + lambda_bar - johnson|
    double min_gap = 0.0;       // numeric path: smallest spectral gap met while matching

    int row_count() const { return mode == Spectrum::Mode::exact ? static_cast<int>(rows.size()) : static_cast<int>(rows_f.size()); }
};

PairTable pairing_table(const Graph& g, int k, double tol = 1e-9);

struct CommuteReport {
    bool laplacians_commute = false;
    bool adjacencies_commute = false;
};

/// Commutator tests for the token graphs of a graph and its complement. The
/// Laplacian pair always commutes; the adjacency pair generally does not.
CommuteReport check_commute(const Graph& g, int k);

struct LocalAlgebraReport {
    int n = 0, k = 0;
    Spectrum::Mode mode = Spectrum::Mode::exact;
    bool commutes = false;

    JointSpectrum joint;
    int dim = 0;             // distinct joint pairs
    int monomial_rank = 0;   // rank of the vectorized L^a Lbar^b family
    bool dims_agree = false;

    Rat alpha{1}, beta{1};
    Matrix generator;  // R = alpha L + beta Lbar
    std::vector<Rat> theta;  // distinct eigenvalues of R (exact path)
    bool generator_separated = false;  // R has exactly dim distinct eigenvalues

    std::vector<Matrix> idempotents;   // exact path
    bool idempotents_ok = false;       // sum = I, products vanish, sum theta E = R
    bool johnson_in_span = false;      // A_J lies in span{I, R, ..., R^d}
    bool pairs_match_pairing_table = false;

    bool all_pass() const {
        return commutes && dims_agree && generator_separated && idempotents_ok && johnson_in_span &&
               pairs_match_pairing_table;
    }
};

/// Builds and verifies the commutative algebra generated by the Laplacians of
/// the k-token graphs of g and its complement. A forced (alpha, beta)
/// overrides the deterministic generator choice; it must still separate the
/// joint pairs.
LocalAlgebraReport local_algebra(const Graph& g, int k, std::optional<std::pair<Rat, Rat>> forced_coefficients = {},
                                 double tol = 1e-9);

/// Adjacency matrix of the k-token graph of the single-edge graph K_n(e),
/// under the global lexicographic subset labeling.
Matrix elementary_adjacency(int n, int k, Edge e);

/// L_e = A_e^2 - A_e, which equals the Laplacian of that token graph.
Matrix elementary_laplacian(int n, int k, Edge e);

struct GlobalAlgebraReport {
    int n = 0, k = 0;
    int dim = 0;  // C(n,2)
    bool disjoint_supports = false;  // no two A_e share a nonzero position
    std::optional<std::pair<Edge, Edge>> noncommuting_witness;
    bool laplacian_identity = false;  // A_e^2 - A_e is the token Laplacian, every e
    bool sums_to_johnson = false;     // sum A_e = A_J and sum L_e = L_J

    bool all_pass() const {
        return disjoint_supports && noncommuting_witness.has_value() && laplacian_identity && sums_to_johnson;
    }
};

GlobalAlgebraReport global_algebra(int n, int k);

struct RecognitionResult {
    std::optional<Graph> base;           // H with token_graph(H, k) = S, when accepted
    std::optional<Edge> broken_class;    // a partially used edge class, when rejected
    bool accepted() const { return base.has_value(); }
};

/// Decides whether a spanning subgraph of J(n,k) is the k-token graph of some
/// graph on n vertices, by testing whether its edge set is a union of whole
/// single-edge classes.
RecognitionResult recognize_token_graph(const Graph& s, int n, int k);

struct CommuteIffTokenReport {
    bool commutes = false;    // L(S) with L of the complement inside J(n,k)
    bool recognized = false;  // S is a token graph
    std::optional<Graph> base;
    bool equivalent() const { return commutes == recognized; }
};

CommuteIffTokenReport commute_iff_token(const Graph& s, int n, int k);

}  // namespace tokenalg
