#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenalg/graph.hpp"
#include "tokenalg/polynomial.hpp"
#include "tokenalg/spectrum.hpp"

namespace tokenalg {

/// Which scalar product induces a polynomial family. Both use the
/// spectrum-weighted sum (1/n) sum m_i f(v_i) g(v_i); they differ in the
/// evaluation point of the norm normalization: the largest eigenvalue for the
/// adjacency product, 0 for the Laplacian one (the eigenvalue of the all-ones
/// eigenvector in each case).
enum class ProductKind { adjacency, laplacian };

/// Orthogonal polynomial family under the spectrum-weighted scalar product,
/// rescaled so that ||p_i||^2 = p_i at the normalization point.
struct PredistanceFamily {
    ProductKind kind;
    Spectrum spectrum;
    bool exact = true;
    std::vector<Poly> polys;                        // exact path
    std::vector<std::vector<double>> polys_f;       // numeric path, ascending coefficients
    Poly hoffman_sum;                               // H = sum p_i (exact path)
    std::vector<double> hoffman_sum_f;
    int truncated_at = -1;  // index of a degenerate normalization, -1 if none

    int count() const { return exact ? static_cast<int>(polys.size()) : static_cast<int>(polys_f.size()); }
};

/// (1/n) sum m_i f(v_i) g(v_i) over an exact spectrum.
Rat scalar_product(ProductKind kind, const Spectrum& spectrum, const Poly& f, const Poly& g);

PredistanceFamily predistance_family(ProductKind kind, const Spectrum& spectrum);

struct HoffmanCheck {
    bool holds = false;
    bool exact = true;
    double max_deviation = 0.0;  // largest |H(M) - J| entry
    int witness_row = -1, witness_col = -1;
};

/// Hoffman characterization: H(A) = J iff the graph is connected and regular.
HoffmanCheck hoffman_regular_check(const Graph& g, double tol = 1e-9);

/// Laplacian analogue: H_L(M) = J iff the graph behind the Laplacian-shaped
/// matrix M is connected.
HoffmanCheck hoffman_connected_check(const Matrix& m, double tol = 1e-9);

struct IntersectionArray {
    int d = 0;
    std::vector<long long> b;  // b_0 .. b_{d-1}
    std::vector<long long> a;  // a_0 .. a_d
    std::vector<long long> c;  // c_1 .. c_d

    bool operator==(const IntersectionArray& other) const = default;
};

/// Intersection parameters read off the distance partition; empty when some
/// parameter is not constant across vertex pairs at equal distance.
std::optional<IntersectionArray> intersection_array_by_counting(const Graph& g, const DistanceMatrices& dm);

struct DrgReport {
    bool drg = false;
    std::string checked_by;  // "exact" | "numeric" | "diameter-mismatch" | "not-regular"
    std::optional<IntersectionArray> intersection_array;
};

/// Distance-regularity test: requires diameter = number of distinct adjacency
/// eigenvalues - 1, then checks the highest-degree predistance polynomial
/// against the farthest distance matrix; on success verifies every p_i(A) =
/// A_i and extracts the intersection array by counting.
DrgReport is_distance_regular(const Graph& g, double tol = 1e-9);

}  // namespace tokenalg
