#include "tokenalg/johnson.hpp"

#include <algorithm>

#include "tokenalg/linalg.hpp"

namespace tokenalg {

TokenGraph johnson_graph(int n, int k) {
    if (k < 1 || k > n - 1) throw InputError("J(n,k) needs 1 <= k <= n-1");
    return token_graph(complete_graph(n), k);
}

IntersectionArray johnson_intersection_array(int n, int k) {
    if (k < 1 || k > n - 1) throw InputError("J(n,k) needs 1 <= k <= n-1");
    if (k > n - k) k = n - k;  // subset complementation gives J(n,k) = J(n,n-k)
    int d = k;
    IntersectionArray ia;
    ia.d = d;
    long long degree = static_cast<long long>(k) * (n - k);
    for (int j = 0; j < d; ++j) ia.b.push_back(static_cast<long long>(k - j) * (n - k - j));
    for (int j = 1; j <= d; ++j) ia.c.push_back(static_cast<long long>(j) * j);
    for (int j = 0; j <= d; ++j) {
        long long bj = j < d ? ia.b[j] : 0;
        long long cj = j >= 1 ? ia.c[j - 1] : 0;
        ia.a.push_back(degree - bj - cj);
    }
    return ia;
}

Matrix quotient_matrix(const IntersectionArray& ia) {
    int d = ia.d;
    Matrix q(d + 1, d + 1);
    for (int j = 0; j <= d; ++j) q(j, j) = static_cast<long>(ia.a[j]);
    for (int j = 0; j < d; ++j) {
        q(j + 1, j) = static_cast<long>(ia.b[j]);
        q(j, j + 1) = static_cast<long>(ia.c[j]);
    }
    return q;
}

Spectrum johnson_laplacian_spectrum(int n, int k) {
    if (k < 1 || k > n - 1) throw InputError("J(n,k) needs 1 <= k <= n-1");
    if (k > n - k) k = n - k;
    Spectrum s;
    s.mode = Spectrum::Mode::exact;
    for (int j = 0; j <= k; ++j) {
        long long value = static_cast<long long>(j) * (n + 1 - j);
        long long mult = binomial(n, j) - binomial(n, j - 1);
        s.rational.push_back({Rat(static_cast<long>(value)), static_cast<int>(mult)});
    }
    std::sort(s.rational.begin(), s.rational.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
}

int johnson_distance(const KSubset& a, const KSubset& b) {
    if (a.elements.size() != b.elements.size()) throw InputError("subsets of different size");
    std::vector<int> common;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(common));
    return static_cast<int>(a.elements.size() - common.size());
}

MIdentityReport verify_M_identity(int n, int k, const std::optional<Graph>& g) {
    TokenGraph jnk = johnson_graph(n, k);
    Matrix b = binomial_matrix(n, k);
    MIdentityReport report;
    report.m = b * b.transpose();

    DistanceMatrices dm = distance_matrices(jnk.graph);
    Matrix sum(report.m.rows(), report.m.cols());
    for (int i = 0; i < k && i <= dm.diameter; ++i) sum = sum + Rat(k - i) * dm.mats[i];
    report.m_identity = report.m == sum;

    if (g) {
        if (g->n != n) throw InputError("graph vertex count must match n");
        Matrix lk = laplacian(token_graph(*g, k).graph);
        Matrix lkbar = laplacian(token_graph(complement(*g), k).graph);
        Matrix lj = laplacian(jnk.graph);
        std::vector<Matrix> family{report.m, lk, lkbar, lj};
        for (size_t i = 0; i < family.size() && report.commuting_family; ++i)
            for (size_t j = i + 1; j < family.size(); ++j)
                if (!commutator_is_zero(family[i], family[j])) {
                    report.commuting_family = false;
                    break;
                }
    }
    return report;
}

BoseMesnerReport bose_mesner_check(const Graph& g, double tol) {
    BoseMesnerReport report;
    DistanceMatrices dm = distance_matrices(g);
    report.dim_distance_algebra = dm.diameter + 1;
    report.dim_adjacency_algebra = distinct_eigenvalue_count(adjacency(g));
    DrgReport drg = is_distance_regular(g, tol);
    report.drg = drg.drg;
    if (report.drg) {
        // distance-regularity already verified every p_i(A) = A_i, which is
        // the dim(A cap D) = d+1 statement; cross-check the array shapes
        report.intersection_ok = drg.intersection_array && drg.intersection_array->d == dm.diameter;
    }
    return report;
}

}  // namespace tokenalg
