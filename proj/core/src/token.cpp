#include "tokenalg/token.hpp"

namespace tokenalg {

TokenGraph token_graph(const Graph& g, int k) {
    if (k < 0 || k > g.n)
        throw InputError("token count k = " + std::to_string(k) + " out of range 0.." + std::to_string(g.n));
    TokenGraph t;
    t.base = g;
    t.k = k;
    t.labels = k_subsets(g.n, k);
    int count = static_cast<int>(t.labels.size());
    std::vector<Edge> edges;
    for (int r = 0; r < count; ++r)
        for (int s = r + 1; s < count; ++s) {
            auto diff = symmetric_difference(t.labels[r].elements, t.labels[s].elements);
            if (diff.size() == 2 && g.has_edge(diff[0], diff[1])) edges.push_back({r + 1, s + 1});
        }
    t.graph = Graph{count, std::move(edges)};
    return t;
}

Matrix binomial_matrix(int n, int k) {
    auto subsets = k_subsets(n, k);
    Matrix b(static_cast<int>(subsets.size()), n);
    for (const auto& s : subsets)
        for (int v : s.elements) b(s.rank, v - 1) = 1;
    return b;
}

IntertwiningReport verify_intertwining(const Graph& g, int k) {
    IntertwiningReport report;
    Matrix b = binomial_matrix(g.n, k);
    Matrix l1 = laplacian(g);
    Matrix lk = laplacian(token_graph(g, k).graph);

    Matrix lhs = b * l1;
    Matrix rhs = lk * b;
    report.products_match = lhs == rhs;
    if (!report.products_match) {
        for (int r = 0; r < lhs.rows() && !report.first_mismatch; ++r)
            for (int c = 0; c < lhs.cols(); ++c)
                if (lhs(r, c) != rhs(r, c)) {
                    report.first_mismatch = {r, c};
                    break;
                }
    }

    Rat scale(static_cast<long>(binomial(g.n - 2, k - 1)));
    if (scale != 0) {
        Matrix recovered = (Rat(1) / scale) * (b.transpose() * lk * b);
        report.base_recovered = recovered == l1;
    }

    // column-space invariance: appending Lk B adds nothing to the span of B
    Matrix stacked(b.cols() * 2, b.rows());
    Matrix bt = b.transpose();
    Matrix rt = rhs.transpose();
    for (int r = 0; r < b.cols(); ++r)
        for (int c = 0; c < b.rows(); ++c) {
            stacked(r, c) = bt(r, c);
            stacked(b.cols() + r, c) = rt(r, c);
        }
    report.column_space_invariant = rank(stacked) == rank(b);
    return report;
}

std::vector<Rat> lift_vector(const Matrix& b, const std::vector<Rat>& v) { return b * v; }

std::vector<Rat> project_vector(const Matrix& b, const std::vector<Rat>& u) { return b.transpose() * u; }

}  // namespace tokenalg
