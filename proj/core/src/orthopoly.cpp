#include "tokenalg/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tokenalg/linalg.hpp"

namespace tokenalg {

Rat scalar_product(ProductKind, const Spectrum& spectrum, const Poly& f, const Poly& g) {
    if (spectrum.mode != Spectrum::Mode::exact)
        throw std::invalid_argument("exact scalar product needs an exact spectrum");
    Rat total = 0;
    int n = 0;
    for (const auto& [value, mult] : spectrum.rational) {
        total += Rat(mult) * f(value) * g(value);
        n += mult;
    }
    return total / n;
}

namespace {

double scalar_product_f(const std::vector<std::pair<double, int>>& spectrum, int n, const std::vector<double>& f,
                        const std::vector<double>& g) {
    auto eval = [](const std::vector<double>& p, double x) {
        double acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    double total = 0;
    for (const auto& [value, mult] : spectrum) total += mult * eval(f, value) * eval(g, value);
    return total / n;
}

PredistanceFamily family_exact(ProductKind kind, const Spectrum& spectrum) {
    PredistanceFamily fam{kind, spectrum, true, {}, {}, Poly(), {}, -1};
    int d = spectrum.distinct_count() - 1;
    Rat norm_point = kind == ProductKind::laplacian ? Rat(0) : spectrum.rational.back().first;

    for (int i = 0; i <= d; ++i) {
        std::vector<Rat> mono(static_cast<size_t>(i) + 1, Rat(0));
        mono[i] = 1;
        Poly p(std::move(mono));
        for (const Poly& q : fam.polys) {
            Rat coeff = scalar_product(kind, spectrum, p, q) / scalar_product(kind, spectrum, q, q);
            p = p - coeff * q;
        }
        Rat at_point = p(norm_point);
        if (at_point == 0) {
            fam.truncated_at = i;
            break;
        }
        Rat norm2 = scalar_product(kind, spectrum, p, p);
        fam.polys.push_back((at_point / norm2) * p);
    }
    Poly h;
    for (const Poly& q : fam.polys) h = h + q;
    fam.hoffman_sum = h;
    return fam;
}

PredistanceFamily family_numeric(ProductKind kind, const Spectrum& spectrum) {
    PredistanceFamily fam{kind, spectrum, false, {}, {}, Poly(), {}, -1};
    int d = spectrum.distinct_count() - 1;
    int n = spectrum.size();
    double norm_point = kind == ProductKind::laplacian ? 0.0 : spectrum.numeric.back().first;
    double value_scale = 1.0;
    for (auto& [v, m] : spectrum.numeric) value_scale = std::max(value_scale, std::abs(v));

    auto eval = [](const std::vector<double>& p, double x) {
        double acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    for (int i = 0; i <= d; ++i) {
        std::vector<double> p(static_cast<size_t>(i) + 1, 0.0);
        p[i] = 1.0;
        for (const auto& q : fam.polys_f) {
            double coeff = scalar_product_f(spectrum.numeric, n, p, q) / scalar_product_f(spectrum.numeric, n, q, q);
            for (size_t j = 0; j < q.size(); ++j) p[j] -= coeff * q[j];
        }
        double at_point = eval(p, norm_point);
        double norm2 = scalar_product_f(spectrum.numeric, n, p, p);
        if (std::abs(at_point) <= 1e-9 * std::pow(value_scale, i)) {
            fam.truncated_at = i;
            break;
        }
        double scale = at_point / norm2;
        for (double& cj : p) cj *= scale;
        fam.polys_f.push_back(std::move(p));
    }
    std::vector<double> h(fam.polys_f.empty() ? 1 : fam.polys_f.back().size(), 0.0);
    for (const auto& q : fam.polys_f)
        for (size_t j = 0; j < q.size(); ++j) h[j] += q[j];
    fam.hoffman_sum_f = std::move(h);
    return fam;
}

// Entrywise comparison of p(M) (or its numeric counterpart) against the
// all-ones matrix.
HoffmanCheck compare_to_all_ones(const PredistanceFamily& fam, const Matrix& m, double tol) {
    HoffmanCheck result;
    result.exact = fam.exact;
    int n = m.rows();
    if (fam.exact) {
        Matrix h = eval_matrix_poly(fam.hoffman_sum, m);
        result.holds = true;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                double dev = std::abs(rat_to_double(h(r, c) - Rat(1)));
                if (h(r, c) != 1) result.holds = false;
                if (dev > result.max_deviation) {
                    result.max_deviation = dev;
                    result.witness_row = r;
                    result.witness_col = c;
                }
            }
        return result;
    }
    // Horner in doubles
    std::vector<std::vector<double>> md(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) md[r][c] = rat_to_double(m(r, c));
    std::vector<std::vector<double>> acc(n, std::vector<double>(n, 0.0));
    for (int i = static_cast<int>(fam.hoffman_sum_f.size()) - 1; i >= 0; --i) {
        std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                if (acc[r][k] == 0.0) continue;
                for (int c = 0; c < n; ++c) next[r][c] += acc[r][k] * md[k][c];
            }
        for (int r = 0; r < n; ++r) next[r][r] += fam.hoffman_sum_f[i];
        acc = std::move(next);
    }
    result.holds = true;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            double dev = std::abs(acc[r][c] - 1.0);
            if (dev > result.max_deviation) {
                result.max_deviation = dev;
                result.witness_row = r;
                result.witness_col = c;
            }
        }
    if (result.max_deviation > n * tol) result.holds = false;
    return result;
}

}  // namespace

PredistanceFamily predistance_family(ProductKind kind, const Spectrum& spectrum) {
    if (spectrum.distinct_count() < 1) throw std::invalid_argument("empty spectrum");
    return spectrum.mode == Spectrum::Mode::exact ? family_exact(kind, spectrum) : family_numeric(kind, spectrum);
}

HoffmanCheck hoffman_regular_check(const Graph& g, double tol) {
    Matrix a = adjacency(g);
    Spectrum spectrum = auto_spectrum(a, tol);
    auto fam = predistance_family(ProductKind::adjacency, spectrum);
    return compare_to_all_ones(fam, a, tol);
}

HoffmanCheck hoffman_connected_check(const Matrix& m, double tol) {
    if (!m.is_symmetric()) throw std::invalid_argument("Laplacian must be symmetric");
    for (int r = 0; r < m.rows(); ++r) {
        Rat sum = 0;
        for (int c = 0; c < m.cols(); ++c) {
            sum += m(r, c);
            if (r != c && m(r, c) > 0) throw std::invalid_argument("Laplacian must have nonpositive off-diagonal");
        }
        if (sum != 0) throw std::invalid_argument("Laplacian rows must sum to zero");
    }
    Spectrum spectrum = auto_spectrum(m, tol);
    auto fam = predistance_family(ProductKind::laplacian, spectrum);
    return compare_to_all_ones(fam, m, tol);
}

std::optional<IntersectionArray> intersection_array_by_counting(const Graph& g, const DistanceMatrices& dm) {
    int d = dm.diameter;
    auto adj = adjacency_lists(g);
    std::vector<std::vector<int>> dist(g.n);
    for (int u = 1; u <= g.n; ++u) dist[u - 1] = bfs_distances(g, u);

    IntersectionArray ia;
    ia.d = d;
    ia.a.assign(d + 1, -1);
    ia.b.assign(d, -1);
    ia.c.assign(d, -1);  // c_1..c_d stored at 0..d-1
    std::vector<long long> bfull(d + 1, -1);
    for (int u = 1; u <= g.n; ++u)
        for (int v = 1; v <= g.n; ++v) {
            int i = dist[u - 1][v - 1];
            long long same = 0, closer = 0, farther = 0;
            for (int w : adj[v]) {
                int dw = dist[u - 1][w - 1];
                if (dw == i) ++same;
                else if (dw == i - 1) ++closer;
                else ++farther;
            }
            if (ia.a[i] < 0) ia.a[i] = same;
            else if (ia.a[i] != same) return std::nullopt;
            if (bfull[i] < 0) bfull[i] = farther;
            else if (bfull[i] != farther) return std::nullopt;
            if (i >= 1) {
                if (ia.c[i - 1] < 0) ia.c[i - 1] = closer;
                else if (ia.c[i - 1] != closer) return std::nullopt;
            }
        }
    if (bfull[d] != 0) return std::nullopt;
    for (int i = 0; i < d; ++i) ia.b[i] = bfull[i];
    return ia;
}

DrgReport is_distance_regular(const Graph& g, double tol) {
    DrgReport report;
    DistanceMatrices dm = distance_matrices(g);  // throws on disconnected input
    Matrix a = adjacency(g);

    int distinct = distinct_eigenvalue_count(a);
    if (dm.diameter != distinct - 1) {
        report.checked_by = "diameter-mismatch";
        return report;
    }
    int d = distinct - 1;

    Spectrum spectrum = auto_spectrum(a, tol);
    auto fam = predistance_family(ProductKind::adjacency, spectrum);
    if (fam.truncated_at >= 0 || fam.count() != d + 1) {
        report.checked_by = "degenerate-family";
        return report;
    }

    auto matches = [&](int i) {
        if (fam.exact) return eval_matrix_poly(fam.polys[i], a) == dm.mats[i];
        // numeric comparison at n * tol
        std::vector<double> p = fam.polys_f[i];
        int n = g.n;
        std::vector<std::vector<double>> ad(n, std::vector<double>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) ad[r][c] = rat_to_double(a(r, c));
        std::vector<std::vector<double>> acc(n, std::vector<double>(n, 0.0));
        for (int t = static_cast<int>(p.size()) - 1; t >= 0; --t) {
            std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
            for (int r = 0; r < n; ++r)
                for (int k2 = 0; k2 < n; ++k2) {
                    if (acc[r][k2] == 0.0) continue;
                    for (int c = 0; c < n; ++c) next[r][c] += acc[r][k2] * ad[k2][c];
                }
            for (int r = 0; r < n; ++r) next[r][r] += p[t];
            acc = std::move(next);
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (std::abs(acc[r][c] - rat_to_double(dm.mats[i](r, c))) > n * std::max(tol, 1e-7)) return false;
        return true;
    };

    if (!matches(d)) {
        report.checked_by = fam.exact ? "exact" : "numeric";
        return report;
    }
    for (int i = 0; i <= d; ++i)
        if (!matches(i)) {
            report.checked_by = fam.exact ? "exact" : "numeric";
            return report;
        }

    auto counted = intersection_array_by_counting(g, dm);
    if (!counted)
        throw std::logic_error("predistance polynomials matched the distance matrices but the intersection "
                               "parameters are not constant");
    report.drg = true;
    report.checked_by = fam.exact ? "exact" : "numeric";
    report.intersection_array = counted;
    return report;
}

}  // namespace tokenalg
