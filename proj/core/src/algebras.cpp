#include "tokenalg/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "tokenalg/linalg.hpp"

namespace tokenalg {

namespace {

// Spectra of F_0..F_k for g; exact when every level is integral.
std::vector<Spectrum> level_spectra(const Graph& g, int k, double tol, bool& integral) {
    std::vector<Spectrum> out;
    integral = true;
    for (int j = 0; j <= k; ++j) {
        Matrix l = laplacian(token_graph(g, j).graph);
        if (auto exact = exact_spectrum(l)) {
            out.push_back(*exact);
        } else {
            integral = false;
            out.push_back(numeric_spectrum(l, tol));
        }
    }
    return out;
}

Spectrum to_numeric(const Spectrum& s, double tol) {
    if (s.mode == Spectrum::Mode::approximate) return s;
    Spectrum out;
    out.mode = Spectrum::Mode::approximate;
    out.tolerance = tol;
    for (auto& [v, m] : s.rational) out.numeric.push_back({rat_to_double(v), m});
    return out;
}

}  // namespace

PairTable pairing_table(const Graph& g, int k, double tol) {
    if (k < 1 || 2 * k > g.n) throw InputError("pairing needs 1 <= k <= n/2");
    PairTable table;
    table.n = g.n;
    table.k = k;

    bool integral_g = true, integral_gbar = true;
    auto spectra_g = level_spectra(g, k, tol, integral_g);
    auto spectra_gbar = level_spectra(complement(g), k, tol, integral_gbar);
    bool exact = integral_g && integral_gbar;
    table.mode = exact ? Spectrum::Mode::exact : Spectrum::Mode::approximate;
    if (!exact) {
        for (auto& s : spectra_g) s = to_numeric(s, tol);
        for (auto& s : spectra_gbar) s = to_numeric(s, tol);
        table.min_gap = std::numeric_limits<double>::infinity();
        for (auto series : {&spectra_g, &spectra_gbar})
            for (auto& s : *series)
                for (size_t i = 0; i + 1 < s.numeric.size(); ++i)
                    table.min_gap = std::min(table.min_gap, s.numeric[i + 1].first - s.numeric[i].first);
    }

    for (int j = 0; j <= k; ++j) {
        long long johnson = static_cast<long long>(j) * (g.n + 1 - j);
        long long mj = binomial(g.n, j) - binomial(g.n, j - 1);

        if (exact) {
            std::vector<Rat> level_g, level_gbar;
            if (j == 0) {
                level_g = {Rat(0)};
                level_gbar = {Rat(0)};
            } else {
                Spectrum diff_g = spectrum_diff(spectra_g[j], spectra_g[j - 1]);
                Spectrum diff_gbar = spectrum_diff(spectra_gbar[j], spectra_gbar[j - 1]);
                for (auto& [v, m] : diff_g.rational) level_g.insert(level_g.end(), m, v);
                for (auto& [v, m] : diff_gbar.rational) level_gbar.insert(level_gbar.end(), m, v);
            }
            if (static_cast<long long>(level_g.size()) != mj || static_cast<long long>(level_gbar.size()) != mj)
                throw std::logic_error("level size mismatch at level " + std::to_string(j));
            std::sort(level_g.begin(), level_g.end());
            std::sort(level_gbar.rbegin(), level_gbar.rend());
            for (long long r = 0; r < mj; ++r) {
                PairTable::Row row{j, static_cast<int>(r + 1), level_g[r], level_gbar[r], johnson};
                if (row.lambda + row.lambda_bar != Rat(static_cast<long>(johnson)))
                    throw std::logic_error("pairing law violated at level " + std::to_string(j));
                table.rows.push_back(std::move(row));
            }
        } else {
            std::vector<double> level_g, level_gbar;
            if (j == 0) {
                level_g = {0.0};
                level_gbar = {0.0};
            } else {
                level_g = spectrum_diff(spectra_g[j], spectra_g[j - 1]).expanded();
                level_gbar = spectrum_diff(spectra_gbar[j], spectra_gbar[j - 1]).expanded();
            }
            if (static_cast<long long>(level_g.size()) != mj || static_cast<long long>(level_gbar.size()) != mj)
                throw std::logic_error("level size mismatch at level " + std::to_string(j));
            std::sort(level_g.begin(), level_g.end());
            std::sort(level_gbar.rbegin(), level_gbar.rend());
            for (long long r = 0; r < mj; ++r) {
                PairTable::RowF row{j, static_cast<int>(r + 1), level_g[r], level_gbar[r], johnson};
                table.max_residual =
                    std::max(table.max_residual, std::abs(row.lambda + row.lambda_bar - static_cast<double>(johnson)));
                table.rows_f.push_back(row);
            }
        }
    }
    return table;
}

CommuteReport check_commute(const Graph& g, int k) {
    Graph fk = token_graph(g, k).graph;
    Graph fkbar = token_graph(complement(g), k).graph;
    CommuteReport report;
    report.laplacians_commute = commutator_is_zero(laplacian(fk), laplacian(fkbar));
    report.adjacencies_commute = commutator_is_zero(adjacency(fk), adjacency(fkbar));
    return report;
}

namespace {

// Multiset of joint pairs == multiset of pairing-table pairs.
bool pairs_match(const JointSpectrum& joint, const PairTable& table, double tol) {
    if (joint.mode == Spectrum::Mode::exact && table.mode == Spectrum::Mode::exact) {
        std::map<std::pair<Rat, Rat>, int> counts;
        for (const auto& p : joint.exact) counts[{p.lambda, p.lambda_bar}] += p.multiplicity;
        for (const auto& row : table.rows) {
            auto it = counts.find({row.lambda, row.lambda_bar});
            if (it == counts.end() || it->second == 0) return false;
            --it->second;
        }
        for (auto& [pair, count] : counts)
            if (count != 0) return false;
        return true;
    }
    // numeric: greedy matching at a loose tolerance
    std::vector<std::pair<double, double>> a, b;
    if (joint.mode == Spectrum::Mode::exact) {
        for (const auto& p : joint.exact)
            for (int i = 0; i < p.multiplicity; ++i) a.push_back({rat_to_double(p.lambda), rat_to_double(p.lambda_bar)});
    } else {
        for (const auto& p : joint.approx)
            for (int i = 0; i < p.multiplicity; ++i) a.push_back({p.lambda, p.lambda_bar});
    }
    if (table.mode == Spectrum::Mode::exact) {
        for (const auto& row : table.rows) b.push_back({rat_to_double(row.lambda), rat_to_double(row.lambda_bar)});
    } else {
        for (const auto& row : table.rows_f) b.push_back({row.lambda, row.lambda_bar});
    }
    if (a.size() != b.size()) return false;
    double eps = std::max(tol * 100, 1e-6);
    std::vector<bool> used(a.size(), false);
    for (auto& [x, y] : b) {
        bool matched = false;
        for (size_t i = 0; i < a.size(); ++i) {
            if (used[i]) continue;
            if (std::abs(a[i].first - x) <= eps && std::abs(a[i].second - y) <= eps) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace

LocalAlgebraReport local_algebra(const Graph& g, int k, std::optional<std::pair<Rat, Rat>> forced_coefficients,
                                 double tol) {
    LocalAlgebraReport report;
    report.n = g.n;
    report.k = k;

    Matrix lk = laplacian(token_graph(g, k).graph);
    Matrix lkbar = laplacian(token_graph(complement(g), k).graph);
    report.commutes = commutator_is_zero(lk, lkbar);
    if (!report.commutes) throw std::logic_error("token Laplacians of a graph and its complement must commute");

    report.joint = joint_spectrum(lk, lkbar, tol);
    report.mode = report.joint.mode;
    report.dim = report.joint.distinct_pairs();
    int d = report.dim - 1;

    // cross-check the dimension against the rank of the vectorized monomials
    std::vector<Matrix> monomials;
    for (int a = 0; a <= d + 1; ++a)
        for (int b = 0; a + b <= d + 1; ++b) monomials.push_back(eval_bivariate_monomials(a, b, lk, lkbar));
    report.monomial_rank = matrix_span_rank(monomials);
    report.dims_agree = report.monomial_rank == report.dim;

    // generator R = alpha Lk + beta Lkbar
    report.alpha = 1;
    report.beta = report.joint.beta;
    if (forced_coefficients) {
        report.alpha = forced_coefficients->first;
        report.beta = forced_coefficients->second;
    }
    report.generator = report.alpha * lk + report.beta * lkbar;

    if (report.mode == Spectrum::Mode::exact) {
        std::map<Rat, int> theta_counts;
        for (const auto& p : report.joint.exact)
            theta_counts[report.alpha * p.lambda + report.beta * p.lambda_bar] += p.multiplicity;
        report.generator_separated = static_cast<int>(theta_counts.size()) == report.dim;
        if (!report.generator_separated) {
            if (forced_coefficients)
                throw InputError("the forced coefficients do not separate the joint eigenvalue pairs");
            throw std::logic_error("generator lost the joint pair separation");
        }
        for (auto& [theta, mult] : theta_counts) report.theta.push_back(theta);

        // Lagrange idempotents of R
        int count = report.dim;
        for (int i = 0; i < count; ++i) {
            Matrix e = Matrix::identity(report.generator.rows());
            for (int j = 0; j < count; ++j) {
                if (j == i) continue;
                Matrix shifted = report.generator;
                for (int r = 0; r < shifted.rows(); ++r) shifted(r, r) -= report.theta[j];
                e = (Rat(1) / (report.theta[i] - report.theta[j])) * (e * shifted);
            }
            report.idempotents.push_back(std::move(e));
        }
        Matrix sum(report.generator.rows(), report.generator.cols());
        Matrix weighted(report.generator.rows(), report.generator.cols());
        report.idempotents_ok = true;
        for (int i = 0; i < count; ++i) {
            sum = sum + report.idempotents[i];
            weighted = weighted + report.theta[i] * report.idempotents[i];
            if (!(report.idempotents[i] * report.idempotents[i] == report.idempotents[i])) report.idempotents_ok = false;
            for (int j = i + 1; j < count; ++j)
                if (!(report.idempotents[i] * report.idempotents[j]).is_zero()) report.idempotents_ok = false;
        }
        if (!(sum == Matrix::identity(report.generator.rows()))) report.idempotents_ok = false;
        if (!(weighted == report.generator)) report.idempotents_ok = false;

        // the Johnson adjacency matrix lies in the span of powers of R
        Matrix aj = Rat(static_cast<long>(k) * (g.n - k)) * Matrix::identity(report.generator.rows()) - (lk + lkbar);
        std::vector<Matrix> powers;
        Matrix power = Matrix::identity(report.generator.rows());
        for (int i = 0; i <= d; ++i) {
            powers.push_back(power);
            power = power * report.generator;
        }
        int span_rank = matrix_span_rank(powers);
        powers.push_back(aj);
        report.johnson_in_span = matrix_span_rank(powers) == span_rank && span_rank == report.dim;
    } else {
        // numeric path: separation was certified by joint_spectrum; verify the
        // generator and membership with interpolation residuals
        std::vector<std::pair<double, double>> pairs;
        for (const auto& p : report.joint.approx) pairs.push_back({p.lambda, p.lambda_bar});
        double alpha_f = rat_to_double(report.alpha), beta_f = rat_to_double(report.beta);
        std::vector<double> theta;
        for (auto& [l, lb] : pairs) theta.push_back(alpha_f * l + beta_f * lb);
        std::sort(theta.begin(), theta.end());
        double sep = 10 * tol;
        report.generator_separated = true;
        for (size_t i = 0; i + 1 < theta.size(); ++i)
            if (theta[i + 1] - theta[i] < sep) report.generator_separated = false;
        if (!report.generator_separated && forced_coefficients)
            throw InputError("the forced coefficients do not separate the joint eigenvalue pairs");

        report.idempotents_ok = true;  // not constructed on the numeric path
        // A_J = q(R) for the interpolation polynomial through
        // (theta_i, k(n-k) - lambda_i - lambda_bar_i)
        double degree = static_cast<double>(k) * (g.n - k);
        auto eig = symmetric_eigen(report.generator);
        Matrix aj_exact = Rat(static_cast<long>(k) * (g.n - k)) * Matrix::identity(report.generator.rows()) -
                          (lk + lkbar);
        double max_dev = 0;
        for (size_t idx = 0; idx < eig.values.size(); ++idx) {
            // on each eigenvector of R, A_J must act with eigenvalue degree - (lambda + lambda_bar)
            const auto& v = eig.vectors[idx];
            std::vector<double> av(v.size(), 0.0);
            for (int r = 0; r < aj_exact.rows(); ++r)
                for (int c = 0; c < aj_exact.cols(); ++c) av[r] += rat_to_double(aj_exact(r, c)) * v[c];
            // find the pair whose theta matches this eigenvalue
            double best = std::numeric_limits<double>::infinity();
            double expected = 0;
            for (auto& [l, lb] : pairs) {
                double t = alpha_f * l + beta_f * lb;
                if (std::abs(t - eig.values[idx]) < best) {
                    best = std::abs(t - eig.values[idx]);
                    expected = degree - l - lb;
                }
            }
            for (size_t r = 0; r < v.size(); ++r) max_dev = std::max(max_dev, std::abs(av[r] - expected * v[r]));
        }
        report.johnson_in_span = max_dev <= std::max(1e-6, 1000 * tol);
    }

    PairTable table = pairing_table(g, k, tol);
    report.pairs_match_pairing_table = pairs_match(report.joint, table, tol);
    return report;
}

Matrix elementary_adjacency(int n, int k, Edge e) {
    return adjacency(token_graph(elementary_graph(n, e), k).graph);
}

Matrix elementary_laplacian(int n, int k, Edge e) {
    Matrix a = elementary_adjacency(n, k, e);
    Matrix l = a * a - a;
    if (l != laplacian(token_graph(elementary_graph(n, e), k).graph))
        throw std::logic_error("A_e^2 - A_e is not the token Laplacian of the single-edge graph");
    return l;
}

GlobalAlgebraReport global_algebra(int n, int k) {
    if (k < 1 || k > n - 1) throw InputError("global algebra needs 1 <= k <= n-1");
    GlobalAlgebraReport report;
    report.n = n;
    report.k = k;

    Graph kn = complete_graph(n);
    std::vector<Matrix> elementary;
    elementary.reserve(kn.edges.size());
    for (Edge e : kn.edges) elementary.push_back(elementary_adjacency(n, k, e));
    report.dim = static_cast<int>(elementary.size());

    // disjoint supports make the A_e linearly independent
    int size = elementary.front().rows();
    Matrix support(size, size);
    report.disjoint_supports = true;
    for (const Matrix& a : elementary)
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                if (a(r, c) != 0) {
                    if (support(r, c) != 0) report.disjoint_supports = false;
                    support(r, c) = 1;
                }

    for (size_t i = 0; i < elementary.size() && !report.noncommuting_witness; ++i)
        for (size_t j = i + 1; j < elementary.size(); ++j) {
            Edge a = kn.edges[i], b = kn.edges[j];
            bool share = a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
            if (share && !commutator_is_zero(elementary[i], elementary[j])) {
                report.noncommuting_witness = {a, b};
                break;
            }
        }

    report.laplacian_identity = true;
    Matrix suma(size, size), suml(size, size);
    for (size_t i = 0; i < elementary.size(); ++i) {
        Matrix l = elementary[i] * elementary[i] - elementary[i];
        if (l != laplacian(token_graph(elementary_graph(n, kn.edges[i]), k).graph)) report.laplacian_identity = false;
        suma = suma + elementary[i];
        suml = suml + l;
    }
    TokenGraph jnk = johnson_graph(n, k);
    report.sums_to_johnson = suma == adjacency(jnk.graph) && suml == laplacian(jnk.graph);
    return report;
}

namespace {

// Edge class of a Johnson edge: the base edge given by the symmetric
// difference of the endpoint subsets.
Edge edge_class(const TokenGraph& jnk, Edge token_edge) {
    auto diff = symmetric_difference(jnk.labels[token_edge.first - 1].elements,
                                     jnk.labels[token_edge.second - 1].elements);
    if (diff.size() != 2) throw std::logic_error("Johnson edge with symmetric difference size != 2");
    return {diff[0], diff[1]};
}

}  // namespace

RecognitionResult recognize_token_graph(const Graph& s, int n, int k) {
    TokenGraph jnk = johnson_graph(n, k);
    if (s.n != jnk.graph.n)
        throw InputError("graph has " + std::to_string(s.n) + " vertices; J(n,k) has " +
                         std::to_string(jnk.graph.n));
    for (Edge e : s.edges)
        if (!jnk.graph.has_edge(e.first, e.second))
            throw InputError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                             "} is not an edge of J(n,k)");

    std::map<Edge, long long> class_sizes, class_used;
    for (Edge e : jnk.graph.edges) ++class_sizes[edge_class(jnk, e)];
    for (Edge e : s.edges) ++class_used[edge_class(jnk, e)];

    RecognitionResult result;
    std::vector<Edge> base_edges;
    for (auto& [cls, used] : class_used) {
        if (used == class_sizes[cls]) {
            base_edges.push_back(cls);
        } else {
            result.broken_class = cls;
            return result;
        }
    }
    Graph h = make_graph(n, base_edges);
    if (token_graph(h, k).graph != s) throw std::logic_error("whole-class union did not rebuild the input graph");
    result.base = h;
    return result;
}

CommuteIffTokenReport commute_iff_token(const Graph& s, int n, int k) {
    TokenGraph jnk = johnson_graph(n, k);
    if (s.n != jnk.graph.n) throw InputError("vertex count does not match J(n,k)");
    std::vector<Edge> rest;
    for (Edge e : jnk.graph.edges)
        if (!s.has_edge(e.first, e.second)) rest.push_back(e);
    for (Edge e : s.edges)
        if (!jnk.graph.has_edge(e.first, e.second))
            throw InputError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                             "} is not an edge of J(n,k)");
    Graph sbar{s.n, std::move(rest)};

    CommuteIffTokenReport report;
    report.commutes = commutator_is_zero(laplacian(s), laplacian(sbar));
    RecognitionResult rec = recognize_token_graph(s, n, k);
    report.recognized = rec.accepted();
    if (rec.base) report.base = rec.base;
    return report;
}

}  // namespace tokenalg
