#include "tokenalg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "tokenalg/linalg.hpp"

namespace tokenalg {

int Spectrum::size() const {
    int total = 0;
    if (mode == Mode::exact)
        for (auto& [v, m] : rational) total += m;
    else
        for (auto& [v, m] : numeric) total += m;
    return total;
}

int Spectrum::distinct_count() const {
    return mode == Mode::exact ? static_cast<int>(rational.size()) : static_cast<int>(numeric.size());
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    if (mode == Mode::exact)
        for (auto& [v, m] : rational) out.insert(out.end(), m, rat_to_double(v));
    else
        for (auto& [v, m] : numeric) out.insert(out.end(), m, v);
    return out;
}

namespace {

void require_symmetric(const Matrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("spectrum of non-symmetric matrix");
}

// Least common multiple of all entry denominators.
mpz_class denominator_lcm(const Matrix& m) {
    mpz_class lcm = 1;
    for (const auto& e : m.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
    return lcm;
}

// All eigenvalues lie inside the Gershgorin row-sum bound.
mpz_class gershgorin_bound(const Matrix& m) {
    mpz_class bound = 0;
    for (int r = 0; r < m.rows(); ++r) {
        Rat sum = 0;
        for (int c = 0; c < m.cols(); ++c) sum += abs(m(r, c));
        mpz_class ceilsum = sum.get_num() / sum.get_den() + 1;
        bound = std::max(bound, ceilsum);
    }
    return bound;
}

// Integer roots of a monic integer polynomial by divisor search on the
// constant term of the successively deflated polynomial. Root magnitudes are
// capped by `bound`. Returns roots with multiplicity, or nothing when the
// polynomial does not split over the integers.
std::optional<std::map<long, int>> integer_roots(const Poly& poly, const mpz_class& bound) {
    std::map<long, int> roots;
    Poly p = poly;
    while (p.degree() > 0) {
        // strip zero roots first
        if (p.coeff(0) == 0) {
            ++roots[0];
            std::vector<Rat> shifted(p.coeffs().begin() + 1, p.coeffs().end());
            p = Poly(std::move(shifted));
            continue;
        }
        bool found = false;
        mpz_class constant = p.coeff(0).get_num();
        for (mpz_class cand = -bound; cand <= bound; ++cand) {
            if (cand == 0 || !mpz_divisible_p(constant.get_mpz_t(), cand.get_mpz_t())) continue;
            Rat value = p(Rat(cand));
            if (value != 0) continue;
            auto [quot, rem] = poly_divmod(p, Poly({Rat(-cand), Rat(1)}));
            if (!rem.is_zero()) throw std::logic_error("deflation by verified root left a remainder");
            ++roots[cand.get_si()];
            p = quot;
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    return roots;
}

}  // namespace

std::optional<Spectrum> exact_spectrum(const Matrix& m) {
    require_symmetric(m);
    mpz_class scale = denominator_lcm(m);
    Matrix scaled = Rat(scale) * m;
    Poly p = char_poly(scaled);
    auto roots = integer_roots(p, gershgorin_bound(scaled));
    if (!roots) return std::nullopt;
    Spectrum s;
    s.mode = Spectrum::Mode::exact;
    for (auto& [root, mult] : *roots) {
        Rat value = Rat(root) / Rat(scale);
        s.rational.push_back({value, mult});
    }
    std::sort(s.rational.begin(), s.rational.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
}

EigenDecomposition symmetric_eigen(const Matrix& m) {
    require_symmetric(m);
    int n = m.rows();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        v[i][i] = 1.0;
        for (int j = 0; j < n; ++j) {
            a[i][j] = rat_to_double(m(i, j));
            scale += a[i][j] * a[i][j];
        }
    }
    scale = std::sqrt(scale);

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-15 * std::max(scale, 1.0); ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) <= 1e-300) continue;
                double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        out.values[i] = a[order[i]][order[i]];
        for (int k = 0; k < n; ++k) out.vectors[i][k] = v[k][order[i]];
    }
    return out;
}

Spectrum numeric_spectrum(const Matrix& m, double tol) {
    require_symmetric(m);
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    auto eig = symmetric_eigen(m);
    const double snap_tol = 1e-6;

    std::optional<Poly> cp;  // computed lazily, shared across snap checks
    auto verify_snap = [&](long candidate) {
        if (!cp) cp = char_poly(m);
        return poly_divides(Poly({Rat(-candidate), Rat(1)}), *cp);
    };

    std::vector<double> values = eig.values;
    for (double& value : values) {
        double rounded = std::round(value);
        if (std::abs(value - rounded) <= snap_tol && std::abs(rounded) < 9e18 &&
            verify_snap(static_cast<long>(rounded)))
            value = rounded;
    }
    std::sort(values.begin(), values.end());

    Spectrum s;
    s.mode = Spectrum::Mode::approximate;
    s.tolerance = tol;
    for (double value : values) {
        if (!s.numeric.empty() && std::abs(value - s.numeric.back().first) <= tol)
            ++s.numeric.back().second;
        else
            s.numeric.push_back({value, 1});
    }
    return s;
}

Spectrum auto_spectrum(const Matrix& m, double tol) {
    if (auto exact = exact_spectrum(m)) return *exact;
    return numeric_spectrum(m, tol);
}

Spectrum spectrum_diff(const Spectrum& s1, const Spectrum& s2) {
    if (s1.mode == Spectrum::Mode::exact && s2.mode == Spectrum::Mode::exact) {
        std::map<Rat, int> counts;
        for (auto& [v, m] : s1.rational) counts[v] += m;
        for (auto& [v, m] : s2.rational) {
            auto it = counts.find(v);
            if (it == counts.end() || it->second < m)
                throw std::invalid_argument("spectrum_diff: second spectrum not contained in first (value " +
                                            rat_to_string(v) + ")");
            it->second -= m;
        }
        Spectrum out;
        out.mode = Spectrum::Mode::exact;
        for (auto& [v, m] : counts)
            if (m > 0) out.rational.push_back({v, m});
        return out;
    }

    // numeric path: greedy matching on sorted expansions
    double tol = std::max({s1.tolerance, s2.tolerance, 1e-12});
    auto a = s1.expanded();
    auto b = s2.expanded();
    std::vector<bool> used(a.size(), false);
    for (double value : b) {
        int best = -1;
        double best_gap = tol;
        for (size_t i = 0; i < a.size(); ++i) {
            if (used[i]) continue;
            double gap = std::abs(a[i] - value);
            if (gap <= best_gap) {
                best_gap = gap;
                best = static_cast<int>(i);
            }
        }
        if (best < 0)
            throw std::invalid_argument("spectrum_diff: second spectrum not contained in first (value " +
                                        std::to_string(value) + ")");
        used[best] = true;
    }
    Spectrum out;
    out.mode = Spectrum::Mode::approximate;
    out.tolerance = tol;
    for (size_t i = 0; i < a.size(); ++i) {
        if (used[i]) continue;
        if (!out.numeric.empty() && std::abs(a[i] - out.numeric.back().first) <= tol)
            ++out.numeric.back().second;
        else
            out.numeric.push_back({a[i], 1});
    }
    return out;
}

int JointSpectrum::distinct_pairs() const {
    return mode == Spectrum::Mode::exact ? static_cast<int>(exact.size()) : static_cast<int>(approx.size());
}

int JointSpectrum::size() const {
    int total = 0;
    if (mode == Spectrum::Mode::exact)
        for (auto& p : exact) total += p.multiplicity;
    else
        for (auto& p : approx) total += p.multiplicity;
    return total;
}

namespace {

// Smallest t >= 1 for which lambda + lambda_bar/t is injective on the given
// value grids. Throws after t = 10^6.
long separating_fraction(const std::vector<Rat>& first, const std::vector<Rat>& second) {
    for (long t = 1; t <= 1000000; ++t) {
        std::set<Rat> seen;
        bool ok = true;
        for (const Rat& a : first) {
            for (const Rat& b : second) {
                Rat combined = a + b / Rat(t);
                if (!seen.insert(combined).second) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return t;
    }
    throw std::runtime_error("no separating unit fraction found up to t = 10^6");
}

long separating_fraction_numeric(const std::vector<double>& first, const std::vector<double>& second,
                                 double min_separation) {
    for (long t = 1; t <= 1000000; ++t) {
        std::vector<double> combined;
        for (double a : first)
            for (double b : second) combined.push_back(a + b / static_cast<double>(t));
        std::sort(combined.begin(), combined.end());
        bool ok = true;
        for (size_t i = 0; i + 1 < combined.size(); ++i)
            if (combined[i + 1] - combined[i] < min_separation) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    throw std::runtime_error("no separating unit fraction found up to t = 10^6 at the required separation");
}

Rat rayleigh_quotient(const Matrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> mv = m * v;
    Rat num = 0, den = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        num += v[i] * mv[i];
        den += v[i] * v[i];
    }
    return num / den;
}

bool is_eigenvector(const Matrix& m, const std::vector<Rat>& v, const Rat& value) {
    std::vector<Rat> mv = m * v;
    for (size_t i = 0; i < v.size(); ++i)
        if (mv[i] != value * v[i]) return false;
    return true;
}

}  // namespace

JointSpectrum joint_spectrum(const Matrix& m1, const Matrix& m2, double tol) {
    require_symmetric(m1);
    require_symmetric(m2);
    if (m1.rows() != m2.rows()) throw std::invalid_argument("joint spectrum requires matrices of equal size");
    if (!commutator_is_zero(m1, m2)) throw std::invalid_argument("joint spectrum requires commuting matrices");

    int n = m1.rows();
    auto s1 = exact_spectrum(m1);
    auto s2 = exact_spectrum(m2);

    JointSpectrum joint;
    if (s1 && s2) {
        joint.mode = Spectrum::Mode::exact;
        std::vector<Rat> values1, values2;
        for (auto& [v, m] : s1->rational) values1.push_back(v);
        for (auto& [v, m] : s2->rational) values2.push_back(v);
        long t = separating_fraction(values1, values2);
        joint.beta = Rat(1, t);
        joint.beta.canonicalize();

        Matrix combined = m1 + joint.beta * m2;
        // candidate sums, in ascending order of the combined eigenvalue
        std::vector<std::tuple<Rat, Rat, Rat>> candidates;
        for (const Rat& a : values1)
            for (const Rat& b : values2) candidates.push_back({a + joint.beta * b, a, b});
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });

        int found = 0;
        for (const auto& [theta, a, b] : candidates) {
            if (found == n) break;
            Matrix shifted = combined;
            for (int i = 0; i < n; ++i) shifted(i, i) -= theta;
            auto kernel = nullspace(shifted);
            if (kernel.empty()) continue;
            // the common eigenvectors carry both eigenvalues; read them back
            // as Rayleigh quotients and confirm the eigen-equations exactly
            Rat lambda = rayleigh_quotient(m1, kernel.front());
            Rat lambda_bar = rayleigh_quotient(m2, kernel.front());
            if (lambda != a || lambda_bar != b)
                throw std::logic_error("joint eigenspace produced an unexpected eigenvalue pair");
            for (const auto& v : kernel)
                if (!is_eigenvector(m1, v, lambda) || !is_eigenvector(m2, v, lambda_bar))
                    throw std::logic_error("joint eigenspace is not a common eigenspace");
            joint.exact.push_back({lambda, lambda_bar, static_cast<int>(kernel.size())});
            found += static_cast<int>(kernel.size());
        }
        if (found != n) throw std::logic_error("joint eigenspaces do not fill the space");

        // projections must reproduce the individual spectra
        std::map<Rat, int> proj1, proj2;
        for (auto& p : joint.exact) {
            proj1[p.lambda] += p.multiplicity;
            proj2[p.lambda_bar] += p.multiplicity;
        }
        for (auto& [v, m] : s1->rational)
            if (proj1[v] != m) throw std::logic_error("joint spectrum projection mismatch (first matrix)");
        for (auto& [v, m] : s2->rational)
            if (proj2[v] != m) throw std::logic_error("joint spectrum projection mismatch (second matrix)");
        return joint;
    }

    // numeric path
    joint.mode = Spectrum::Mode::approximate;
    Spectrum n1 = numeric_spectrum(m1, tol);
    Spectrum n2 = numeric_spectrum(m2, tol);
    std::vector<double> values1, values2;
    for (auto& [v, m] : n1.numeric) values1.push_back(v);
    for (auto& [v, m] : n2.numeric) values2.push_back(v);
    double separation = 10.0 * tol;
    long t = separating_fraction_numeric(values1, values2, separation);
    joint.beta = Rat(1, t);
    joint.beta.canonicalize();

    Matrix combined = m1 + joint.beta * m2;
    auto eig = symmetric_eigen(combined);

    auto cluster_value = [&](const std::vector<double>& vec, const Matrix& m) {
        double num = 0, den = 0;
        std::vector<double> mv(vec.size(), 0.0);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) mv[r] += rat_to_double(m(r, c)) * vec[c];
        for (size_t i = 0; i < vec.size(); ++i) {
            num += vec[i] * mv[i];
            den += vec[i] * vec[i];
        }
        return num / den;
    };

    joint.min_gap = std::numeric_limits<double>::infinity();
    size_t i = 0;
    while (i < eig.values.size()) {
        size_t j = i + 1;
        while (j < eig.values.size() && eig.values[j] - eig.values[j - 1] <= separation) ++j;
        double lambda = 0, lambda_bar = 0;
        for (size_t k = i; k < j; ++k) {
            lambda += cluster_value(eig.vectors[k], m1);
            lambda_bar += cluster_value(eig.vectors[k], m2);
        }
        int mult = static_cast<int>(j - i);
        joint.approx.push_back({lambda / mult, lambda_bar / mult, mult});
        if (j < eig.values.size()) joint.min_gap = std::min(joint.min_gap, eig.values[j] - eig.values[j - 1]);
        i = j;
    }
    return joint;
}

}  // namespace tokenalg
