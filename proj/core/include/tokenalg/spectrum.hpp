#pragma once

#include <optional>
#include <vector>

#include "tokenalg/matrix.hpp"

namespace tokenalg {

/// Eigenvalue multiset of a symmetric matrix. Exact entries are rational;
/// approximate entries carry the tolerance they were grouped at.
struct Spectrum {
    enum class Mode { exact, approximate };

    Mode mode = Mode::exact;
    double tolerance = 0.0;
    std::vector<std::pair<Rat, int>> rational;    // ascending, exact mode
    std::vector<std::pair<double, int>> numeric;  // ascending, approximate mode

    int size() const;
    int distinct_count() const;

    /// Values expanded by multiplicity, as doubles in either mode.
    std::vector<double> expanded() const;

    bool operator==(const Spectrum& other) const = default;
};

/// Exact rational spectrum, obtained by scaling to an integer matrix and
/// extracting the integer roots of its characteristic polynomial by divisor
/// search inside the Gershgorin bound. Empty when the polynomial does not
/// split over the rationals.
std::optional<Spectrum> exact_spectrum(const Matrix& m);

/// Jacobi eigenvalues grouped at tol. Values within 1e-6 of an integer are
/// snapped, each snap verified exactly against the characteristic polynomial;
/// a failed verification keeps the unsnapped value.
Spectrum numeric_spectrum(const Matrix& m, double tol);

/// exact_spectrum when it succeeds, numeric_spectrum otherwise.
Spectrum auto_spectrum(const Matrix& m, double tol);

/// Multiset difference s1 minus s2; s2 must be contained in s1.
Spectrum spectrum_diff(const Spectrum& s1, const Spectrum& s2);

/// Simultaneous eigenvalue pairs of two commuting symmetric matrices,
/// read off the common eigenvectors of m1 + beta*m2.
struct JointSpectrum {
    Spectrum::Mode mode = Spectrum::Mode::exact;
    Rat beta{1};       // chosen unit fraction 1/t
    double min_gap = 0.0;  // smallest separation certified on the numeric path

    struct ExactPair {
        Rat lambda, lambda_bar;
        int multiplicity;
    };
    struct ApproxPair {
        double lambda, lambda_bar;
        int multiplicity;
    };
    std::vector<ExactPair> exact;
    std::vector<ApproxPair> approx;

    int distinct_pairs() const;
    int size() const;
};

JointSpectrum joint_spectrum(const Matrix& m1, const Matrix& m2, double tol = 1e-9);

/// Raw symmetric eigensolver (cyclic Jacobi): ascending eigenvalues and the
/// matching orthonormal eigenvectors as rows.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
EigenDecomposition symmetric_eigen(const Matrix& m);

}  // namespace tokenalg
