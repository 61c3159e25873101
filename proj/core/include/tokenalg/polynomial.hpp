#pragma once

#include <utility>
#include <vector>

#include "tokenalg/rational.hpp"

namespace tokenalg {

/// Univariate polynomial with rational coefficients, stored in ascending
/// degree with trailing zeros trimmed. The zero polynomial has no
/// coefficients and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coefficients);

    static Poly constant(const Rat& c);
    static Poly x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;

    bool operator==(const Poly& other) const = default;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& p);

/// Quotient and remainder of exact polynomial long division.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// True iff p divides q exactly. p must be nonzero.
bool poly_divides(const Poly& p, const Poly& q);

/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b);

Poly poly_derivative(const Poly& p);

}  // namespace tokenalg
