#include "tokenalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokenalg {

namespace {
const Rat kZero(0);
}

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[i];
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> c(p.coeffs());
    for (auto& e : c) e *= s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<Rat> quot(dn - dd + 1, Rat(0));
    const Rat& lead = den.coeff(dd);
    for (int i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lead;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool poly_divides(const Poly& p, const Poly& q) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial divisor");
    return poly_divmod(q, p).second.is_zero();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.coeff(a.degree())) * a;
}

Poly poly_derivative(const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Rat> c(p.degree(), Rat(0));
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = Rat(i) * p.coeff(i);
    return Poly(std::move(c));
}

}  // namespace tokenalg
