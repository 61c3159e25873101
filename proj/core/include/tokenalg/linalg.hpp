#pragma once

#include <vector>

#include "tokenalg/matrix.hpp"
#include "tokenalg/polynomial.hpp"

namespace tokenalg {

/// Characteristic polynomial det(xI - M), monic of degree = size, computed
/// with the Faddeev-LeVerrier recurrence over rationals.
Poly char_poly(const Matrix& m);

/// Exact rank via fraction-free (Bareiss) elimination after clearing row
/// denominators.
int rank(const Matrix& m);

/// Basis of the kernel {v : Mv = 0}, computed by rational Gauss-Jordan
/// elimination.
std::vector<std::vector<Rat>> nullspace(const Matrix& m);

/// Horner evaluation p(M).
Matrix eval_matrix_poly(const Poly& p, const Matrix& m);

/// M1^a * M2^b.
Matrix eval_bivariate_monomials(int a, int b, const Matrix& m1, const Matrix& m2);

/// Rank of the span of the given matrices, vectorized as rows.
int matrix_span_rank(const std::vector<Matrix>& mats);

/// Number of distinct eigenvalues: degree of char_poly / gcd(char_poly,
/// char_poly'). Exact for every rational matrix.
int distinct_eigenvalue_count(const Matrix& m);

}  // namespace tokenalg
