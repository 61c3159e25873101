#pragma once

#include <vector>

#include "tokenalg/rational.hpp"

namespace tokenalg {

/// Dense matrix over arbitrary-precision rationals. All arithmetic is exact;
/// equality is entrywise.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix all_ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return entries_[index(r, c)]; }
    const Rat& operator()(int r, int c) const { return entries_[index(r, c)]; }

    const std::vector<Rat>& entries() const { return entries_; }

    Matrix transpose() const;
    Rat trace() const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Matrix& other) const = default;

  private:
    int index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rat& s, const Matrix& m);

std::vector<Rat> operator*(const Matrix& m, const std::vector<Rat>& v);

Matrix mat_pow(const Matrix& m, int exponent);

/// True iff AB - BA vanishes, tested exactly.
bool commutator_is_zero(const Matrix& a, const Matrix& b);

}  // namespace tokenalg
