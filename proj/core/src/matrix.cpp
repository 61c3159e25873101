#include "tokenalg/matrix.hpp"

#include <stdexcept>

namespace tokenalg {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

int Matrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    return r * cols_ + c;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::all_ones(int rows, int cols) {
    Matrix m(rows, cols);
    for (auto& e : m.entries_) e = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rat Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c(r, j) = a(r, j) + b(r, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c(r, j) = a(r, j) - b(r, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& v = a(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

Matrix operator*(const Rat& s, const Matrix& m) {
    Matrix c(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int j = 0; j < m.cols(); ++j) c(r, j) = s * m(r, j);
    return c;
}

std::vector<Rat> operator*(const Matrix& m, const std::vector<Rat>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) out[r] += m(r, c) * v[c];
    return out;
}

Matrix mat_pow(const Matrix& m, int exponent) {
    if (!m.is_square()) throw std::invalid_argument("power of non-square matrix");
    if (exponent < 0) throw std::invalid_argument("negative matrix power");
    Matrix result = Matrix::identity(m.rows());
    for (int i = 0; i < exponent; ++i) result = result * m;
    return result;
}

bool commutator_is_zero(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("commutator requires square matrices of equal size");
    return (a * b - b * a).is_zero();
}

}  // namespace tokenalg
