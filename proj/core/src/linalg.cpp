#include "tokenalg/linalg.hpp"

#include <stdexcept>

namespace tokenalg {

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    int n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    if (n == 0) return Poly(std::move(c));
    Matrix aux = m;
    c[n - 1] = -aux.trace();
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) aux(i, i) += c[n - k + 1];
        aux = m * aux;
        c[n - k] = -aux.trace() / k;
    }
    return Poly(std::move(c));
}

// Clears denominators row by row, then runs fraction-free elimination on the
// resulting integer matrix. Row scaling leaves the rank unchanged.
int rank(const Matrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den().get_mpz_t());
        for (int c = 0; c < cols; ++c) {
            Rat scaled = Rat(lcm) * m(r, c);
            a[r][c] = scaled.get_num();
        }
    }

    int rk = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rk], a[pivot]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class num = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
                mpz_class rem;
                mpz_tdiv_qr(a[r][c].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("fraction-free elimination produced a non-exact division");
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::vector<std::vector<Rat>> nullspace(const Matrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m(r, c);

    std::vector<int> pivot_col;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[lead], a[pivot]);
        Rat inv = Rat(1) / a[lead][col];
        for (int c = col; c < cols; ++c) a[lead][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[lead][c];
        }
        pivot_col.push_back(col);
        ++lead;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix eval_matrix_poly(const Poly& p, const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    int n = m.rows();
    Matrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        const Rat& c = p.coeff(i);
        if (c != 0)
            for (int d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

Matrix eval_bivariate_monomials(int a, int b, const Matrix& m1, const Matrix& m2) {
    if (!m1.is_square() || !m2.is_square() || m1.rows() != m2.rows())
        throw std::invalid_argument("bivariate monomial requires square matrices of equal size");
    return mat_pow(m1, a) * mat_pow(m2, b);
}

int matrix_span_rank(const std::vector<Matrix>& mats) {
    if (mats.empty()) return 0;
    int rows = mats[0].rows(), cols = mats[0].cols();
    Matrix stacked(static_cast<int>(mats.size()), rows * cols);
    for (size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != rows || mats[i].cols() != cols)
            throw std::invalid_argument("span rank requires matrices of equal shape");
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) stacked(static_cast<int>(i), r * cols + c) = mats[i](r, c);
    }
    return rank(stacked);
}

int distinct_eigenvalue_count(const Matrix& m) {
    Poly p = char_poly(m);
    Poly g = poly_gcd(p, poly_derivative(p));
    return p.degree() - g.degree();
}

}  // namespace tokenalg
