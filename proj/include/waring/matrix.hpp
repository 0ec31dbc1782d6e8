#pragma once

// Small dense matrices over an exact field, with rank / nullspace / determinant.
// The Rational overloads use fraction-free (Bareiss) elimination on an
// integer-scaled copy; the templates do plain Gauss-Jordan and serve every
// other field (number fields in particular).

#include <cstddef>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (x.size() != cols_) throw RangeError("matrix-vector size mismatch");
        std::vector<F> y(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
        return y;
    }

    /// Matrix built from column vectors of common length.
    static Matrix from_columns(const std::vector<std::vector<F>>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        const F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            const F factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> copy = m;
    return rref_in_place(copy).size();
}

/// Basis of the right kernel; one vector per free column, with a 1 in that slot.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    Matrix<F> r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw RangeError("determinant of a non-square matrix");
    Matrix<F> a = m;
    F det(1);
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t p = col;
        while (p < a.rows() && is_zero(a(p, col))) ++p;
        if (p == a.rows()) return F(0);
        if (p != col) {
            a.swap_rows(p, col);
            det = -det;
        }
        det = det * a(col, col);
        const F inv = F(1) / a(col, col);
        for (std::size_t i = col + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, col))) continue;
            const F factor = a(i, col) * inv;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(col, j);
        }
    }
    return det;
}

// Fraction-free specialisations for the rationals.
std::size_t rank(const Matrix<Rational>& m);
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);
Rational determinant(const Matrix<Rational>& m);

/// Integer row echelon form from Bareiss elimination, exposed for testing.
struct BareissEchelon {
    std::vector<std::vector<Integer>> rows;  // echelon rows (only the first rank() are nonzero)
    std::vector<std::size_t> pivots;
    int sign = 1;  // parity of row swaps
};
BareissEchelon bareiss_echelon(const Matrix<Rational>& m);

}  // namespace waring
