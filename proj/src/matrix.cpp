#include "waring/matrix.hpp"

namespace waring {

BareissEchelon bareiss_echelon(const Matrix<Rational>& m) {
    BareissEchelon e;
    e.rows.assign(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) e.rows[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }

    auto& a = e.rows;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(a[p][col])) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            std::swap(a[p], a[row]);
            e.sign = -e.sign;
        }
        const Integer& piv = a[row][col];
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                Integer v = piv * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = piv;
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix<Rational>& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
    const BareissEchelon e = bareiss_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const std::size_t pc = e.pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (!is_zero(v[j]) && !is_zero(e.rows[k][j])) acc += Rational(e.rows[k][j]) * v[j];
            v[pc] = -acc / Rational(e.rows[k][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw RangeError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer s = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= s;
    }
    const BareissEchelon e = bareiss_echelon(m);
    if (e.pivots.size() < m.rows()) return 0;
    Rational det(e.rows[m.rows() - 1][m.cols() - 1] * e.sign);
    return det / scale;
}

}  // namespace waring
