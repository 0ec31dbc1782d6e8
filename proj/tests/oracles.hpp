#pragma once

// Independent reference computations used as test oracles. Deliberately
// naive: plain Gaussian elimination over mpq_class and direct expansions,
// sharing no code with the library's elimination routines.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

inline int rank(Mat m) {
    int r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[static_cast<std::size_t>(r)]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
            const Q f = m[i][c] / m[static_cast<std::size_t>(r)][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

inline Q binom(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(b);
}

/// Hankel matrix of a_i = c_i / C(d,i), written out directly.
inline Mat hankel(const std::vector<Q>& c, int r) {
    const int d = static_cast<int>(c.size()) - 1;
    Mat m(static_cast<std::size_t>(d - r + 1), std::vector<Q>(static_cast<std::size_t>(r + 1)));
    for (int j = 0; j <= d - r; ++j)
        for (int k = 0; k <= r; ++k)
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                c[static_cast<std::size_t>(j + k)] / binom(d, j + k);
    return m;
}

/// Coefficients of (a u + b t)^d.
inline std::vector<Q> power(const Q& a, const Q& b, int d) {
    std::vector<Q> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        Q v = binom(d, i);
        for (int k = 0; k < d - i; ++k) v *= a;
        for (int k = 0; k < i; ++k) v *= b;
        c[static_cast<std::size_t>(i)] = v;
    }
    return c;
}

/// Random rational with numerator and denominator at most `bound` in size.
inline Q random_rational(std::mt19937_64& rng, int bound = 100) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline std::vector<Q> random_coeffs(std::mt19937_64& rng, int d, int bound = 100) {
    std::vector<Q> c;
    do {
        c.clear();
        for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, bound));
    } while (std::all_of(c.begin(), c.end(), [](const Q& v) { return v == 0; }));
    return c;
}

}  // namespace oracle
