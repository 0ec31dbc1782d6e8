#pragma once

// Catalecticant (Hankel) matrices of binary forms and the Sylvester rank
// algorithm built on them.
//
// Convention: Cat_r(f) has d-r+1 rows and r+1 columns with entry (j, k) equal
// to the apolar coefficient a_{j+k}. A kernel vector (g_0, ..., g_r) is read as
// the degree-r form g = sum_k g_k u^{r-k} t^k; g vanishes at (alpha:beta)
// exactly when the point (alpha u + beta t)^d can take part in a
// decomposition of f. So the root (alpha:beta) of g pairs with the linear
// form alpha*u + beta*t.

#include <optional>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/matrix.hpp"

namespace waring {

template <class F>
struct BasicCatalecticant {
    int level = 0;
    Matrix<F> matrix;
};

using CatalecticantMatrix = BasicCatalecticant<Rational>;

template <class F>
BasicCatalecticant<F> catalecticant(const BasicBinaryForm<F>& f, int r) {
    const int d = f.degree();
    if (r < 0 || r > d) throw RangeError("catalecticant level " + std::to_string(r) + " outside [0, " + std::to_string(d) + "]");
    const std::vector<F> a = apolar_entries(f);
    Matrix<F> m(static_cast<std::size_t>(d - r + 1), static_cast<std::size_t>(r + 1));
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t k = 0; k < m.cols(); ++k) m(j, k) = a[j + k];
    return {r, std::move(m)};
}

/// Exact basis of the right kernel, each vector read as a degree-r form.
template <class F>
std::vector<BasicBinaryForm<F>> kernel_basis(const BasicCatalecticant<F>& cat) {
    std::vector<BasicBinaryForm<F>> out;
    for (auto& v : nullspace(cat.matrix)) out.emplace_back(std::move(v));
    return out;
}

/// Returns a square-free element of span(basis) if one exists.
///
/// A fast pass tries a handful of fixed combinations. If none is square-free,
/// every combination with coefficients in {0, ..., 2r-2}^k is tried: the
/// discriminant of the generic combination is homogeneous of degree 2r-2 in
/// the k coefficients, so vanishing on that grid means it vanishes identically.
template <class F>
std::optional<BasicBinaryForm<F>> find_squarefree_in_kernel(const std::vector<BasicBinaryForm<F>>& basis) {
    if (basis.empty()) throw RangeError("empty kernel basis");
    const int r = basis.front().degree();
    for (const auto& g : basis)
        if (g.degree() != r) throw DegreeMismatch("kernel basis forms of mixed degrees");

    auto combine = [&](const std::vector<int>& c) {
        BasicBinaryForm<F> g = BasicBinaryForm<F>::zero(r);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (c[j] != 0) g = g + F(c[j]) * basis[j];
        return g;
    };
    auto accept = [](const BasicBinaryForm<F>& g) { return !g.is_zero() && is_square_free(g); };

    if (r <= 1) return basis.front();
    if (basis.size() == 1) {
        if (accept(basis.front())) return basis.front();
        return std::nullopt;
    }

    const std::size_t k = basis.size();
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> c(k);
        for (std::size_t j = 0; j < k; ++j) c[j] = 1 + static_cast<int>((j * 7 + static_cast<std::size_t>(trial) * 3) % 11);
        auto g = combine(c);
        if (accept(g)) return g;
    }

    const int side = 2 * r - 1;
    std::vector<int> c(k, 0);
    while (true) {
        std::size_t j = 0;
        while (j < k && ++c[j] == side) c[j++] = 0;
        if (j == k) break;
        auto g = combine(c);
        if (accept(g)) return g;
    }
    return std::nullopt;
}

enum class WitnessKind { SquareFree, NonReduced };

/// Outcome of the Sylvester algorithm: the border rank w, the rank r and the
/// witness deciding between r = w and r = d + 2 - w.
template <class F>
struct BasicRankCertificate {
    int border_rank = 0;
    int rank = 0;
    int kernel_dimension = 0;  // dim ker Cat_w
    WitnessKind kind = WitnessKind::SquareFree;
    BasicBinaryForm<F> apolar_form;  // square-free element, or the non-reduced kernel generator
    BasicZeroScheme<F> scheme;       // square-free decomposition of apolar_form
};

using RankCertificate = BasicRankCertificate<Rational>;

/// Smallest r >= 1 with a nontrivial kernel, plus that kernel.
template <class F>
std::pair<int, std::vector<BasicBinaryForm<F>>> border_rank_with_kernel(const BasicBinaryForm<F>& f) {
    if (f.is_zero()) throw ZeroFormError("border rank of the zero form");
    const int d = f.degree();
    if (d == 0) {
        // Every linear form is apolar to a nonzero constant.
        return {1, {BasicBinaryForm<F>(std::vector<F>{F(1), F(0)}), BasicBinaryForm<F>(std::vector<F>{F(0), F(1)})}};
    }
    for (int r = 1; r <= d; ++r) {
        auto basis = kernel_basis(catalecticant(f, r));
        if (!basis.empty()) return {r, std::move(basis)};
    }
    throw RangeError("no apolar form found up to the degree");  // unreachable: Cat_d has one row
}

template <class F>
BasicRankCertificate<F> rank_certificate(const BasicBinaryForm<F>& f) {
    auto [w, basis] = border_rank_with_kernel(f);
    const int d = f.degree();
    BasicRankCertificate<F> cert;
    cert.border_rank = w;
    cert.kernel_dimension = static_cast<int>(basis.size());
    if (auto g = find_squarefree_in_kernel(basis)) {
        cert.rank = w;
        cert.kind = WitnessKind::SquareFree;
        cert.apolar_form = normalized(*g);
    } else {
        cert.rank = d + 2 - w;
        cert.kind = WitnessKind::NonReduced;
        cert.apolar_form = normalized(basis.front());
    }
    cert.scheme = squarefree_decompose(cert.apolar_form);
    return cert;
}

int border_rank(const BinaryForm& f);
RankCertificate rank(const BinaryForm& f);

struct BorderScheme {
    ZeroScheme scheme;
    bool unique = false;  // 2w <= d + 1
};

/// The scheme computing the border rank. Throws AmbiguousScheme when the
/// kernel at level w has dimension > 1 (use find_squarefree_in_kernel).
BorderScheme border_scheme(const BinaryForm& f);

/// Whether f lies in the span of the scheme cut out by g (deg g <= d + 1),
/// via the apolarity criterion Cat_{deg g}(f) * g = 0.
template <class F>
bool in_span(const BasicBinaryForm<F>& f, const BasicBinaryForm<F>& g) {
    const int d = f.degree();
    const int m = g.degree();
    if (m > d + 1) throw RangeError("scheme degree exceeds d + 1");
    if (m == d + 1) return true;
    const auto y = catalecticant(f, m).matrix.apply(g.coeffs());
    for (const auto& v : y)
        if (!is_zero(v)) return false;
    return true;
}

}  // namespace waring
