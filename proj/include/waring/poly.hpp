#pragma once

// Dense univariate polynomials over an exact field F (Rational or NfElement).
// Coefficients are stored low degree first and kept trimmed.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

namespace detail {
// Unqualified call so that ADL finds is_zero for field types declared later.
template <class F>
bool zero_of(const F& v) {
    return is_zero(v);
}
}  // namespace detail

template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const F& v) { return UPoly(std::vector<F>{v}); }
    static UPoly monomial(const F& v, int power) {
        std::vector<F> c(static_cast<std::size_t>(power) + 1, F(0));
        c.back() = v;
        return UPoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    F coeff(int i) const {
        return (i < 0 || i > degree()) ? F(0) : c_[static_cast<std::size_t>(i)];
    }
    const F& lead() const { return c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<F> c = a.c_;
        for (auto& v : c) v = -v;
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const F& s, const UPoly& a) {
        std::vector<F> c = a.c_;
        for (auto& v : c) v = s * v;
        return UPoly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && detail::zero_of(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Euclidean division; throws on division by zero.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
    if (b.is_zero()) throw RangeError("polynomial division by zero");
    std::vector<F> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly<F>{}, a};
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
    const F inv_lead = F(1) / b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        const F q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (is_zero(q)) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - q * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly<F>(std::move(quo)), UPoly<F>(std::move(rem))};
}

template <class F>
UPoly<F> monic(const UPoly<F>& a) {
    if (a.is_zero()) return a;
    return (F(1) / a.lead()) * a;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        UPoly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Extended Euclid: returns (g, s) with g = gcd(a, m) monic and s·a ≡ g (mod m).
template <class F>
std::pair<UPoly<F>, UPoly<F>> gcd_with_cofactor(const UPoly<F>& a, const UPoly<F>& m) {
    UPoly<F> r0 = m, r1 = a;
    UPoly<F> s0, s1 = UPoly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly<F> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) return {r0, s0};
    const F inv = F(1) / r0.lead();
    return {inv * r0, inv * s0};
}

template <class F>
UPoly<F> derivative(const UPoly<F>& a) {
    if (a.degree() <= 0) return {};
    std::vector<F> c(static_cast<std::size_t>(a.degree()), F(0));
    for (int i = 1; i <= a.degree(); ++i) c[static_cast<std::size_t>(i - 1)] = F(i) * a.coeff(i);
    return UPoly<F>(std::move(c));
}

/// Yun's square-free decomposition in characteristic 0:
/// a = lc · Π g_i^{i}, returned as (g_i, i) pairs with non-constant g_i, monic.
template <class F>
std::vector<std::pair<UPoly<F>, int>> squarefree_parts(const UPoly<F>& a) {
    std::vector<std::pair<UPoly<F>, int>> out;
    if (a.degree() <= 0) return out;
    const UPoly<F> da = derivative(a);
    UPoly<F> g = gcd(a, da);
    UPoly<F> b = divmod(a, g).first;
    UPoly<F> c = divmod(da, g).first;
    UPoly<F> d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly<F> h = gcd(b, d);
        if (h.degree() > 0) out.emplace_back(monic(h), i);
        b = divmod(b, h).first;
        c = divmod(d, h).first;
        d = c - derivative(b);
    }
    return out;
}

}  // namespace waring
