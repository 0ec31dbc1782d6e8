#pragma once

// Binary forms f(u, t) = sum_i c_i u^{d-i} t^i with exact coefficients, and
// the elementary algebra the rank machinery needs: partials, homogeneous gcd,
// square-free structure and multiplicities at points of P^1.
//
// Everything is homogeneous. Dehomogenisation always happens at u = 1
// (x = t/u) and the power of u is tracked separately, so the point (0:1)
// is never lost; the point A = (1:0) corresponds to the factor t.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/poly.hpp"
#include "waring/rational.hpp"

namespace waring {

template <class F>
class BasicBinaryForm {
public:
    /// The zero form of degree 0.
    BasicBinaryForm() : c_(1, F(0)) {}
    explicit BasicBinaryForm(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw RangeError("a binary form needs at least one coefficient");
    }

    static BasicBinaryForm zero(int degree) {
        return BasicBinaryForm(std::vector<F>(static_cast<std::size_t>(degree) + 1, F(0)));
    }
    /// c * u^{d-i} t^i
    static BasicBinaryForm monomial(int degree, int i, const F& c = F(1)) {
        auto f = zero(degree);
        f.c_[static_cast<std::size_t>(i)] = c;
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    F& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!detail::zero_of(v)) return false;
        return true;
    }

    friend bool operator==(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    friend BasicBinaryForm operator+(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        if (a.degree() != b.degree()) throw DegreeMismatch("adding forms of different degrees");
        std::vector<F> c(a.c_.size(), F(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return BasicBinaryForm(std::move(c));
    }
    friend BasicBinaryForm operator-(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        return a + F(-1) * b;
    }
    friend BasicBinaryForm operator*(const F& s, const BasicBinaryForm& a) {
        std::vector<F> c(a.c_.size(), F(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
        return BasicBinaryForm(std::move(c));
    }
    friend BasicBinaryForm operator*(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return BasicBinaryForm(std::move(c));
    }

private:
    std::vector<F> c_;
};

using BinaryForm = BasicBinaryForm<Rational>;

/// Apolar coordinates a_i = c_i / binomial(d, i). A point (alpha:beta) of the
/// rational normal curve, i.e. the form (alpha u + beta t)^d, has apolar
/// coordinates alpha^{d-i} beta^i.
struct ApolarCoeffs {
    int degree = 0;
    std::vector<Rational> entries;
};

ApolarCoeffs apolar_coeffs(const BinaryForm& f);
BinaryForm from_apolar(const ApolarCoeffs& a);

template <class F>
std::vector<F> apolar_entries(const BasicBinaryForm<F>& f) {
    const int d = f.degree();
    std::vector<F> a(f.coeffs().size(), F(0));
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] / F(Rational(binomial(d, i)));
    return a;
}

/// A point (a:b) of P^1 with exact rational coordinates, canonicalised so the
/// first nonzero coordinate is 1.
class P1Point {
public:
    P1Point(const Rational& a, const Rational& b);

    static P1Point cusp_source() { return P1Point(1, 0); }  // A = (1:0)

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    /// The linear form b*u - a*t, vanishing at this point.
    BinaryForm vanishing_form() const;
    /// The linear form a*u + b*t whose d-th power is this point on the curve.
    BinaryForm linear_form() const;

    friend bool operator==(const P1Point& x, const P1Point& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const P1Point& x, const P1Point& y) {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

    std::string to_string() const;

private:
    Rational a_, b_;
};

template <class F>
struct SchemeFactor {
    BasicBinaryForm<F> form;  // square-free, normalised (first nonzero coefficient 1)
    int multiplicity = 1;
};

/// A zero-dimensional subscheme of P^1 (equivalently of the rational normal
/// curve), stored as pairwise coprime square-free factors with multiplicities.
template <class F>
class BasicZeroScheme {
public:
    BasicZeroScheme() = default;
    explicit BasicZeroScheme(std::vector<SchemeFactor<F>> factors) : factors_(std::move(factors)) {}

    const std::vector<SchemeFactor<F>>& factors() const { return factors_; }
    int degree() const {
        int deg = 0;
        for (const auto& f : factors_) deg += f.multiplicity * f.form.degree();
        return deg;
    }
    bool is_reduced() const {
        for (const auto& f : factors_)
            if (f.multiplicity != 1) return false;
        return true;
    }

    /// The defining form prod factor^multiplicity (degree = scheme degree).
    BasicBinaryForm<F> defining_form() const {
        BasicBinaryForm<F> g(std::vector<F>{F(1)});
        for (const auto& f : factors_)
            for (int k = 0; k < f.multiplicity; ++k) g = g * f.form;
        return g;
    }
    /// W_red: every multiplicity set to 1.
    BasicZeroScheme reduced() const {
        auto out = factors_;
        for (auto& f : out) f.multiplicity = 1;
        return BasicZeroScheme(std::move(out));
    }

private:
    std::vector<SchemeFactor<F>> factors_;
};

using ZeroScheme = BasicZeroScheme<Rational>;

// ---------------------------------------------------------------------------
// Generic homogeneous algebra.

/// Multiplicity of u as a factor: number of trailing zero coefficients.
template <class F>
int u_valuation(const BasicBinaryForm<F>& f) {
    int k = 0;
    for (int i = f.degree(); i >= 0 && is_zero(f[static_cast<std::size_t>(i)]); --i) ++k;
    return k;
}

/// f(1, x) as a univariate polynomial.
template <class F>
UPoly<F> dehomogenize(const BasicBinaryForm<F>& f) {
    return UPoly<F>(f.coeffs());
}

/// Degree-`degree` homogenisation of p(x), x = t/u.
template <class F>
BasicBinaryForm<F> homogenize(const UPoly<F>& p, int degree) {
    if (p.degree() > degree) throw RangeError("homogenisation degree too small");
    std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
    return BasicBinaryForm<F>(std::move(c));
}

/// Scales so that the first nonzero coefficient is 1.
template <class F>
BasicBinaryForm<F> normalized(const BasicBinaryForm<F>& f) {
    for (const auto& v : f.coeffs())
        if (!is_zero(v)) return (F(1) / v) * f;
    return f;
}

template <class F>
bool proportional(const BasicBinaryForm<F>& f, const BasicBinaryForm<F>& g) {
    return f.degree() == g.degree() && normalized(f) == normalized(g);
}

template <class F>
BasicBinaryForm<F> partial_u(const BasicBinaryForm<F>& f) {
    const int d = f.degree();
    if (d == 0) return BasicBinaryForm<F>::zero(0);
    std::vector<F> c(static_cast<std::size_t>(d), F(0));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = F(d - i) * f[static_cast<std::size_t>(i)];
    return BasicBinaryForm<F>(std::move(c));
}

template <class F>
BasicBinaryForm<F> partial_t(const BasicBinaryForm<F>& f) {
    const int d = f.degree();
    if (d == 0) return BasicBinaryForm<F>::zero(0);
    std::vector<F> c(static_cast<std::size_t>(d), F(0));
    for (int i = 1; i <= d; ++i) c[static_cast<std::size_t>(i - 1)] = F(i) * f[static_cast<std::size_t>(i)];
    return BasicBinaryForm<F>(std::move(c));
}

/// Homogeneous gcd, normalised; gcd with the zero form is the other form.
template <class F>
BasicBinaryForm<F> form_gcd(const BasicBinaryForm<F>& f, const BasicBinaryForm<F>& g) {
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    const int k = std::min(u_valuation(f), u_valuation(g));
    const UPoly<F> p = gcd(dehomogenize(f), dehomogenize(g));
    const int deg = p.degree() + k;
    auto h = homogenize(p, deg);
    return normalized(h);
}

/// Exact quotient f / g; throws if g does not divide f.
template <class F>
BasicBinaryForm<F> exact_divide(const BasicBinaryForm<F>& f, const BasicBinaryForm<F>& g) {
    if (g.is_zero()) throw RangeError("division by the zero form");
    const int ku = u_valuation(g);
    if (u_valuation(f) < ku && !f.is_zero()) throw RangeError("form does not divide");
    auto [q, r] = divmod(dehomogenize(f), dehomogenize(g));
    if (!r.is_zero()) throw RangeError("form does not divide");
    return homogenize(q, f.degree() - g.degree());
}

template <class F>
bool divides(const BasicBinaryForm<F>& g, const BasicBinaryForm<F>& f) {
    if (f.is_zero()) return true;
    if (g.degree() > f.degree() || u_valuation(g) > u_valuation(f)) return false;
    return divmod(dehomogenize(f), dehomogenize(g)).second.is_zero();
}

/// Square-free iff the two partials are coprime. This also catches a repeated
/// factor at (0:1) (a power of u) and at (1:0) (a power of t).
template <class F>
bool is_square_free(const BasicBinaryForm<F>& f) {
    if (f.is_zero()) throw ZeroFormError("square-free test of the zero form");
    if (f.degree() <= 1) return true;
    return form_gcd(partial_u(f), partial_t(f)).degree() == 0;
}

/// Yun decomposition f = const * prod g_i^{m_i}; a power of u appears as its
/// own factor.
template <class F>
BasicZeroScheme<F> squarefree_decompose(const BasicBinaryForm<F>& f) {
    if (f.is_zero()) throw ZeroFormError("square-free decomposition of the zero form");
    std::vector<SchemeFactor<F>> factors;
    const int k = u_valuation(f);
    for (auto& [part, mult] : squarefree_parts(dehomogenize(f)))
        factors.push_back({normalized(homogenize(part, part.degree())), mult});
    if (k > 0) factors.push_back({BasicBinaryForm<F>(std::vector<F>{F(1), F(0)}), k});
    return BasicZeroScheme<F>(std::move(factors));
}

/// Largest k with (linear form vanishing at p)^k dividing f.
template <class F>
int multiplicity_at(const BasicBinaryForm<F>& f, const P1Point& p) {
    if (f.is_zero()) throw ZeroFormError("multiplicity in the zero form");
    const BinaryForm lin = p.vanishing_form();
    BasicBinaryForm<F> ell(std::vector<F>{F(lin[0]), F(lin[1])});
    BasicBinaryForm<F> g = f;
    int k = 0;
    while (g.degree() > 0 && divides(ell, g)) {
        g = exact_divide(g, ell);
        ++k;
    }
    return k;
}

template <class F>
int multiplicity_at(const BasicZeroScheme<F>& w, const P1Point& p) {
    int total = 0;
    for (const auto& factor : w.factors()) total += factor.multiplicity * multiplicity_at(factor.form, p);
    return total;
}

/// Value f(alpha, beta).
template <class F>
F evaluate(const BasicBinaryForm<F>& f, const F& alpha, const F& beta) {
    F acc(0);
    const int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        F term = f[static_cast<std::size_t>(i)];
        if (is_zero(term)) continue;
        for (int k = 0; k < d - i; ++k) term = term * alpha;
        for (int k = 0; k < i; ++k) term = term * beta;
        acc = acc + term;
    }
    return acc;
}

/// (alpha u + beta t)^d.
template <class F>
BasicBinaryForm<F> linear_power(const F& alpha, const F& beta, int d) {
    std::vector<F> c(static_cast<std::size_t>(d) + 1, F(0));
    for (int i = 0; i <= d; ++i) {
        F v = F(Rational(binomial(d, i)));
        for (int k = 0; k < d - i; ++k) v = v * alpha;
        for (int k = 0; k < i; ++k) v = v * beta;
        c[static_cast<std::size_t>(i)] = v;
    }
    return BasicBinaryForm<F>(std::move(c));
}

// ---------------------------------------------------------------------------
// Rational-only text formats.

/// Grammar: `d=<int>; [<q0>,<q1>,...,<qd>]`.
BinaryForm parse_form(std::string_view text);
std::string render_form(const BinaryForm& f);

/// Human-readable polynomial in u and t, e.g. "u^2 + t^2" or "3*u - 2/5*t".
std::string to_expression(const BinaryForm& f);
/// Inverse of to_expression. The degree is inferred from the terms unless
/// `degree` is given (needed for the zero form).
BinaryForm parse_expression(std::string_view text, std::optional<int> degree = std::nullopt);

}  // namespace waring
