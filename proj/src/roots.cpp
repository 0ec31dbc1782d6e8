#include "waring/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace waring {

namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_double(const std::vector<cd>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    double bound = 0;
    for (int i = 0; i < m; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
    const double radius = std::isfinite(bound) ? 1.0 + bound : 1.0;

    std::vector<cd> z(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5, 2.0 * M_PI * k / m + 0.4);

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int i = 0; i < m; ++i) {
            cd p = c.back(), dp = 0;
            const cd zi = z[static_cast<std::size_t>(i)];
            for (int k = m - 1; k >= 0; --k) {
                dp = dp * zi + p;
                p = p * zi + c[static_cast<std::size_t>(k)];
            }
            if (p == cd(0)) continue;
            cd s = 0;
            for (int j = 0; j < m; ++j)
                if (j != i) s += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            const cd w = p / dp;
            const cd corr = w / (1.0 - w * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
            z[static_cast<std::size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(zi)));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

// Horner evaluation of p and p' at z.
void horner(const std::vector<BigComplex>& c, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    p = c.back();
    dp = BigComplex();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

}  // namespace

CertifiedRoots certified_roots(const std::vector<BigComplex>& coeffs_in, int precision_bits) {
    const int working = precision_bits + 32;
    PrecisionScope scope(working);

    std::vector<BigComplex> c = coeffs_in;
    while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
    if (c.empty()) throw ZeroFormError("roots of the zero polynomial");
    const int m = static_cast<int>(c.size()) - 1;
    CertifiedRoots out;
    if (m == 0) return out;

    // Double-precision starting values from a rescaled copy.
    BigFloat scale = 0;
    for (const auto& v : c) scale = std::max(scale, abs(v));
    std::vector<cd> cdbl;
    for (const auto& v : c) cdbl.emplace_back(static_cast<double>(v.re / scale), static_cast<double>(v.im / scale));
    std::vector<BigComplex> z;
    for (const auto& v : aberth_double(cdbl)) z.emplace_back(BigFloat(v.real()), BigFloat(v.imag()));

    const BigFloat stop = pow2(-(precision_bits + 16));
    for (int iter = 0; iter < 200; ++iter) {
        BigFloat worst = 0;
        for (int i = 0; i < m; ++i) {
            BigComplex p, dp;
            horner(c, z[static_cast<std::size_t>(i)], p, dp);
            if (p.re == 0 && p.im == 0) continue;
            BigComplex s;
            for (int j = 0; j < m; ++j)
                if (j != i) s = s + BigComplex(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            const BigComplex w = p / dp;
            const BigComplex corr = w / (BigComplex(1) - w * s);
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - corr;
            worst = std::max(worst, abs(corr) / (1 + abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < stop) break;
    }

    // Inclusion radii, inflated by a bound on the rounding error of p(z_i).
    const BigFloat unit = pow2(-working + 2);
    const BigFloat lead = abs(c.back());
    out.radii.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const BigComplex& zi = z[static_cast<std::size_t>(i)];
        BigComplex p, dp;
        horner(c, zi, p, dp);
        BigFloat mag = 0, zpow = 1;
        const BigFloat az = abs(zi);
        for (const auto& v : c) {
            mag += abs(v) * zpow;
            zpow *= az;
        }
        BigFloat prod = lead;
        for (int j = 0; j < m; ++j)
            if (j != i) prod *= abs(zi - z[static_cast<std::size_t>(j)]);
        if (prod == 0) throw PrecisionError("coincident root approximations");
        out.radii[static_cast<std::size_t>(i)] = m * (abs(p) + (m + 1) * unit * mag) / prod;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <=
                out.radii[static_cast<std::size_t>(i)] + out.radii[static_cast<std::size_t>(j)])
                throw PrecisionError("root inclusion discs overlap at " + std::to_string(precision_bits) + " bits");
    out.values = std::move(z);
    return out;
}

std::vector<Rational> rational_roots(const UPoly<Rational>& p_in) {
    if (p_in.is_zero()) throw ZeroFormError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    UPoly<Rational> p = p_in;
    if (is_zero(p.coeff(0))) {
        roots.emplace_back(0);
        int k = 0;
        while (is_zero(p.coeff(k))) ++k;
        p = UPoly<Rational>(std::vector<Rational>(p.coeffs().begin() + k, p.coeffs().end()));
    }
    if (p.degree() <= 0) return roots;

    // Distinct roots only; then clear denominators.
    p = divmod(p, gcd(p, derivative(p))).first;
    Integer den = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& v : p.coeffs()) ic.push_back(v.get_num() * (den / v.get_den()));
    Integer g = 0;
    for (const auto& v : ic) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : ic) v /= g;

    // A rational root r of the primitive integer polynomial has lead * r integral.
    const Integer lead = abs(ic.back());
    std::size_t bits = 0;
    for (const auto& v : ic) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    int precision = static_cast<int>(2 * bits + 2 * mpz_sizeinbase(lead.get_mpz_t(), 2)) + 64;

    std::vector<BigComplex> coeffs;
    CertifiedRoots found;
    for (int attempt = 0;; ++attempt) {
        PrecisionScope scope(precision + 32);
        coeffs.clear();
        for (const auto& v : ic) coeffs.emplace_back(BigFloat(v.get_mpz_t()));
        try {
            found = certified_roots(coeffs, precision);
            break;
        } catch (const PrecisionError&) {
            if (attempt == 4) throw;
            precision *= 2;
        }
    }

    PrecisionScope scope(precision + 32);
    const BigFloat lead_f(lead.get_mpz_t());
    for (std::size_t i = 0; i < found.values.size(); ++i) {
        const auto& z = found.values[i];
        if (abs(z.im) > found.radii[i] + BigFloat("1e-6")) continue;
        const BigFloat scaled = z.re * lead_f;
        Integer num;
        mpfr_get_z(num.get_mpz_t(), scaled.backend().data(), MPFR_RNDN);
        Rational cand(num, lead);
        cand.canonicalize();
        if (is_zero(p(cand)) && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RationalSplit split_rational_points(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroFormError("splitting the zero form");
    RationalSplit out;
    const int k = u_valuation(f);
    if (k > 0) out.points.emplace_back(P1Point(0, 1), k);
    UPoly<Rational> p = dehomogenize(f);
    for (const Rational& r : rational_roots(p)) {
        const UPoly<Rational> lin(std::vector<Rational>{-r, Rational(1)});
        int mult = 0;
        while (true) {
            auto [q, rem] = divmod(p, lin);
            if (!rem.is_zero()) break;
            p = q;
            ++mult;
        }
        out.points.emplace_back(P1Point(1, r), mult);
    }
    out.remainder = normalized(homogenize(p, p.degree()));
    return out;
}

std::vector<NumericRoot> numeric_roots(const BinaryForm& f, int precision_bits) {
    if (f.is_zero()) throw ZeroFormError("roots of the zero form");
    if (precision_bits < 64) throw RangeError("precision must be at least 64 bits");
    PrecisionScope scope(precision_bits + 32);

    std::vector<NumericRoot> out;
    const ZeroScheme scheme = squarefree_decompose(f);
    for (const auto& factor : scheme.factors()) {
        const RationalSplit split = split_rational_points(factor.form);
        for (const auto& [pt, mult] : split.points) {
            NumericRoot root;
            root.a = BigComplex(to_bigfloat(pt.a()));
            root.b = BigComplex(to_bigfloat(pt.b()));
            root.multiplicity = factor.multiplicity * mult;
            root.exact = pt;
            out.push_back(std::move(root));
        }
        if (split.remainder.degree() == 0) continue;
        std::vector<BigComplex> coeffs;
        for (const auto& v : split.remainder.coeffs()) coeffs.emplace_back(to_bigfloat(v));
        const CertifiedRoots cr = certified_roots(coeffs, precision_bits);
        for (std::size_t i = 0; i < cr.values.size(); ++i) {
            NumericRoot root;
            root.a = BigComplex(1);
            root.b = cr.values[i];
            root.multiplicity = factor.multiplicity;
            root.radius = cr.radii[i];
            out.push_back(std::move(root));
        }
    }
    return out;
}

}  // namespace waring
