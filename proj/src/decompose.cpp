#include "waring/decompose.hpp"

#include "waring/roots.hpp"

namespace waring {

const char* to_string(FieldTag tag) {
    switch (tag) {
        case FieldTag::Rational: return "rational";
        case FieldTag::Algebraic: return "algebraic";
        case FieldTag::Complex: return "complex";
    }
    return "complex";
}

namespace {

// Solves sum_i s_i alpha_i^{d-j} beta_i^j = a_j exactly over F.
template <class F>
std::vector<F> solve_scalars(const std::vector<F>& apolar, const std::vector<std::pair<F, F>>& points) {
    const std::size_t d = apolar.size() - 1, r = points.size();
    Matrix<F> m(d + 1, r + 1);
    for (std::size_t i = 0; i < r; ++i) {
        const auto pw = linear_power(points[i].first, points[i].second, static_cast<int>(d));
        const auto col = apolar_entries(pw);
        for (std::size_t j = 0; j <= d; ++j) m(j, i) = col[j];
    }
    for (std::size_t j = 0; j <= d; ++j) m(j, r) = apolar[j];
    const auto pivots = rref_in_place(m);
    if (pivots.size() != r || (!pivots.empty() && pivots.back() == r))
        throw PrecisionError("scalar system is inconsistent");
    std::vector<F> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    return s;
}

BigComplex embed(const NfElement& x, const BigComplex& theta) {
    BigComplex acc, power(1);
    for (const auto& c : x.value().coeffs()) {
        acc = acc + BigComplex(to_bigfloat(c)) * power;
        power = power * theta;
    }
    return acc;
}

// Gaussian elimination with partial pivoting on the overdetermined system.
std::vector<BigComplex> solve_scalars_numeric(const std::vector<BigComplex>& apolar,
                                              const std::vector<std::pair<BigComplex, BigComplex>>& points) {
    const std::size_t d = apolar.size() - 1, r = points.size();
    std::vector<std::vector<BigComplex>> m(d + 1, std::vector<BigComplex>(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigComplex> alpha_pows(d + 1), beta_pows(d + 1);
        alpha_pows[0] = beta_pows[0] = BigComplex(1);
        for (std::size_t k = 1; k <= d; ++k) {
            alpha_pows[k] = alpha_pows[k - 1] * points[i].first;
            beta_pows[k] = beta_pows[k - 1] * points[i].second;
        }
        for (std::size_t j = 0; j <= d; ++j) m[j][i] = alpha_pows[d - j] * beta_pows[j];
    }
    for (std::size_t j = 0; j <= d; ++j) m[j][r] = apolar[j];
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i <= d; ++i)
            if (abs(m[i][col]) > abs(m[best][col])) best = i;
        std::swap(m[best], m[col]);
        if (abs(m[col][col]) == 0) throw PrecisionError("singular scalar system");
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == col) continue;
            const BigComplex factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j <= r; ++j) m[i][j] = m[i][j] - factor * m[col][j];
        }
    }
    std::vector<BigComplex> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m[i][r] / m[i][i];
    return s;
}

}  // namespace

Decomposition decompose(const BinaryForm& f, int precision_bits) {
    if (precision_bits < 64) throw RangeError("precision must be at least 64 bits");
    const RankCertificate cert = rank(f);
    if (cert.kind != WitnessKind::SquareFree)
        throw NonReducedRank("rank " + std::to_string(cert.rank) + " is certified by a non-reduced scheme");

    PrecisionScope scope(precision_bits + 32);
    Decomposition dec;
    dec.precision_bits = precision_bits;
    const ApolarCoeffs a = apolar_coeffs(f);
    const RationalSplit split = split_rational_points(cert.apolar_form);

    if (split.remainder.degree() <= 2) {
        std::vector<std::pair<NfElement, NfElement>> pts;
        for (const auto& [pt, mult] : split.points) pts.emplace_back(NfElement(pt.a()), NfElement(pt.b()));
        BigComplex theta;
        if (split.remainder.degree() == 2) {
            // Remainder q(1, x) is an irreducible quadratic; its roots are theta and trace - theta.
            const UPoly<Rational> q = monic(dehomogenize(split.remainder));
            dec.field = std::make_shared<const NumberField>(q);
            const NfElement th = NfElement::generator(dec.field);
            pts.emplace_back(NfElement(1), th);
            pts.emplace_back(NfElement(1), NfElement(-q.coeff(1)) - th);
            std::vector<BigComplex> qc;
            for (const auto& v : q.coeffs()) qc.emplace_back(to_bigfloat(v));
            theta = certified_roots(qc, precision_bits).values.front();
            dec.field_tag = FieldTag::Algebraic;
        }
        std::vector<NfElement> apolar(a.entries.begin(), a.entries.end());
        const auto scalars = solve_scalars(apolar, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            DecompositionTerm term;
            term.exact_scalar = scalars[i];
            term.exact_alpha = pts[i].first;
            term.exact_beta = pts[i].second;
            term.scalar = embed(scalars[i], theta);
            term.alpha = embed(pts[i].first, theta);
            term.beta = embed(pts[i].second, theta);
            dec.terms.push_back(std::move(term));
        }
    } else {
        dec.field_tag = FieldTag::Complex;
        std::vector<std::pair<BigComplex, BigComplex>> pts;
        for (const auto& root : numeric_roots(cert.apolar_form, precision_bits)) pts.emplace_back(root.a, root.b);
        std::vector<BigComplex> apolar;
        for (const auto& v : a.entries) apolar.emplace_back(to_bigfloat(v));
        const auto scalars = solve_scalars_numeric(apolar, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            DecompositionTerm term;
            term.scalar = scalars[i];
            term.alpha = pts[i].first;
            term.beta = pts[i].second;
            dec.terms.push_back(std::move(term));
        }
    }
    dec.residual = verify_decomposition(f, dec);
    return dec;
}

BigFloat verify_decomposition(const BinaryForm& f, const Decomposition& dec) {
    PrecisionScope scope(std::max(dec.precision_bits, 64) + 32);
    const int d = f.degree();
    BigFloat fmax = 0;
    for (const auto& c : f.coeffs()) fmax = std::max(fmax, to_bigfloat(abs(c)));
    if (fmax == 0) throw ZeroFormError("verifying a decomposition of the zero form");

    bool exact = true;
    for (const auto& term : dec.terms)
        if (!term.exact_scalar || !term.exact_alpha || !term.exact_beta) exact = false;

    if (exact) {
        BasicBinaryForm<NfElement> diff(std::vector<NfElement>(f.coeffs().begin(), f.coeffs().end()));
        for (const auto& term : dec.terms)
            diff = diff - *term.exact_scalar * linear_power(*term.exact_alpha, *term.exact_beta, d);
        bool rational = true;
        for (const auto& c : diff.coeffs())
            if (!c.is_rational()) rational = false;
        if (rational) {
            Rational worst = 0;
            for (const auto& c : diff.coeffs()) worst = std::max(worst, Rational(abs(c.rational_value())));
            return to_bigfloat(worst) / fmax;
        }
    }

    std::vector<BigComplex> sum(static_cast<std::size_t>(d) + 1);
    for (const auto& term : dec.terms) {
        std::vector<BigComplex> ap(static_cast<std::size_t>(d) + 1), bp(static_cast<std::size_t>(d) + 1);
        ap[0] = bp[0] = BigComplex(1);
        for (int k = 1; k <= d; ++k) {
            ap[static_cast<std::size_t>(k)] = ap[static_cast<std::size_t>(k - 1)] * term.alpha;
            bp[static_cast<std::size_t>(k)] = bp[static_cast<std::size_t>(k - 1)] * term.beta;
        }
        for (int i = 0; i <= d; ++i)
            sum[static_cast<std::size_t>(i)] =
                sum[static_cast<std::size_t>(i)] + term.scalar * BigComplex(BigFloat(binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)).get_mpz_t())) *
                                                        ap[static_cast<std::size_t>(d - i)] * bp[static_cast<std::size_t>(i)];
    }
    BigFloat worst = 0;
    for (int i = 0; i <= d; ++i)
        worst = std::max(worst, abs(BigComplex(to_bigfloat(f[static_cast<std::size_t>(i)])) - sum[static_cast<std::size_t>(i)]));
    return worst / fmax;
}

}  // namespace waring
