#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "waring/decompose.hpp"

using namespace waring;

namespace {

BinaryForm expr(const char* s) { return parse_expression(s); }

// Independent reconstruction of sum s_i (alpha_i u + beta_i t)^d from the
// numeric term values, compared against f in max-norm after scaling.
BigFloat reconstruct_error(const BinaryForm& f, const Decomposition& dec) {
    const int d = f.degree();
    std::vector<BigComplex> acc(static_cast<std::size_t>(d) + 1);
    for (const auto& term : dec.terms) {
        // Expand by repeated multiplication with the linear form.
        std::vector<BigComplex> p{BigComplex(1)};
        for (int k = 0; k < d; ++k) {
            std::vector<BigComplex> next(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                next[i] = next[i] + p[i] * term.alpha;
                next[i + 1] = next[i + 1] + p[i] * term.beta;
            }
            p = std::move(next);
        }
        for (std::size_t i = 0; i < p.size(); ++i) acc[i] = acc[i] + term.scalar * p[i];
    }
    BigFloat fmax = 0, err = 0;
    for (const auto& c : f.coeffs()) fmax = std::max(fmax, to_bigfloat(abs(c)));
    for (std::size_t i = 0; i < acc.size(); ++i) err = std::max(err, abs(acc[i] - BigComplex(to_bigfloat(f[i]))));
    return err / fmax;
}

}  // namespace

TEST_CASE("decompose examples") {
    const auto d1 = decompose(expr("u^3 + t^3"), 192);
    CHECK(d1.field_tag == FieldTag::Rational);
    REQUIRE(d1.terms.size() == 2);
    CHECK(d1.residual == 0);
    for (const auto& term : d1.terms) {
        CHECK(*term.exact_scalar == NfElement(1));
        const P1Point p(term.exact_alpha->rational_value(), term.exact_beta->rational_value());
        CHECK((p == P1Point(1, 0) || p == P1Point(0, 1)));
    }

    const auto d2 = decompose(expr("u^4 + 4*u^3*t + 6*u^2*t^2 + 4*u*t^3 + t^4"), 192);
    REQUIRE(d2.terms.size() == 1);
    CHECK(d2.residual == 0);

    std::mt19937_64 rng(7);
    const BinaryForm g(oracle::random_coeffs(rng, 5));
    const auto d3 = decompose(g, 192);
    CHECK(d3.terms.size() == 3);
    CHECK(d3.residual < pow2(-96));
    PrecisionScope scope(224);
    CHECK(reconstruct_error(g, d3) < pow2(-96));
}

TEST_CASE("decompose refuses non-reduced certificates") {
    CHECK_THROWS_AS(decompose(expr("u^4*t"), 192), NonReducedRank);
    CHECK_THROWS_AS(decompose(expr("u^3 + t^3"), 16), RangeError);
}

TEST_CASE("quadratic witnesses use exact number-field arithmetic") {
    // u^3 + (1:i)-type pair: (u + t)^3 + (u - t)^3 + (u + 2t)^3 ... use roots of u^2 + t^2.
    // f = L1^3 + L2^3 with L = u +- i t is 2u^3 - 6u t^2, rational.
    const auto f = expr("2*u^3 - 6*u*t^2");
    const auto dec = decompose(f, 192);
    CHECK(dec.field_tag == FieldTag::Algebraic);
    REQUIRE(dec.field);
    CHECK(dec.field->degree() == 2);
    CHECK(dec.terms.size() == 2);
    CHECK(dec.residual == 0);
    PrecisionScope scope(224);
    CHECK(reconstruct_error(f, dec) < pow2(-150));
}

TEST_CASE("verify_decomposition examples") {
    auto dec = decompose(expr("u^3 + t^3"), 192);
    CHECK(verify_decomposition(expr("u^3 + t^3"), dec) == 0);

    const Rational eps(1, 1 << 20);
    dec.terms[0].exact_scalar = NfElement(Rational(1) + eps);
    dec.terms[0].scalar = BigComplex(to_bigfloat(Rational(1) + eps));
    CHECK(verify_decomposition(expr("u^3 + t^3"), dec) == to_bigfloat(eps));

    Decomposition empty;
    empty.precision_bits = 192;
    CHECK(verify_decomposition(expr("u^3"), empty) == 1);
}

TEST_CASE("random square-free forms decompose with small residual") {
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 10);
        BinaryForm f(oracle::random_coeffs(rng, d));
        if (trial % 4 == 0) {
            // Rational points give exact decompositions.
            f = BinaryForm::zero(d);
            for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
                f = f + BinaryForm(oracle::power(oracle::random_rational(rng, 7), oracle::random_rational(rng, 7), d));
            if (f.is_zero()) continue;
        }
        const auto cert = rank(f);
        if (cert.kind != WitnessKind::SquareFree) continue;
        const auto dec = decompose(f, 192);
        CHECK(static_cast<int>(dec.terms.size()) == cert.rank);
        CHECK(dec.residual < pow2(-96));
        PrecisionScope scope(224);
        CHECK(reconstruct_error(f, dec) < pow2(-96));
        ++done;
    }
    CHECK(done > 80);
}
