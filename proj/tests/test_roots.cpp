#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "waring/roots.hpp"

using namespace waring;

namespace {
BinaryForm expr(const char* s) { return parse_expression(s); }
}  // namespace

TEST_CASE("numeric_roots examples") {
    const auto r1 = numeric_roots(expr("u^2 - t^2"), 128);
    REQUIRE(r1.size() == 2);
    for (const auto& r : r1) {
        REQUIRE(r.exact);
        CHECK(r.multiplicity == 1);
        CHECK((*r.exact == P1Point(1, 1) || *r.exact == P1Point(1, -1)));
    }

    const auto r2 = numeric_roots(expr("u^2*t"), 128);
    int total = 0;
    for (const auto& r : r2) {
        REQUIRE(r.exact);
        if (*r.exact == P1Point(0, 1)) CHECK(r.multiplicity == 2);
        else if (*r.exact == P1Point(1, 0)) CHECK(r.multiplicity == 1);
        else FAIL("unexpected root");
        total += r.multiplicity;
    }
    CHECK(total == 3);

    const int bits = 192;
    const auto r3 = numeric_roots(expr("u^2 + t^2"), bits);
    REQUIRE(r3.size() == 2);
    PrecisionScope scope(bits + 32);
    bool plus = false, minus = false;
    for (const auto& r : r3) {
        CHECK_FALSE(r.exact);
        CHECK(r.radius <= pow2(-bits + 4));
        // Exact algebraic values are (1 : +-i).
        const BigFloat err_plus = abs(r.b - BigComplex(0, 1)), err_minus = abs(r.b - BigComplex(0, -1));
        if (err_plus <= pow2(-bits + 4)) plus = true;
        if (err_minus <= pow2(-bits + 4)) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
    CHECK_THROWS_AS(numeric_roots(expr("u^2 + t^2"), 32), RangeError);
}

TEST_CASE("multiplicities sum to the degree and factors reconstruct f") {
    std::mt19937_64 rng(13);
    const int bits = 128;
    for (int trial = 0; trial < 60; ++trial) {
        BinaryForm f(std::vector<Rational>{1});
        const int parts = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < parts; ++k) {
            BinaryForm g(oracle::random_coeffs(rng, 1 + static_cast<int>(rng() % 3), 6));
            if (g.is_zero()) continue;
            const int e = 1 + static_cast<int>(rng() % 2);
            for (int j = 0; j < e; ++j) f = f * g;
        }
        if (f.degree() == 0) continue;
        const auto roots = numeric_roots(f, bits);
        int total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        CHECK(total == f.degree());

        // Rebuild prod (b_i u - a_i t)^{m_i} numerically and compare after normalisation.
        PrecisionScope scope(bits + 32);
        std::vector<BigComplex> prod{BigComplex(1)};
        for (const auto& r : roots)
            for (int k = 0; k < r.multiplicity; ++k) {
                std::vector<BigComplex> next(prod.size() + 1);
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    next[i] = next[i] + prod[i] * r.b;
                    next[i + 1] = next[i + 1] - prod[i] * r.a;
                }
                prod = std::move(next);
            }
        std::size_t pivot = 0;
        BigFloat best = 0;
        for (std::size_t i = 0; i < prod.size(); ++i)
            if (abs(prod[i]) > best) best = abs(prod[i]), pivot = i;
        const BigComplex scale = BigComplex(to_bigfloat(f[pivot])) / prod[pivot];
        BigFloat fmax = 0, err = 0;
        for (std::size_t i = 0; i < prod.size(); ++i) fmax = std::max(fmax, abs(BigComplex(to_bigfloat(f[i]))));
        for (std::size_t i = 0; i < prod.size(); ++i)
            err = std::max(err, abs(prod[i] * scale - BigComplex(to_bigfloat(f[i]))) / fmax);
        CHECK(err < pow2(-bits / 2));
    }
}

TEST_CASE("rational roots are complete") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> expected;
        UPoly<Rational> p = UPoly<Rational>::constant(oracle::random_rational(rng, 50) + 200);
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < k; ++j) {
            Rational r(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
            r.canonicalize();
            p = p * UPoly<Rational>(std::vector<Rational>{-r, 1});
            if (std::find(expected.begin(), expected.end(), r) == expected.end()) expected.push_back(r);
        }
        p = p * UPoly<Rational>(std::vector<Rational>{2, 0, 1});  // x^2 + 2 has no rational roots
        std::sort(expected.begin(), expected.end());
        CHECK(rational_roots(p) == expected);
    }
}

TEST_CASE("split_rational_points") {
    const auto s = split_rational_points(expr("u^3*t^2 + u*t^4"));  // u t^2 (u^2 + t^2)
    CHECK(s.remainder.degree() == 2);
    CHECK(proportional(s.remainder, expr("u^2 + t^2")));
    REQUIRE(s.points.size() == 2);
    for (const auto& [pt, m] : s.points) {
        if (pt == P1Point(0, 1)) CHECK(m == 1);
        else if (pt == P1Point(1, 0)) CHECK(m == 2);
        else FAIL("unexpected point");
    }
}

TEST_CASE("overlapping clusters raise PrecisionError") {
    // Two roots at distance 2^-200 cannot be separated at 64 bits.
    PrecisionScope scope(512);
    const BigFloat eps = pow2(-200);
    // (x - 1)(x - 1 - eps) = x^2 - (2 + eps) x + (1 + eps)
    std::vector<BigComplex> c{BigComplex(1 + eps), BigComplex(-(2 + eps)), BigComplex(1)};
    CHECK_THROWS_AS(certified_roots(c, 64), PrecisionError);
}
