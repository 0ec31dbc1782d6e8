#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "waring/projection.hpp"

using namespace waring;

namespace {

BinaryForm expr(const char* s) { return parse_expression(s); }

ProjectedPoint point(int n, std::vector<Rational> c) { return ProjectedPoint(n, std::move(c)); }

ProjectedPoint random_point(std::mt19937_64& rng, int n, int bound = 20) {
    return ProjectedPoint(n, oracle::random_coeffs(rng, n, bound));
}

// Fibre point B(lambda) with y scaled coordinatewise: t -> s t multiplies c_i by s^i.
ProjectedPoint rescale_t(const ProjectedPoint& p, const Rational& s) {
    std::vector<Rational> c;
    for (int i = 0; i <= p.n + 1; ++i) {
        if (i == 1) continue;
        Rational v = p.coefficient(i);
        for (int k = 0; k < i; ++k) v *= s;
        c.push_back(v);
    }
    return ProjectedPoint(p.n, c);
}

}  // namespace

TEST_CASE("project examples") {
    CHECK(project(expr("u^4")) == point(3, {1, 0, 0, 0}));
    CHECK(project(expr("u^4 + 5*u^3*t + t^4")) == point(3, {1, 0, 0, 1}));
    CHECK_THROWS_AS(project(expr("u^3*t")), CenterOfProjection);
    CHECK_THROWS_AS(project(expr("7*u^3*t")), CenterOfProjection);
    CHECK_THROWS_AS(project(BinaryForm::zero(4)), ZeroFormError);
}

TEST_CASE("lift examples and round-trip") {
    CHECK(lift(point(3, {1, 0, 0, 1}), Rational(0)) == expr("u^4 + t^4"));
    CHECK(lift(point(3, {1, 0, 0, 1}), Rational(2)) == expr("u^4 + 2*u^3*t + t^4"));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 4 + static_cast<int>(rng() % 8);
        const BinaryForm f(oracle::random_coeffs(rng, d));
        CHECK(lift(project(f), f[1]) == f);
        const Rational lam = oracle::random_rational(rng);
        CHECK(project(lift(project(f), lam)) == project(f));
    }
}

TEST_CASE("cusp_curve_point examples") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<Rational> cusp(static_cast<std::size_t>(n + 1), 0), last(static_cast<std::size_t>(n + 1), 0);
        cusp[0] = 1;
        last.back() = 1;
        CHECK(cusp_curve_point(P1Point(1, 0), n) == point(n, cusp));
        CHECK(cusp_curve_point(P1Point(0, 1), n) == point(n, last));
        // Monomial coordinates of (u + t)^{n+1}: the binomial coefficients without slot 1.
        std::vector<Rational> ones;
        for (int i = 0; i <= n + 1; ++i)
            if (i != 1) ones.push_back(oracle::binom(n + 1, i));
        CHECK(cusp_curve_point(P1Point(1, 1), n) == point(n, ones));
    }
}

TEST_CASE("special_lambdas examples") {
    const auto s1 = special_lambdas(project(expr("u^4")), 1);
    CHECK_FALSE(s1.all_lambda);
    CHECK(s1.minor_gcd == UPoly<Rational>(std::vector<Rational>{0, 0, 1}));
    REQUIRE(s1.values.size() == 1);
    CHECK(s1.values[0].is_rational());
    CHECK(s1.values[0].rational_value() == 0);

    std::mt19937_64 rng(5);
    for (int n = 3; n <= 10; ++n) {
        const auto p = random_point(rng, n);
        const int generic = (n + 3) / 2;  // border rank of a general form of degree n+1 is ceil((n+2)/2)
        CHECK(special_lambdas(p, generic).all_lambda);
        if (generic - 2 >= 1) {
            const auto s = special_lambdas(p, generic - 2);
            CHECK_FALSE(s.all_lambda);
            CHECK(s.values.empty());
        }
    }
    CHECK_THROWS_AS(special_lambdas(project(expr("u^4")), 0), RangeError);
}

TEST_CASE("special lambdas are exactly the rank drops (oracle check)") {
    std::mt19937_64 rng(8);
    int rational_hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const int d = n + 1;
        // Sums of few powers plus a multiple of u^n t have rational special lambdas.
        BinaryForm f = BinaryForm::zero(d);
        const int terms = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < terms; ++k)
            f = f + BinaryForm(oracle::power(oracle::random_rational(rng, 5), oracle::random_rational(rng, 5), d));
        f = f + BinaryForm::monomial(d, 1, oracle::random_rational(rng, 5));
        ProjectedPoint p;
        try {
            p = project(f);
        } catch (const Error&) {
            continue;
        }
        int w_gen = 1;
        while (!special_lambdas(p, w_gen).all_lambda) ++w_gen;
        for (int r = 1; r < w_gen; ++r) {
            const auto s = special_lambdas(p, r);
            for (const auto& lam : s.values) {
                if (!lam.is_rational()) continue;
                ++rational_hits;
                const auto c = lift(p, lam.rational_value()).coeffs();
                CHECK(oracle::rank(oracle::hankel(c, r)) < r + 1);
                // Lower-level special values reappear at level w_gen - 1.
                const auto top = special_lambdas(p, w_gen - 1);
                CHECK(is_zero(top.minor_gcd(lam.rational_value())));
            }
            // A random lambda off the special set gives full column rank.
            const Rational lam = oracle::random_rational(rng, 1000);
            if (!is_zero(s.minor_gcd(lam)))
                CHECK(oracle::rank(oracle::hankel(lift(p, lam).coeffs(), r)) == r + 1);
        }
    }
    CHECK(rational_hits > 20);
}

TEST_CASE("x_rank on curve points is 1") {
    std::mt19937_64 rng(12);
    for (int n = 3; n <= 9; ++n) {
        CHECK(x_rank(project(BinaryForm::monomial(n + 1, 0))).value == 1);
        CHECK(x_rank(cusp_curve_point(P1Point(0, 1), n)).value == 1);
        const P1Point t(oracle::random_rational(rng, 9), oracle::random_rational(rng, 9) + 100);
        const auto r = x_rank(cusp_curve_point(t, n));
        CHECK(r.value == 1);
        CHECK(r.kind == WitnessKind::SquareFree);
        REQUIRE(r.witness_points.size() == 1);
        CHECK(r.witness_points[0] == t);
    }
}

TEST_CASE("x_rank is bounded by the rank of any lift") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const int d = n + 1;
        BinaryForm f(oracle::random_coeffs(rng, d));
        if (trial % 2) {
            f = BinaryForm::zero(d);
            for (int k = 0; k < 2; ++k)
                f = f + BinaryForm(oracle::power(oracle::random_rational(rng, 5), oracle::random_rational(rng, 5), d));
            if (f.is_zero()) continue;
        }
        ProjectedPoint p;
        try {
            p = project(f);
        } catch (const CenterOfProjection&) {
            continue;
        }
        const auto xr = x_rank(p);
        CHECK(xr.value <= rank(f).rank);
        CHECK(xr.value == xr.fiber_rank);
        for (const auto& e : xr.examined) CHECK(xr.value <= e.rank);
        CHECK(x_rank(rescale_t(p, oracle::random_rational(rng, 9) + 50)).value == xr.value);
    }
}

TEST_CASE("x_rank is deterministic for a fixed seed") {
    std::mt19937_64 rng(3);
    const auto p = random_point(rng, 6);
    XRankOptions opt;
    opt.seed = 99;
    const auto a = x_rank(p, opt), b = x_rank(p, opt);
    CHECK(a.value == b.value);
    CHECK(a.witness_lambda.to_string() == b.witness_lambda.to_string());
    CHECK(a.examined.size() == b.examined.size());
}

TEST_CASE("irrational minimising lambda is evaluated in a quadratic field") {
    // For d = 4 the level-2 catalecticant is square, so its determinant is a
    // quadratic in lambda; for random P its roots are usually irrational.
    std::mt19937_64 rng(44);
    int found = 0;
    for (int trial = 0; trial < 40 && found < 5; ++trial) {
        const auto p = random_point(rng, 3, 9);
        const auto s = special_lambdas(p, 2);
        if (s.all_lambda || s.values.size() != 1 || s.values[0].degree() != 2) continue;
        ++found;
        const auto xr = x_rank(p);
        CHECK(xr.value == 2);
        CHECK(xr.witness_lambda.degree() == 2);
        CHECK_FALSE(xr.incomplete);
        CHECK(xr.apolar_form.size() == 3);

        XRankOptions tight;
        tight.nf_degree_bound = 1;
        const auto xt = x_rank(p, tight);
        CHECK(xt.incomplete);
        REQUIRE(xt.unexplored.size() == 1);
        CHECK(xt.value == 3);
    }
    CHECK(found == 5);
}
