#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "waring/binary_form.hpp"

using namespace waring;

namespace {

BinaryForm form(std::vector<Rational> c) { return BinaryForm(std::move(c)); }
BinaryForm expr(const char* s) { return parse_expression(s); }

bool has_factor(const ZeroScheme& w, const BinaryForm& g, int mult) {
    for (const auto& f : w.factors())
        if (proportional(f.form, g) && f.multiplicity == mult) return true;
    return false;
}

}  // namespace

TEST_CASE("parse_form examples") {
    CHECK(parse_form("d=3; [1,0,0,1]") == expr("u^3 + t^3"));
    CHECK(parse_form("d=5; [1,0,0,0,0,0]") == expr("u^5"));
    const auto f = parse_form("d=4; [2/3,-1,0,0,5]");
    CHECK(f.degree() == 4);
    CHECK(f[0] == Rational(2, 3));
    CHECK(f[1] == -1);
    CHECK(render_form(f) == "d=4; [2/3,-1,0,0,5]");
}

TEST_CASE("parse_form rejects malformed input") {
    CHECK_THROWS_AS(parse_form("d=3; [1,0,1]"), ParseError);
    CHECK_THROWS_AS(parse_form("d=2; [1,x,1]"), ParseError);
    CHECK_THROWS_AS(parse_form("d=2; [1,1/0,1]"), ParseError);
    CHECK_THROWS_AS(parse_form("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_form("d=1; 1,2"), ParseError);
}

TEST_CASE("parse and render round-trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = static_cast<int>(rng() % 12);
        const BinaryForm f(oracle::random_coeffs(rng, d));
        const std::string text = render_form(f);
        CHECK(parse_form(text) == f);
        CHECK(render_form(parse_form(text)) == text);
        CHECK(parse_expression(to_expression(f), d) == f);
    }
    CHECK(parse_form("d=2;  [ 2/4 , -0 , 3 ]") == form({Rational(1, 2), 0, 3}));
}

TEST_CASE("apolar_coeffs examples") {
    CHECK(apolar_coeffs(expr("u^3 + t^3")).entries == std::vector<Rational>{1, 0, 0, 1});
    CHECK(apolar_coeffs(expr("u^2*t")).entries == std::vector<Rational>{0, Rational(1, 3), 0, 0});
    CHECK(apolar_coeffs(BinaryForm::zero(2)).entries == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("apolar coefficients round-trip exactly") {
    std::mt19937_64 rng(5);
    for (int d = 0; d <= 11; ++d) {
        const BinaryForm f(oracle::random_coeffs(rng, d));
        CHECK(from_apolar(apolar_coeffs(f)) == f);
    }
}

TEST_CASE("is_square_free examples") {
    CHECK_FALSE(is_square_free(expr("u^2*t")));
    CHECK(is_square_free(expr("u^3 + t^3")));
    CHECK(is_square_free(expr("u^2*t - u*t^2")));
    CHECK_FALSE(is_square_free(expr("u*t^2")));
    CHECK_FALSE(is_square_free(expr("t^2")));
    CHECK_THROWS_AS(is_square_free(BinaryForm::zero(3)), ZeroFormError);
}

TEST_CASE("squarefree_decompose examples") {
    const auto w1 = squarefree_decompose(expr("u^2*t"));
    CHECK(w1.factors().size() == 2);
    CHECK(has_factor(w1, expr("u"), 2));
    CHECK(has_factor(w1, expr("t"), 1));

    const auto w2 = squarefree_decompose(expr("u^6 + 3*u^4*t^2 + 3*u^2*t^4 + t^6"));
    CHECK(w2.factors().size() == 1);
    CHECK(has_factor(w2, expr("u^2 + t^2"), 3));

    const auto w3 = squarefree_decompose(expr("u^3 + t^3"));
    CHECK(w3.factors().size() == 1);
    CHECK(has_factor(w3, expr("u^3 + t^3"), 1));
    CHECK(w3.is_reduced());
}

TEST_CASE("square-free test agrees with the decomposition") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        // Products of random linear and quadratic factors, some repeated.
        BinaryForm f(std::vector<Rational>{1});
        const int parts = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < parts; ++k) {
            const int deg = 1 + static_cast<int>(rng() % 2);
            BinaryForm g(oracle::random_coeffs(rng, deg, 3));
            if (g.degree() == 1 && g.is_zero()) continue;
            const int e = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < e; ++j) f = f * g;
        }
        if (f.is_zero()) continue;
        const auto w = squarefree_decompose(f);
        CHECK(is_square_free(f) == w.is_reduced());
        CHECK(w.degree() == f.degree());
        CHECK(proportional(w.defining_form(), f));
        for (std::size_t i = 0; i < w.factors().size(); ++i) {
            CHECK(is_square_free(w.factors()[i].form));
            for (std::size_t j = i + 1; j < w.factors().size(); ++j)
                CHECK(form_gcd(w.factors()[i].form, w.factors()[j].form).degree() == 0);
        }
    }
}

TEST_CASE("multiplicity_at examples") {
    const auto A = P1Point::cusp_source();
    CHECK(multiplicity_at(expr("u^2*t"), A) == 1);
    CHECK(multiplicity_at(expr("t^2*u - t^3"), A) == 2);
    CHECK(multiplicity_at(expr("u^3 + t^3"), A) == 0);
    CHECK(multiplicity_at(squarefree_decompose(expr("t^3*u^2")), A) == 3);
    CHECK(multiplicity_at(expr("u^2*t"), P1Point(0, 1)) == 2);
}

TEST_CASE("multiplicity_at is the largest power dividing exactly") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const P1Point p(oracle::random_rational(rng, 5), 1);
        const int k = static_cast<int>(rng() % 4);
        BinaryForm f(oracle::random_coeffs(rng, 1 + static_cast<int>(rng() % 3), 4));
        if (f.is_zero() || multiplicity_at(f, p) != 0) continue;
        for (int j = 0; j < k; ++j) f = f * p.vanishing_form();
        CHECK(multiplicity_at(f, p) == k);
        // Oracle: evaluate the form and its successive partials at the point.
        // Oracle: count derivatives along d/du + d/dt (transverse unless p = (1:1)).
        if (p == P1Point(1, 1)) continue;
        int order = 0;
        BinaryForm g = f;
        while (!g.is_zero() && is_zero(evaluate(g, p.a(), p.b()))) {
            ++order;
            g = partial_t(g) + partial_u(g);
        }
        CHECK(order == k);
    }
}

TEST_CASE("P1Point canonical form and vanishing forms") {
    CHECK(P1Point(2, 4) == P1Point(1, 2));
    CHECK(P1Point(0, 5) == P1Point(0, 1));
    CHECK_THROWS_AS(P1Point(0, 0), RangeError);
    const P1Point p(Rational(3), Rational(-1));
    CHECK(is_zero(evaluate(p.vanishing_form(), p.a(), p.b())));
    CHECK(P1Point::cusp_source().vanishing_form() == expr("-t"));
}

TEST_CASE("homogeneous gcd keeps factors at both charts") {
    CHECK(proportional(form_gcd(expr("u^2*t"), expr("u*t^2")), expr("u*t")));
    CHECK(proportional(form_gcd(expr("u^3"), expr("u^2*t")), expr("u^2")));
    CHECK(form_gcd(expr("u^2 + t^2"), expr("u*t")).degree() == 0);
}
