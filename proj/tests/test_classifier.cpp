#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "waring/classifier.hpp"

using namespace waring;

namespace {

BinaryForm expr(const char* s) { return parse_expression(s); }

const P1Point A = P1Point::cusp_source();

ZeroScheme scheme(const std::vector<std::pair<P1Point, int>>& pts) {
    std::vector<SchemeFactor<Rational>> f;
    for (const auto& [p, k] : pts) f.push_back({normalized(p.vanishing_form()), k});
    return ZeroScheme(std::move(f));
}

GeneratedInstance make(CaseTag tag, int n, int w, std::uint64_t seed) {
    InstanceSpec spec;
    spec.tag = tag;
    spec.n = n;
    spec.w = w;
    spec.seed = seed;
    return generate_instance(spec);
}

}  // namespace

TEST_CASE("case tag names round-trip") {
    for (CaseTag t : generatable_cases()) CHECK(parse_case_tag(to_string(t)) == t);
    CHECK(parse_case_tag("out_of_scope") == CaseTag::out_of_scope);
    CHECK_FALSE(parse_case_tag("e5").has_value());
    CHECK(generatable_cases().size() == 11);
}

TEST_CASE("scheme_span matches the apolarity membership test") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 4 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(d + 1));
        const BinaryForm g(oracle::random_coeffs(rng, m, 5));
        const auto basis = scheme_span(g, d);
        CHECK(basis.size() == static_cast<std::size_t>(m));
        for (const auto& v : basis) CHECK(in_span(BinaryForm(v), g));
    }
    CHECK(scheme_span(expr("u^6"), 5).size() == 6);
    CHECK_THROWS_AS(scheme_span(expr("u^7"), 5), RangeError);
}

TEST_CASE("o_in_span examples") {
    const ProjectionFrame frame(5);
    const P1Point q(1, 2), r(1, -3), s(0, 1);
    CHECK(o_in_span(scheme({{A, 2}}), frame));
    CHECK_FALSE(o_in_span(scheme({{A, 1}, {q, 1}}), frame));
    CHECK_FALSE(o_in_span(scheme({{q, 1}, {r, 1}, {s, 1}}), frame));
    CHECK(o_in_span(scheme({{A, 3}, {q, 2}}), frame));
    // An irreducible quadratic factor goes through the hyperplane description.
    CHECK_FALSE(o_in_span(squarefree_decompose(expr("u^2 + t^2")), frame));
    CHECK(o_in_span(squarefree_decompose(expr("t^2") * expr("u^2 + t^2")), frame));
    CHECK_THROWS_AS(o_in_span(squarefree_decompose(expr("u^8")), frame), RangeError);
}

TEST_CASE("o_in_span routes agree on random schemes of degree <= n") {
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 8; ++n) {
        const ProjectionFrame frame(n);
        for (int trial = 0; trial < 60; ++trial) {
            const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            const int m = static_cast<int>(rng() % static_cast<unsigned>(deg + 1));
            BinaryForm g = BinaryForm::monomial(m, m);
            if (deg > m) {
                BinaryForm rest(oracle::random_coeffs(rng, deg - m, 4));
                if (is_zero(rest[static_cast<std::size_t>(deg - m)])) continue;  // keep A out of the rest
                g = g * rest;
            }
            const OInSpan routes = o_in_span_routes(squarefree_decompose(g), frame);
            CHECK(routes.agree());
        }
    }
}

TEST_CASE("generate examples") {
    const auto e32 = make(CaseTag::e3_2, 7, 3, 1);
    CHECK(proportional(border_scheme(e32.form).scheme.defining_form(), BinaryForm::monomial(3, 3)));

    const auto e4 = make(CaseTag::e4_i, 6, 2, 1);
    const RankCertificate cert = rank(e4.form);
    CHECK(cert.kind == WitnessKind::SquareFree);
    CHECK(cert.rank == 2);
    CHECK(proportional(cert.apolar_form, e4.scheme.defining_form()));

    const auto wm2 = make(CaseTag::e3_3_wminus2, 7, 4, 3);
    const BinaryForm s = exact_divide(wm2.scheme.defining_form(), BinaryForm::monomial(2, 2));
    auto basis = scheme_span(s, 8);
    basis.push_back(BinaryForm::monomial(8, 1).coeffs());
    Matrix<Rational> with = Matrix<Rational>::from_columns(basis, 9);
    basis.push_back(wm2.form.coeffs());
    CHECK(rank(Matrix<Rational>::from_columns(basis, 9)) == rank(with));
}

TEST_CASE("classify examples") {
    const auto e32 = classify(make(CaseTag::e3_2, 7, 3, 1).form, ProjectionFrame(7));
    CHECK(e32.case_tag == CaseTag::e3_2);
    CHECK(e32.prediction->lo == 7);
    CHECK(e32.prediction->exact());

    const auto wm2 = classify(make(CaseTag::e3_3_wminus2, 7, 4, 3).form, ProjectionFrame(7));
    CHECK(wm2.case_tag == CaseTag::e3_3_wminus2);
    CHECK(wm2.prediction->lo == 2);
    CHECK(wm2.proof_derived);
    CHECK(wm2.witness_form->degree() == 2);

    const auto wm1 = classify(make(CaseTag::e3_3_wminus1, 7, 4, 3).form, ProjectionFrame(7));
    CHECK(wm1.case_tag == CaseTag::e3_3_wminus1);
    CHECK(wm1.prediction->lo == 3);
    CHECK(wm1.witness_form->degree() == 3);

    const auto e35 = classify(make(CaseTag::e3_5, 8, 4, 1).form, ProjectionFrame(8));
    CHECK(e35.case_tag == CaseTag::e3_5);
    CHECK(e35.prediction->lo == 6);

    const auto e4i = classify(make(CaseTag::e4_i, 6, 2, 1).form, ProjectionFrame(6));
    CHECK(e4i.case_tag == CaseTag::e4_i);
    CHECK(e4i.prediction->lo == 2);
    CHECK(e4i.witness_unique);

    const auto e4ii = classify(make(CaseTag::e4_ii, 7, 4, 1).form, ProjectionFrame(7));
    CHECK(e4ii.case_tag == CaseTag::e4_ii);
    CHECK(e4ii.prediction->lo == 3);
    CHECK(e4ii.prediction->hi == 4);

    const auto e4iii = classify(make(CaseTag::e4_iii, 7, 5, 1).form, ProjectionFrame(7));
    CHECK(e4iii.case_tag == CaseTag::e4_iii);
    CHECK(e4iii.prediction->lo == 4);
    CHECK(e4iii.generic_only);

    const auto cusp = classify(expr("u^6 + 3*u^5*t"), ProjectionFrame(5));
    CHECK(cusp.case_tag == CaseTag::e3_3_cusp);
    CHECK(cusp.prediction->lo == 1);
}

TEST_CASE("classifier hypothesis handling") {
    const ProjectionFrame frame(5);
    CHECK_THROWS_AS(classify_e3(expr("u^6 + t^6"), frame), HypothesisError);
    CHECK_THROWS_AS(classify_e4(expr("u^4*t^2"), frame), HypothesisError);
    CHECK_THROWS_AS(classify(expr("u^5*t"), frame), CenterOfProjection);
    CHECK_THROWS_AS(classify(expr("u^5"), frame), DegreeMismatch);
    // m = 0 with 2w = n + 2: no clause applies.
    const auto out = classify(expr("u^3*t^4"), ProjectionFrame(6));
    CHECK(out.theorem == "e3");
    CHECK(out.w == 4);
    CHECK(out.case_tag == CaseTag::out_of_scope);
    CHECK_FALSE(out.violated_hypothesis.empty());
    CHECK_FALSE(out.prediction.has_value());
}

TEST_CASE("invalid case parameters") {
    CHECK_FALSE(case_parameter_error(CaseTag::e4_i, 6, 4).empty());
    CHECK_FALSE(case_parameter_error(CaseTag::e4_iii, 6, 4).empty());
    CHECK_FALSE(case_parameter_error(CaseTag::e3_2, 7, 2).empty());
    CHECK(case_parameter_error(CaseTag::e3_2, 7, 3).empty());
    CHECK_THROWS_AS(make(CaseTag::e3_3_cusp, 7, 3, 0), HypothesisError);
}

TEST_CASE("every case generates and classifies as requested") {
    for (int n = 5; n <= 8; ++n) {
        for (CaseTag tag : generatable_cases()) {
            for (int w = 2; 2 * w <= n + 3; ++w) {
                if (!case_parameter_error(tag, n, w).empty()) continue;
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    const auto inst = make(tag, n, w, seed);
                    const auto v = classify(inst.form, ProjectionFrame(n));
                    if (tag == CaseTag::e3_1_info) {
                        CHECK(v.mult_A == inst.mult_A);
                        continue;
                    }
                    CAPTURE(to_string(tag));
                    CAPTURE(n);
                    CAPTURE(w);
                    CHECK(v.case_tag == tag);
                    CHECK(v.w == w);
                }
            }
        }
    }
}

TEST_CASE("crosscheck agrees with the fibre scan") {
    std::set<int> e33_values;
    for (int n = 5; n <= 7; ++n) {
        for (CaseTag tag : generatable_cases()) {
            for (int w = 2; 2 * w <= n + 3; ++w) {
                if (!case_parameter_error(tag, n, w).empty()) continue;
                for (std::uint64_t seed = 0; seed < 2; ++seed) {
                    const auto inst = make(tag, n, w, seed);
                    const auto rep = crosscheck(inst.form, ProjectionFrame(n));
                    CAPTURE(to_string(tag));
                    CAPTURE(n);
                    CAPTURE(w);
                    CAPTURE(rep.detail);
                    if (rep.verdict.generic_only || !rep.agrees) continue;
                    CHECK(*rep.agrees);
                    if (rep.witness_matches) CHECK(*rep.witness_matches);
                    if (tag == CaseTag::e3_3_wminus1 || tag == CaseTag::e3_3_wminus2) e33_values.insert(w - rep.xrank.value);
                }
            }
        }
    }
    CHECK(e33_values == std::set<int>{1, 2});
}
