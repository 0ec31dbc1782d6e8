#pragma once

// JSON serialisation of every result type. Exact rationals are strings "p/q"
// (or "p"); multiprecision reals are decimal strings; algebraic numbers carry
// their minimal polynomial, an approximation and an isolation radius.

#include <json.hpp>

#include <string>
#include <variant>

#include "waring/classifier.hpp"
#include "waring/decompose.hpp"
#include "waring/oracle.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const BigFloat& x);
Json to_json(const BigComplex& z);

Json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);
Json point_to_json(const P1Point& p);
Json scheme_to_json(const ZeroScheme& s);
Json certificate_to_json(const RankCertificate& c);
Json projected_to_json(const ProjectedPoint& p);
ProjectedPoint projected_from_json(const Json& j);
Json algebraic_to_json(const AlgebraicNumber& a);
Json xrank_to_json(const XRankResult& r);
Json decomposition_to_json(const Decomposition& d);
Json verdict_to_json(const ClassifierVerdict& v, bool explain);
Json instance_to_json(const GeneratedInstance& g);
Json crosscheck_to_json(const CrosscheckReport& r);
Json witness_to_json(const SpanWitness& w);
Json secant_to_json(int s, int n, const SecantProbe& p);
Json fuzz_to_json(const DichotomyReport& r);
Json error_to_json(const std::string& code, const std::string& message);

/// Decoded command input: a form, or a projected point.
using Input = std::variant<BinaryForm, ProjectedPoint>;

/// Accepts the "d=...; [...]" grammar, a polynomial expression, a form or
/// projected point JSON object, or any JSON object holding one under "form",
/// "point" or "input". Throws ParseError.
Input parse_input(const std::string& text);

}  // namespace waring
