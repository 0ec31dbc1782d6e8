#include "waring/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace waring {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const BigFloat& x) { return to_decimal(x, 40); }

Json to_json(const BigComplex& z) { return Json{{"re", to_decimal(z.re, 40)}, {"im", to_decimal(z.im, 40)}}; }

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Json upoly(const UPoly<Rational>& p) { return rationals(p.coeffs()); }

}  // namespace

Json form_to_json(const BinaryForm& f) {
    return Json{{"degree", f.degree()}, {"coeffs", rationals(f.coeffs())}, {"basis", "monomial"},
                {"expression", to_expression(f)}};
}

BinaryForm form_from_json(const Json& j) {
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        return text.find('[') != std::string::npos ? parse_form(text) : parse_expression(text);
    }
    if (!j.is_object() || !j.contains("coeffs")) throw ParseError("form JSON needs \"coeffs\"");
    if (j.contains("basis") && j["basis"] != "monomial") throw ParseError("only the monomial basis is supported");
    std::vector<Rational> c;
    for (const auto& v : j["coeffs"]) c.push_back(rational_from_json(v));
    if (c.empty()) throw ParseError("empty coefficient list");
    if (j.contains("degree") && j["degree"].get<int>() + 1 != static_cast<int>(c.size()))
        throw ParseError("degree does not match the number of coefficients");
    return BinaryForm(std::move(c));
}

Json point_to_json(const P1Point& p) { return Json::array({to_json(p.a()), to_json(p.b())}); }

Json scheme_to_json(const ZeroScheme& s) {
    Json factors = Json::array();
    for (const auto& f : s.factors())
        factors.push_back(Json::array({to_expression(f.form), f.multiplicity}));
    return Json{{"degree", s.degree()}, {"reduced", s.is_reduced()}, {"factors", factors}};
}

Json certificate_to_json(const RankCertificate& c) {
    Json witness{{"type", c.kind == WitnessKind::SquareFree ? "squarefree" : "nonreduced"},
                 {"form", form_to_json(c.apolar_form)}};
    witness["factors"] = scheme_to_json(c.scheme)["factors"];
    return Json{{"w", c.border_rank}, {"r", c.rank}, {"kernel_dimension", c.kernel_dimension}, {"witness", witness}};
}

Json projected_to_json(const ProjectedPoint& p) {
    return Json{{"n", p.n}, {"coords", rationals(p.coords)}, {"deleted_slot", 1}};
}

ProjectedPoint projected_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coords"))
        throw ParseError("projected point JSON needs \"n\" and \"coords\"");
    if (j.contains("deleted_slot") && j["deleted_slot"] != 1) throw ParseError("only deleted_slot 1 is supported");
    std::vector<Rational> c;
    for (const auto& v : j["coords"]) c.push_back(rational_from_json(v));
    return ProjectedPoint(j["n"].get<int>(), std::move(c));
}

Json algebraic_to_json(const AlgebraicNumber& a) {
    Json out{{"minpoly", upoly(a.minpoly)}, {"approximation", to_json(a.approximation)}, {"radius", to_json(a.radius)}};
    if (a.is_rational()) out["value"] = to_json(a.rational_value());
    return out;
}

Json xrank_to_json(const XRankResult& r) {
    Json examined = Json::array();
    for (const auto& e : r.examined)
        examined.push_back(Json{{"lambda", algebraic_to_json(e.lambda)},
                                {"generic", e.generic},
                                {"border_rank", e.border_rank},
                                {"rank", e.rank}});
    Json pts = Json::array();
    for (const auto& p : r.witness_points) pts.push_back(point_to_json(p));
    Json unexplored = Json::array();
    for (const auto& a : r.unexplored) unexplored.push_back(algebraic_to_json(a));
    return Json{{"value", r.value},
                {"witness_lambda", algebraic_to_json(r.witness_lambda)},
                {"witness_generic", r.witness_generic},
                {"border_rank", r.border_rank},
                {"fiber_rank", r.fiber_rank},
                {"kernel_dimension", r.kernel_dimension},
                {"witness_type", r.kind == WitnessKind::SquareFree ? "squarefree" : "nonreduced"},
                {"apolar_form", r.apolar_form},
                {"witness_points", pts},
                {"witness_splits", r.witness_splits},
                {"generic_level", r.generic_level},
                {"incomplete", r.incomplete},
                {"unexplored", unexplored},
                {"examined", examined}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        Json term{{"scalar", to_json(t.scalar)}, {"point", Json::array({to_json(t.alpha), to_json(t.beta)})}};
        if (t.exact_scalar && t.exact_alpha && t.exact_beta)
            term["exact"] = Json{{"scalar", t.exact_scalar->to_string()},
                                 {"point", Json::array({t.exact_alpha->to_string(), t.exact_beta->to_string()})}};
        terms.push_back(term);
    }
    Json out{{"rank", d.terms.size()},
             {"field", to_string(d.field_tag)},
             {"precision_bits", d.precision_bits},
             {"residual", to_json(d.residual)},
             {"terms", terms}};
    if (d.field) out["field_minpoly"] = upoly(d.field->minpoly());
    return out;
}

Json verdict_to_json(const ClassifierVerdict& v, bool explain) {
    Json out{{"theorem", v.theorem}, {"case_tag", to_string(v.case_tag)}};
    if (v.prediction) {
        if (v.prediction->exact())
            out["prediction"] = Json{{"value", v.prediction->lo}};
        else
            out["prediction"] = Json{{"lo", v.prediction->lo}, {"hi", v.prediction->hi}};
    } else {
        out["prediction"] = nullptr;
    }
    if (v.witness_form) {
        Json pts = Json::array();
        for (const auto& p : v.witness_points) pts.push_back(point_to_json(p));
        out["witness"] = Json{{"form", form_to_json(*v.witness_form)}, {"rational_points", pts}, {"unique", v.witness_unique}};
    } else {
        out["witness"] = nullptr;
    }
    out["generic_only"] = v.generic_only;
    out["proof_derived"] = v.proof_derived;
    Json inputs{{"n", v.n}, {v.theorem == "e4" ? "rho" : "w", v.w}, {"mult_A", v.mult_A}, {"scheme_reduced", v.scheme_reduced}};
    if (v.residual_reduced) inputs["residual_reduced"] = *v.residual_reduced;
    out["inputs"] = inputs;
    out["hypothesis"] = Json{{"satisfied", v.case_tag != CaseTag::out_of_scope}, {"violated", v.violated_hypothesis}};
    if (explain) out["trace"] = v.trace;
    return out;
}

Json instance_to_json(const GeneratedInstance& g) {
    Json pts = Json::array();
    for (const auto& [p, k] : g.points) pts.push_back(Json{{"point", point_to_json(p)}, {"multiplicity", k}});
    Json out{{"case", to_string(g.spec.tag)},
             {"n", g.spec.n},
             {g.spec.tag == CaseTag::e4_i || g.spec.tag == CaseTag::e4_ii || g.spec.tag == CaseTag::e4_iii ? "rho" : "w",
              g.spec.w},
             {"seed", g.spec.seed},
             {"attempts", g.attempts},
             {"form", form_to_json(g.form)},
             {"scheme", scheme_to_json(g.scheme)},
             {"points", pts},
             {"mult_A", g.mult_A}};
    if (g.o_in_span) out["o_in_span"] = *g.o_in_span;
    return out;
}

Json crosscheck_to_json(const CrosscheckReport& r) {
    Json out{{"verdict", verdict_to_json(r.verdict, false)}, {"x_rank", r.xrank.value}, {"detail", r.detail}};
    out["agrees"] = r.agrees ? Json(*r.agrees) : Json(nullptr);
    out["witness_matches"] = r.witness_matches ? Json(*r.witness_matches) : Json(nullptr);
    return out;
}

Json witness_to_json(const SpanWitness& w) {
    Json params = Json::array();
    for (std::size_t j = 0; j < w.a.size(); ++j) params.push_back(Json::array({to_json(w.a[j]), to_json(w.b[j])}));
    Json scalars = Json::array();
    for (const auto& s : w.scalars) scalars.push_back(to_json(s));
    return Json{{"r", w.a.size()},
                {"parameters", params},
                {"scalars", scalars},
                {"residual", to_json(w.residual)},
                {"start", w.start},
                {"target", projected_to_json(w.target)}};
}

Json secant_to_json(int s, int n, const SecantProbe& p) {
    return Json{{"s", s},
                {"n", n},
                {"dimension", p.dimension},
                {"expected", std::min(n, 2 * s - 1)},
                {"exact_rank", p.exact_rank},
                {"numeric_rank", p.numeric_rank},
                {"attempts", p.attempts}};
}

Json fuzz_to_json(const DichotomyReport& r) {
    Json hist = Json::object();
    for (const auto& [rank, count] : r.rank_histogram) hist[std::to_string(rank)] = count;
    Json out{{"degree", r.degree}, {"samples", r.samples}, {"checked", r.checked}, {"violations", r.violations},
             {"rank_histogram", hist}};
    out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    return out;
}

Json error_to_json(const std::string& code, const std::string& message) {
    return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

namespace {

Input input_from_json(const Json& j) {
    if (j.is_string()) return form_from_json(j);
    if (!j.is_object()) throw ParseError("expected a JSON object");
    if (j.contains("coeffs")) return form_from_json(j);
    if (j.contains("coords")) return projected_from_json(j);
    for (const char* key : {"form", "point", "input"})
        if (j.contains(key)) return input_from_json(j[key]);
    throw ParseError("JSON input holds neither a form nor a projected point");
}

}  // namespace

Input parse_input(const std::string& raw) {
    std::string text = raw;
    // Pipelines may carry several records; the first non-empty line is the input.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    text = text.substr(first);
    if (text.front() == '{' || text.front() == '"') {
        const auto end = text.find('\n');
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error&) {
            try {
                j = Json::parse(text.substr(0, end));
            } catch (const Json::parse_error& e) {
                throw ParseError(std::string("malformed JSON: ") + e.what());
            }
        }
        return input_from_json(j);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text.find('[') != std::string::npos ? Input(parse_form(text)) : Input(parse_expression(text));
}

}  // namespace waring
