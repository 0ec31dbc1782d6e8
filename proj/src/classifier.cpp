#include "waring/classifier.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "waring/roots.hpp"

namespace waring {

namespace {

constexpr std::array<std::pair<CaseTag, const char*>, 12> kTags{{
    {CaseTag::e4_i, "e4_i"},
    {CaseTag::e4_ii, "e4_ii"},
    {CaseTag::e4_iii, "e4_iii"},
    {CaseTag::e3_1_info, "e3_1_info"},
    {CaseTag::e3_2, "e3_2"},
    {CaseTag::e3_3_wminus1, "e3_3_wminus1"},
    {CaseTag::e3_3_wminus2, "e3_3_wminus2"},
    {CaseTag::e3_3_cusp, "e3_3_cusp"},
    {CaseTag::e3_4_exact, "e3_4_exact"},
    {CaseTag::e3_4_interval, "e3_4_interval"},
    {CaseTag::e3_5, "e3_5"},
    {CaseTag::out_of_scope, "out_of_scope"},
}};

const P1Point kA = P1Point::cusp_source();

BinaryForm t_power(int k) { return BinaryForm::monomial(k, k); }

std::string str(int v) { return std::to_string(v); }

}  // namespace

const char* to_string(CaseTag tag) {
    for (const auto& [t, name] : kTags)
        if (t == tag) return name;
    return "out_of_scope";
}

std::optional<CaseTag> parse_case_tag(const std::string& text) {
    for (const auto& [t, name] : kTags)
        if (text == name) return t;
    return std::nullopt;
}

const std::vector<CaseTag>& generatable_cases() {
    static const std::vector<CaseTag> cases = [] {
        std::vector<CaseTag> out;
        for (const auto& [t, name] : kTags)
            if (t != CaseTag::out_of_scope) out.push_back(t);
        return out;
    }();
    return cases;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Rational>> scheme_span(const BinaryForm& g, int d) {
    const int m = g.degree();
    if (g.is_zero()) throw ZeroFormError("span of the scheme of the zero form");
    if (m > d + 1) throw RangeError("scheme degree exceeds d + 1");
    if (m == d + 1) {
        std::vector<std::vector<Rational>> all;
        for (int i = 0; i <= d; ++i) all.push_back(BinaryForm::monomial(d, i).coeffs());
        return all;
    }
    // f is in the span iff Cat_m(f) g = 0; row j of that map pairs g with f shifted by j.
    Matrix<Rational> map(static_cast<std::size_t>(d - m + 1), static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d - m; ++j)
        for (int k = 0; k <= m; ++k)
            map(static_cast<std::size_t>(j), static_cast<std::size_t>(j + k)) =
                g[static_cast<std::size_t>(k)] / Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j + k)));
    return nullspace(map);
}

namespace {

// Osculating spaces: k P spans L^{d-k+1} times all forms of degree k-1.
std::vector<std::vector<Rational>> osculating_span(const P1Point& p, int k, int d) {
    std::vector<std::vector<Rational>> out;
    const BinaryForm base = linear_power(p.a(), p.b(), d - k + 1);
    for (int j = 0; j < k; ++j) out.push_back((base * BinaryForm::monomial(k - 1, j)).coeffs());
    return out;
}

std::size_t column_rank(const std::vector<std::vector<Rational>>& cols, std::size_t length) {
    if (cols.empty()) return 0;
    return rank(Matrix<Rational>::from_columns(cols, length));
}

bool in_column_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
    auto extended = basis;
    extended.push_back(v);
    return column_rank(extended, v.size()) == column_rank(basis, v.size());
}

}  // namespace

OInSpan o_in_span_routes(const ZeroScheme& w, const ProjectionFrame& frame) {
    const int d = frame.degree();
    if (w.degree() > frame.n + 2)
        throw RangeError("scheme degree " + str(w.degree()) + " exceeds n + 2 = " + str(frame.n + 2));
    OInSpan out;
    out.multiplicity = multiplicity_at(w, kA) >= 2;

    std::vector<std::vector<Rational>> span;
    for (const auto& factor : w.factors()) {
        const RationalSplit split = split_rational_points(factor.form);
        for (const auto& [pt, mult] : split.points)
            for (auto& v : osculating_span(pt, factor.multiplicity * mult, d)) span.push_back(std::move(v));
        if (split.remainder.degree() > 0) {
            BinaryForm power(std::vector<Rational>{1});
            for (int k = 0; k < factor.multiplicity; ++k) power = power * split.remainder;
            for (auto& v : scheme_span(power, d)) span.push_back(std::move(v));
        }
    }
    out.linear_algebra = in_column_span(span, BinaryForm::monomial(d, 1).coeffs());
    return out;
}

bool o_in_span(const ZeroScheme& w, const ProjectionFrame& frame) {
    const OInSpan r = o_in_span_routes(w, frame);
    if (!r.agree())
        throw HypothesisError("span and multiplicity criteria disagree for a scheme of degree " + str(w.degree()));
    return r.linear_algebra;
}

// ---------------------------------------------------------------------------

namespace {

void set_witness(ClassifierVerdict& v, const BinaryForm& h) {
    v.witness_form = normalized(h);
    for (const auto& [pt, mult] : split_rational_points(h).points) v.witness_points.push_back(pt);
}

void check_degree(const BinaryForm& f, const ProjectionFrame& frame) {
    if (f.degree() != frame.degree())
        throw DegreeMismatch("form of degree " + str(f.degree()) + " for n = " + str(frame.n));
    project(f);  // rejects the centre
}

ClassifierVerdict out_of_scope(const std::string& theorem, int n, int w, const std::string& hypothesis) {
    ClassifierVerdict v;
    v.theorem = theorem;
    v.case_tag = CaseTag::out_of_scope;
    v.n = n;
    v.w = w;
    v.violated_hypothesis = hypothesis;
    v.trace.push_back("hypothesis not met: " + hypothesis);
    return v;
}

}  // namespace

ClassifierVerdict classify_e4(const BinaryForm& m, const ProjectionFrame& frame) {
    check_degree(m, frame);
    const int n = frame.n;
    const RankCertificate cert = rank(m);
    if (cert.kind != WitnessKind::SquareFree)
        throw HypothesisError("rank " + str(cert.rank) + " exceeds border rank " + str(cert.border_rank));
    const int rho = cert.rank;
    if (rho < 2) throw HypothesisError("rho >= 2");

    ClassifierVerdict v;
    v.theorem = "e4";
    v.n = n;
    v.w = rho;
    v.scheme_reduced = true;
    v.mult_A = multiplicity_at(cert.apolar_form, kA);
    v.trace.push_back("r_C(M) = br_C(M) = rho = " + str(rho) + " with a square-free apolar form");
    v.trace.push_back(std::string("A ") + (v.mult_A ? "is" : "is not") + " in E");

    if (2 * rho <= n) {
        v.case_tag = CaseTag::e4_i;
        v.prediction = Prediction{rho, rho};
        v.witness_unique = true;
        set_witness(v, cert.apolar_form);
        v.trace.push_back("2 rho = " + str(2 * rho) + " <= n: exact value rho, l_O(E) is the unique computing set");
    } else if (2 * rho <= n + 2) {
        v.case_tag = CaseTag::e4_ii;
        v.prediction = Prediction{rho - 1, rho};
        set_witness(v, cert.apolar_form);
        v.trace.push_back("n + 1 <= 2 rho = " + str(2 * rho) + " <= n + 2: rho - 1 <= r_X(P) <= rho");
    } else if (n % 2 == 1 && 2 * rho == n + 3) {
        v.case_tag = CaseTag::e4_iii;
        v.prediction = Prediction{rho - 1, rho - 1};
        v.generic_only = true;
        v.trace.push_back("n odd and 2 rho = n + 3: r_X(P) = rho - 1 for M in a dense open subset only");
    } else {
        throw HypothesisError("2 rho <= n + 3");
    }
    return v;
}

ClassifierVerdict classify_e3(const BinaryForm& b, const ProjectionFrame& frame) {
    check_degree(b, frame);
    const int n = frame.n, d = frame.degree();
    const RankCertificate cert = rank(b);
    if (cert.kind != WitnessKind::NonReduced)
        throw HypothesisError("rank equals border rank " + str(cert.border_rank));
    const int w = cert.border_rank;
    if (2 * w > n + 3) throw HypothesisError("2w <= n + 3");
    if (2 * w > d + 1) throw HypothesisError("unique border scheme (2w <= n + 2)");

    const ZeroScheme W = border_scheme(b).scheme;
    const BinaryForm gW = W.defining_form();
    const int m = multiplicity_at(W, kA);

    ClassifierVerdict v;
    v.theorem = "e3";
    v.n = n;
    v.w = w;
    v.mult_A = m;
    v.scheme_reduced = W.is_reduced();
    v.trace.push_back("br_C(B) = w = " + str(w) + " < r_C(B) = " + str(cert.rank) + ", W non-reduced and unique");
    v.trace.push_back("A has multiplicity " + str(m) + " in W");
    if (w <= n) {
        const bool in = o_in_span(W, frame);
        v.trace.push_back(std::string("O ") + (in ? "lies" : "does not lie") + " in <W>");
    }

    if (m == 2 && w == 2) {
        v.case_tag = CaseTag::e3_3_cusp;
        v.prediction = Prediction{1, 1};
        set_witness(v, kA.vanishing_form());
        v.trace.push_back("W = 2A: P is the cusp of X");
        return v;
    }
    if (m >= 2) {
        const BinaryForm residual = exact_divide(gW, t_power(2));
        const bool reduced = residual.degree() == 0 || is_square_free(residual);
        v.residual_reduced = reduced;
        if (m >= 3 || !reduced) {
            v.case_tag = CaseTag::e3_2;
            v.prediction = Prediction{n + 3 - w, n + 3 - w};
            v.trace.push_back(m >= 3 ? "m >= 3" : "m = 2 and W minus 2A is not reduced");
            v.trace.push_back("r_X(P) = n + 3 - w");
            return v;
        }
        // m = 2, S = W minus 2A reduced: decided by B in <S u {O}>.
        v.proof_derived = true;
        auto basis = scheme_span(residual, d);
        basis.push_back(BinaryForm::monomial(d, 1).coeffs());
        if (in_column_span(basis, b.coeffs())) {
            v.case_tag = CaseTag::e3_3_wminus2;
            v.prediction = Prediction{w - 2, w - 2};
            set_witness(v, residual);
            v.trace.push_back("B lies in <S u {O}> with S = W minus 2A: r_X(P) = w - 2, computed by l_O(S)");
        } else {
            v.case_tag = CaseTag::e3_3_wminus1;
            v.prediction = Prediction{w - 1, w - 1};
            set_witness(v, residual * kA.vanishing_form());
            v.trace.push_back("B does not lie in <S u {O}>: r_X(P) = w - 1, computed by l_O(W_red)");
        }
        return v;
    }
    if (m == 0) {
        if (2 * w <= n - 1) {
            v.case_tag = CaseTag::e3_4_exact;
            v.prediction = Prediction{n + 1 - w, n + 1 - w};
            v.trace.push_back("A not in W and 2w <= n - 1: r_X(P) = n + 1 - w");
            return v;
        }
        if (2 * w <= n + 1) {
            v.case_tag = CaseTag::e3_4_interval;
            v.prediction = Prediction{n + 1 - w, n + 3 - w};
            v.trace.push_back("A not in W and n <= 2w <= n + 1: n + 1 - w <= r_X(P) <= n + 3 - w");
            return v;
        }
        auto out = out_of_scope("e3", n, w, "2w <= n + 1 (A not in W)");
        out.mult_A = m;
        return out;
    }
    if (2 * w <= n) {
        v.case_tag = CaseTag::e3_5;
        v.prediction = Prediction{n + 2 - w, n + 2 - w};
        v.trace.push_back("A has multiplicity 1 in W and 2w <= n: r_X(P) = n + 2 - w");
        return v;
    }
    auto out = out_of_scope("e3", n, w, "2w <= n (A simple in W)");
    out.mult_A = m;
    return out;
}

ClassifierVerdict classify(const BinaryForm& f, const ProjectionFrame& frame) {
    check_degree(f, frame);
    const RankCertificate cert = rank(f);
    const bool e4 = cert.kind == WitnessKind::SquareFree;
    try {
        return e4 ? classify_e4(f, frame) : classify_e3(f, frame);
    } catch (const HypothesisError& e) {
        return out_of_scope(e4 ? "e4" : "e3", frame.n, cert.border_rank, e.what());
    }
}

// ---------------------------------------------------------------------------

std::string case_parameter_error(CaseTag tag, int n, int w) {
    if (n < 3) return "n >= 3";
    switch (tag) {
        case CaseTag::e4_i:
            return (w >= 2 && 2 * w <= n) ? "" : "2 <= rho and 2 rho <= n";
        case CaseTag::e4_ii:
            return (w >= 2 && n + 1 <= 2 * w && 2 * w <= n + 2) ? "" : "n + 1 <= 2 rho <= n + 2";
        case CaseTag::e4_iii:
            return (n % 2 == 1 && 2 * w == n + 3) ? "" : "n odd and 2 rho = n + 3";
        case CaseTag::e3_1_info:
            return (w >= 2 && 2 * w <= n + 2) ? "" : "2 <= w and 2w <= n + 2";
        case CaseTag::e3_2:
        case CaseTag::e3_3_wminus1:
        case CaseTag::e3_3_wminus2:
            return (w >= 3 && 2 * w <= n + 2) ? "" : "3 <= w and 2w <= n + 2";
        case CaseTag::e3_3_cusp:
            return w == 2 ? "" : "w = 2";
        case CaseTag::e3_4_exact:
            return (w >= 2 && 2 * w <= n - 1) ? "" : "2 <= w and 2w <= n - 1";
        case CaseTag::e3_4_interval:
            return (w >= 2 && n <= 2 * w && 2 * w <= n + 1) ? "" : "2 <= w and n <= 2w <= n + 1";
        case CaseTag::e3_5:
            return (w >= 3 && 2 * w <= n) ? "" : "3 <= w and 2w <= n";
        case CaseTag::out_of_scope:
            return "out_of_scope instances are not generated";
    }
    return "unknown case";
}

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    int below(int k) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(k)); }

    Rational nonzero(int bound, int den) {
        while (true) {
            const int p = below(2 * bound + 1) - bound;
            if (p == 0) continue;
            Rational q(p, 1 + below(den));
            q.canonicalize();
            return q;
        }
    }

    /// Distinct points different from A.
    std::vector<P1Point> points(int count, const std::vector<P1Point>& avoid) {
        std::vector<P1Point> out;
        while (static_cast<int>(out.size()) < count) {
            const P1Point p = below(10) == 0 ? P1Point(0, 1) : P1Point(1, nonzero(12, 3));
            if (p == kA || std::find(out.begin(), out.end(), p) != out.end() ||
                std::find(avoid.begin(), avoid.end(), p) != avoid.end())
                continue;
            out.push_back(p);
        }
        return out;
    }

    /// Multiplicities summing to total, at least one >= 2 when asked.
    std::vector<int> partition(int total, bool nonreduced) {
        std::vector<int> out;
        int rem = total;
        if (nonreduced) {
            const int k = 2 + below(std::min(rem, 3) - 1);
            out.push_back(k);
            rem -= k;
        }
        while (rem > 0) {
            const int k = 1 + below(std::min(rem, 3));
            out.push_back(k);
            rem -= k;
        }
        return out;
    }

    BinaryForm form(int degree) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(below(3) == 0 ? Rational(0) : nonzero(9, 4));
        if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_zero(q); })) c[0] = 1;
        return BinaryForm(std::move(c));
    }

    /// Every coefficient nonzero: a sample of the general form.
    BinaryForm dense_form(int degree) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(nonzero(99, 4));
        return BinaryForm(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

ZeroScheme scheme_of(const std::vector<std::pair<P1Point, int>>& pts) {
    std::vector<SchemeFactor<Rational>> factors;
    for (const auto& [p, k] : pts) factors.push_back({normalized(p.vanishing_form()), k});
    return ZeroScheme(std::move(factors));
}

/// B = sum over points of L_P^{d-k+1} h_P with h_P random of degree k - 1.
BinaryForm point_in_span(Draw& draw, const std::vector<std::pair<P1Point, int>>& pts, int d) {
    BinaryForm b = BinaryForm::zero(d);
    for (const auto& [p, k] : pts) b = b + linear_power(p.a(), p.b(), d - k + 1) * draw.form(k - 1);
    return b;
}

/// B spans W: not in the span of any maximal proper subscheme, and W is
/// recovered as the border scheme.
bool spans_exactly(const BinaryForm& b, const std::vector<std::pair<P1Point, int>>& pts) {
    const ZeroScheme W = scheme_of(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto smaller = pts;
        if (--smaller[i].second == 0) smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (smaller.empty()) {
            if (b.is_zero()) return false;
            continue;
        }
        if (in_span(b, scheme_of(smaller).defining_form())) return false;
    }
    if (b.is_zero() || border_rank(b) != W.degree()) return false;
    try {
        return proportional(border_scheme(b).scheme.defining_form(), W.defining_form());
    } catch (const AmbiguousScheme&) {
        return false;
    }
}

bool is_center(const BinaryForm& b) {
    try {
        project(b);
        return false;
    } catch (const CenterOfProjection&) {
        return true;
    }
}

}  // namespace

GeneratedInstance generate_instance(const InstanceSpec& spec) {
    const std::string err = case_parameter_error(spec.tag, spec.n, spec.w);
    if (!err.empty()) throw HypothesisError(std::string(to_string(spec.tag)) + " requires " + err);
    const int n = spec.n, d = n + 1, w = spec.w;
    Draw draw(spec.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(spec.tag) * 1000003ULL +
              static_cast<std::uint64_t>(n) * 131ULL + static_cast<std::uint64_t>(w));

    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        GeneratedInstance inst;
        inst.spec = spec;
        inst.attempts = attempt;
        std::vector<std::pair<P1Point, int>> pts;
        BinaryForm b;

        switch (spec.tag) {
            case CaseTag::e4_i:
            case CaseTag::e4_ii: {
                const bool with_a = draw.below(3) == 0;
                auto others = draw.points(with_a ? w - 1 : w, {});
                if (with_a) pts.emplace_back(kA, 1);
                for (const auto& p : others) pts.emplace_back(p, 1);
                b = point_in_span(draw, pts, d);
                const RankCertificate cert = rank(b);
                if (cert.kind != WitnessKind::SquareFree || cert.rank != w) continue;
                if (!proportional(cert.apolar_form, scheme_of(pts).defining_form())) continue;
                break;
            }
            case CaseTag::e4_iii: {
                b = draw.dense_form(d);
                const RankCertificate cert = rank(b);
                if (cert.kind != WitnessKind::SquareFree || cert.rank != w) continue;
                break;
            }
            case CaseTag::e3_3_cusp:
                pts.emplace_back(kA, 2);
                b = point_in_span(draw, pts, d);
                break;
            case CaseTag::e3_3_wminus1:
            case CaseTag::e3_3_wminus2: {
                for (const auto& p : draw.points(w - 2, {})) pts.emplace_back(p, 1);
                b = BinaryForm::zero(d);
                for (const auto& [p, k] : pts) b = b + draw.nonzero(9, 4) * linear_power(p.a(), p.b(), d);
                b = b + BinaryForm::monomial(d, 1, draw.nonzero(9, 4));
                if (spec.tag == CaseTag::e3_3_wminus1) b = b + BinaryForm::monomial(d, 0, draw.nonzero(9, 4));
                pts.emplace_back(kA, 2);
                break;
            }
            default: {
                // Schemes with prescribed multiplicity at A.
                int m = 0;
                bool nonreduced_rest = true;
                switch (spec.tag) {
                    case CaseTag::e3_2:
                        m = (w >= 4 && draw.below(2) == 0) ? 2 : 3 + draw.below(w - 2);
                        nonreduced_rest = m == 2;
                        break;
                    case CaseTag::e3_4_exact:
                    case CaseTag::e3_4_interval:
                        m = 0;
                        break;
                    case CaseTag::e3_5:
                        m = 1;
                        break;
                    case CaseTag::e3_1_info:
                        m = draw.below(w + 1);
                        nonreduced_rest = m <= 1;
                        break;
                    default:
                        throw HypothesisError("unsupported case");
                }
                if (nonreduced_rest && w - m < 2) continue;
                const auto mults = draw.partition(w - m, nonreduced_rest);
                const auto others = draw.points(static_cast<int>(mults.size()), {});
                if (m > 0) pts.emplace_back(kA, m);
                for (std::size_t i = 0; i < mults.size(); ++i) pts.emplace_back(others[i], mults[i]);
                b = point_in_span(draw, pts, d);
                break;
            }
        }

        if (b.is_zero() || is_center(b)) continue;
        if (spec.tag != CaseTag::e4_iii && !spans_exactly(b, pts)) continue;

        inst.form = b;
        inst.points = pts;
        if (!pts.empty()) inst.scheme = scheme_of(pts);
        for (const auto& [p, k] : pts)
            if (p == kA) inst.mult_A = k;
        if (spec.tag == CaseTag::e3_1_info) inst.o_in_span = inst.mult_A >= 2;
        return inst;
    }
    throw RetryExhausted(std::string("no admissible ") + to_string(spec.tag) + " instance after " +
                         str(spec.max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------

CrosscheckReport crosscheck(const BinaryForm& f, const ProjectionFrame& frame, const XRankOptions& options) {
    CrosscheckReport rep;
    rep.verdict = classify(f, frame);
    rep.xrank = x_rank(project(f), options);
    const int value = rep.xrank.value;
    if (rep.verdict.prediction) {
        const Prediction& p = *rep.verdict.prediction;
        rep.agrees = p.lo <= value && value <= p.hi;
        rep.detail = "fibre scan " + str(value) + (*rep.agrees ? " within " : " outside ") + "[" + str(p.lo) + ", " +
                     str(p.hi) + "]";
        if (rep.verdict.generic_only) rep.detail += " (generic-only prediction)";
    } else {
        rep.detail = "fibre scan " + str(value) + "; no prediction (" + rep.verdict.violated_hypothesis + ")";
    }
    if (rep.verdict.case_tag == CaseTag::e4_i) {
        rep.witness_matches = rep.xrank.kind == WitnessKind::SquareFree && rep.xrank.rational_apolar_form &&
                              rep.verdict.witness_form &&
                              proportional(*rep.xrank.rational_apolar_form, *rep.verdict.witness_form);
    }
    return rep;
}

}  // namespace waring
