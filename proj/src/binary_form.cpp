#include "waring/binary_form.hpp"

#include <cctype>
#include <map>

namespace waring {

ApolarCoeffs apolar_coeffs(const BinaryForm& f) { return {f.degree(), apolar_entries(f)}; }

BinaryForm from_apolar(const ApolarCoeffs& a) {
    std::vector<Rational> c(a.entries.size());
    for (int i = 0; i <= a.degree; ++i)
        c[static_cast<std::size_t>(i)] = a.entries[static_cast<std::size_t>(i)] * Rational(binomial(a.degree, i));
    return BinaryForm(std::move(c));
}

P1Point::P1Point(const Rational& a, const Rational& b) : a_(a), b_(b) {
    if (is_zero(a_) && is_zero(b_)) throw RangeError("(0:0) is not a point of P^1");
    if (!is_zero(a_)) {
        b_ /= a_;
        a_ = 1;
    } else {
        b_ = 1;
    }
}

BinaryForm P1Point::vanishing_form() const { return BinaryForm({b_, -a_}); }
BinaryForm P1Point::linear_form() const { return BinaryForm({a_, b_}); }

std::string P1Point::to_string() const { return "(" + waring::to_string(a_) + ":" + waring::to_string(b_) + ")"; }

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_nonnegative_int(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty() || s.size() > 6) throw ParseError(std::string("malformed ") + what);
    int v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError(std::string("malformed ") + what);
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace

BinaryForm parse_form(std::string_view text) {
    std::string_view s = trim(text);
    if (s.substr(0, 2) != "d=") throw ParseError("form must start with 'd=<degree>;'");
    const auto semi = s.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' after degree");
    const int d = parse_nonnegative_int(s.substr(2, semi - 2), "degree");

    std::string_view list = trim(s.substr(semi + 1));
    if (list.size() < 2 || list.front() != '[' || list.back() != ']')
        throw ParseError("coefficient list must be enclosed in [ ]");
    list = list.substr(1, list.size() - 2);

    std::vector<Rational> coeffs;
    while (true) {
        const auto comma = list.find(',');
        coeffs.push_back(parse_rational(list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    if (static_cast<int>(coeffs.size()) != d + 1)
        throw ParseError("degree " + std::to_string(d) + " needs " + std::to_string(d + 1) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    return BinaryForm(std::move(coeffs));
}

std::string render_form(const BinaryForm& f) {
    std::string out = "d=" + std::to_string(f.degree()) + "; [";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ",";
        out += to_string(f[i]);
    }
    return out + "]";
}

std::string to_expression(const BinaryForm& f) {
    const int d = f.degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
        const Rational& c = f[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        std::string mono;
        auto power = [&](const char* var, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        power("u", d - i);
        power("t", i);

        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        std::string term;
        if (mono.empty())
            term = to_string(mag);
        else if (mag == 1)
            term = mono;
        else
            term = to_string(mag) + "*" + mono;

        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

BinaryForm parse_expression(std::string_view text, std::optional<int> degree) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty expression");

    std::map<std::pair<int, int>, Rational> terms;  // (exp_u, exp_t) -> coefficient
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in expression");
        }
        const std::size_t end = s.find_first_of("+-", pos);
        std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) throw ParseError("empty term in expression");

        Rational coeff = sign;
        int eu = 0, et = 0;
        bool saw_factor = false;
        while (!term.empty()) {
            const auto star = term.find('*');
            std::string_view factor = term.substr(0, star);
            term = star == std::string_view::npos ? std::string_view{} : term.substr(star + 1);
            if (factor.empty()) throw ParseError("empty factor in expression");
            saw_factor = true;
            if (factor[0] == 'u' || factor[0] == 't') {
                int e = 1;
                if (factor.size() > 1) {
                    if (factor[1] != '^') throw ParseError("malformed power '" + std::string(factor) + "'");
                    e = parse_nonnegative_int(factor.substr(2), "exponent");
                }
                (factor[0] == 'u' ? eu : et) += e;
            } else {
                coeff *= parse_rational(factor);
            }
        }
        if (!saw_factor) throw ParseError("empty term");
        terms[{eu, et}] += coeff;
    }

    int d = -1;
    for (const auto& [exps, c] : terms) {
        if (is_zero(c)) continue;
        const int deg = exps.first + exps.second;
        if (d >= 0 && deg != d) throw ParseError("expression is not homogeneous");
        d = deg;
    }
    if (degree) {
        if (d >= 0 && d != *degree) throw ParseError("expression degree does not match");
        d = *degree;
    }
    if (d < 0) throw ParseError("cannot infer the degree of the zero expression");

    auto f = BinaryForm::zero(d);
    for (const auto& [exps, c] : terms)
        if (exps.first + exps.second == d) f[static_cast<std::size_t>(exps.second)] += c;
    return f;
}

}  // namespace waring
