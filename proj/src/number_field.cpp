#include "waring/number_field.hpp"

#include "waring/errors.hpp"

namespace waring {

NumberField::NumberField(const UPoly<Rational>& minpoly) : minpoly_(monic(minpoly)) {
    if (minpoly_.degree() < 1) throw RangeError("number field needs a minimal polynomial of degree >= 1");
}

NfElement::NfElement(const Rational& q) : value_(UPoly<Rational>::constant(q)) {}

NfElement::NfElement(NumberFieldPtr field, const UPoly<Rational>& value) : field_(std::move(field)) {
    value_ = field_ ? divmod(value, field_->minpoly()).second : value;
    if (!field_ && value_.degree() > 0) throw RangeError("non-constant element without a number field");
}

NfElement NfElement::generator(NumberFieldPtr field) {
    return NfElement(std::move(field), UPoly<Rational>::monomial(Rational(1), 1));
}

NumberFieldPtr NfElement::common_field(const NfElement& a, const NfElement& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        !(a.field_->minpoly() == b.field_->minpoly()))
        throw RangeError("mixing elements of different number fields");
    return a.field_ ? a.field_ : b.field_;
}

NfElement operator+(const NfElement& a, const NfElement& b) {
    NfElement r;
    r.field_ = NfElement::common_field(a, b);
    r.value_ = a.value_ + b.value_;
    return r;
}

NfElement operator-(const NfElement& a, const NfElement& b) {
    NfElement r;
    r.field_ = NfElement::common_field(a, b);
    r.value_ = a.value_ - b.value_;
    return r;
}

NfElement operator-(const NfElement& a) {
    NfElement r = a;
    r.value_ = -a.value_;
    return r;
}

NfElement operator*(const NfElement& a, const NfElement& b) {
    auto field = NfElement::common_field(a, b);
    if (a.is_rational()) return NfElement(field, a.rational_value() * b.value_);
    if (b.is_rational()) return NfElement(field, b.rational_value() * a.value_);
    return NfElement(field, a.value_ * b.value_);
}

NfElement NfElement::inverse() const {
    if (is_zero()) throw RangeError("division by zero in number field");
    if (is_rational()) {
        NfElement r(Rational(1) / rational_value());
        r.field_ = field_;
        return r;
    }
    auto [g, s] = gcd_with_cofactor(value_, field_->minpoly());
    if (g.degree() != 0) throw ZeroDivisor("element is a zero divisor; minimal polynomial is reducible");
    return NfElement(field_, s);
}

NfElement operator/(const NfElement& a, const NfElement& b) {
    NfElement inv = b.inverse();
    if (!inv.field_) inv.field_ = NfElement::common_field(a, b);
    return a * inv;
}

bool operator==(const NfElement& a, const NfElement& b) { return (a - b).is_zero(); }

std::string NfElement::to_string(const std::string& symbol) const {
    if (value_.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= value_.degree(); ++i) {
        const Rational& c = value_.coeffs()[static_cast<std::size_t>(i)];
        if (waring::is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        out += waring::to_string(c);
        if (i == 1) out += "*" + symbol;
        if (i > 1) out += "*" + symbol + "^" + std::to_string(i);
    }
    return out;
}

}  // namespace waring
