#pragma once

// Arithmetic in a simple algebraic extension K = Q[x]/(mu). Elements carry a
// shared pointer to their field; a null field means "plain rational", which
// lets generic code write F(0) and F(1) for both Rational and NfElement.

#include <memory>
#include <string>
#include <vector>

#include "waring/poly.hpp"
#include "waring/rational.hpp"

namespace waring {

class NumberField {
public:
    /// `minpoly` is low-degree first, degree >= 1; stored monic. Irreducibility
    /// is the caller's responsibility; inverting a zero divisor throws.
    explicit NumberField(const UPoly<Rational>& minpoly);

    int degree() const { return minpoly_.degree(); }
    const UPoly<Rational>& minpoly() const { return minpoly_; }

private:
    UPoly<Rational> minpoly_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NfElement {
public:
    NfElement() = default;
    NfElement(const Rational& q);  // NOLINT(google-explicit-constructor)
    NfElement(long v) : NfElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    NfElement(int v) : NfElement(Rational(v)) {}   // NOLINT(google-explicit-constructor)
    NfElement(NumberFieldPtr field, const UPoly<Rational>& value);

    /// The class of x in K.
    static NfElement generator(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const UPoly<Rational>& value() const { return value_; }

    bool is_zero() const { return value_.is_zero(); }
    bool is_rational() const { return value_.degree() <= 0; }
    Rational rational_value() const { return value_.coeff(0); }

    NfElement inverse() const;

    friend NfElement operator+(const NfElement& a, const NfElement& b);
    friend NfElement operator-(const NfElement& a, const NfElement& b);
    friend NfElement operator-(const NfElement& a);
    friend NfElement operator*(const NfElement& a, const NfElement& b);
    friend NfElement operator/(const NfElement& a, const NfElement& b);
    friend bool operator==(const NfElement& a, const NfElement& b);

    /// Renders as a polynomial in `theta`, e.g. "1/2 + 3*theta".
    std::string to_string(const std::string& symbol = "theta") const;

private:
    static NumberFieldPtr common_field(const NfElement& a, const NfElement& b);

    NumberFieldPtr field_;
    UPoly<Rational> value_;
};

inline bool is_zero(const NfElement& x) { return x.is_zero(); }

}  // namespace waring
