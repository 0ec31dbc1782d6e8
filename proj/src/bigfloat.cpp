#include "waring/bigfloat.hpp"

#include <cmath>
#include <sstream>

namespace waring {

unsigned bits_to_digits10(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(int bits) : saved_digits_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_digits_); }

BigFloat to_bigfloat(const Rational& q) { return BigFloat(q.get_mpq_t()); }

BigFloat pow2(int e) {
    BigFloat x = 1;
    mpfr_mul_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
    return x;
}

std::string to_decimal(const BigFloat& x, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits) << x;
    return os.str();
}

BigFloat abs(const BigComplex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

std::string to_decimal(const BigComplex& z, int digits) {
    std::string out = to_decimal(z.re, digits);
    if (z.im >= 0)
        out += "+" + to_decimal(z.im, digits) + "i";
    else
        out += to_decimal(z.im, digits) + "i";
    return out;
}

}  // namespace waring
