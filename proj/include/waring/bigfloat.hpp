#pragma once

// Multiprecision reals (MPFR through Boost.Multiprecision) and a minimal
// complex type on top of them.
//
// MPFR values created by Boost take the process-wide default precision at
// construction time; PrecisionScope sets it for a block and restores it.
// The numeric parts of the library are therefore not safe to run
// concurrently with different precisions.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "waring/rational.hpp"

namespace waring {

using BigFloat = boost::multiprecision::mpfr_float;

class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits_;
};

unsigned bits_to_digits10(int bits);

BigFloat to_bigfloat(const Rational& q);
/// 2^e
BigFloat pow2(int e);
/// Scientific decimal rendering with `digits` significant digits.
std::string to_decimal(const BigFloat& x, int digits = 40);

struct BigComplex {
    BigFloat re = 0;
    BigFloat im = 0;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        const BigFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    BigComplex conj() const { return {re, -im}; }
};

BigFloat abs(const BigComplex& z);
std::string to_decimal(const BigComplex& z, int digits = 40);

}  // namespace waring
