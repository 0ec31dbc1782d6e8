#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

/// Parses `p` or `p/q` in base 10 (optional sign on p). Result is canonical.
Rational parse_rational(std::string_view text);

/// Renders as `p` or `p/q` in lowest terms.
std::string to_string(const Rational& q);

Integer binomial(unsigned n, unsigned k);

}  // namespace waring
