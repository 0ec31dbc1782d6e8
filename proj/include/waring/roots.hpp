#pragma once

// Certified numeric roots of binary forms.
//
// Square-free parts are found exactly first; each square-free factor is then
// solved with Aberth-Ehrlich iterations (double precision start, multiprecision
// finish). Inclusion radii come from the Gerschgorin-type bound
//   r_i = m |p(z_i)| / |a_m prod_{j != i} (z_i - z_j)|,
// whose discs contain all roots, one per disc when the discs are disjoint.
// Overlapping discs raise PrecisionError.

#include <optional>
#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/binary_form.hpp"

namespace waring {

struct NumericRoot {
    /// The point (a:b) of P^1. In the chart u = 1 we have a = 1 and b is the
    /// root x = t/u; the point (0:1) has a = 0, b = 1.
    BigComplex a;
    BigComplex b;
    int multiplicity = 1;
    /// Certified radius around b (zero for exact roots).
    BigFloat radius = 0;
    std::optional<P1Point> exact;
};

struct CertifiedRoots {
    std::vector<BigComplex> values;
    std::vector<BigFloat> radii;
};

/// Roots of sum_i coeffs[i] x^i (leading coefficient nonzero, square-free).
CertifiedRoots certified_roots(const std::vector<BigComplex>& coeffs, int precision_bits);

/// All d roots of f on P^1 with multiplicity; rational roots are exact.
std::vector<NumericRoot> numeric_roots(const BinaryForm& f, int precision_bits);

/// Distinct rational roots of p (exact, complete).
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

/// Splits f into its rational linear factors (as points of P^1 with
/// multiplicity) and the remaining factor without rational roots.
struct RationalSplit {
    std::vector<std::pair<P1Point, int>> points;
    BinaryForm remainder;  // normalised, degree 0 when f splits completely
};
RationalSplit split_rational_points(const BinaryForm& f);

}  // namespace waring
