#pragma once

// Independent numeric checks: a multi-start span search on the cuspidal curve,
// secant dimension probes and a fuzzer for the rank dichotomy.
//
// The search parametrises curve points as (a:b) = (c - s t : s + c t) with a
// random rotation (c, s) per point and start, so every point of P^1 is an
// interior chart point for some start. It minimises
//   || sum_j alpha_j l_O((a_j u + b_j t)^d) - P ||
// over complex t_j and alpha_j, with P scaled so its largest coordinate is 1:
// Levenberg-Marquardt in double precision, then Gauss-Newton in MPFR.
// A success certifies r_X(P) <= r numerically; a failure certifies nothing.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/projection.hpp"
#include "waring/roots.hpp"

namespace waring {

struct SearchConfig {
    int r = 1;
    int starts = 32;
    int precision_bits = 192;
    /// Relative residual bound; defaults to 2^(16 - precision_bits/2). Must be
    /// at least 2^(-precision_bits/2).
    std::optional<BigFloat> tolerance;
    std::uint64_t seed = 0;
};

struct SpanWitness {
    /// Curve parameters (a_j : b_j), scaled to unit norm, and the scalars
    /// expressing P (scaled to largest coordinate 1) in their span.
    std::vector<BigComplex> a, b, scalars;
    /// || P - proj_V P || / || P ||, V the span of the r curve points.
    BigFloat residual;
    ProjectedPoint target;
    int start = 0;  // index of the successful start
};

BigFloat default_tolerance(int precision_bits);

/// Returns the first start (in start order) that converges below tolerance
/// with pairwise distinct parameters.
std::optional<SpanWitness> xrank_upper_search(const ProjectedPoint& p, const SearchConfig& cfg);

/// Projective distance |a b' - b a'| / (|(a,b)| |(a',b')|).
BigFloat parameter_distance(const BigComplex& a, const BigComplex& b, const BigComplex& a2, const BigComplex& b2);

/// Whether the witness parameters are, up to order, the given points within
/// the cluster radius.
bool parameters_match(const SpanWitness& w, const std::vector<NumericRoot>& points, double radius = 1e-8);

struct SecantProbe {
    int dimension = 0;     // observed dim sigma_s(X)
    int exact_rank = 0;    // rank of the Jacobian over Q
    int numeric_rank = 0;  // double-precision SVD rank
    int attempts = 0;
};

/// Generic rank of the Jacobian of (t_i, alpha_i) -> sum alpha_i l_O((u + t_i t)^d):
/// the maximum over three random rational points, each confirmed by a
/// floating-point SVD. Throws RetryExhausted when the ranks keep disagreeing.
SecantProbe secant_dimension_probe(int s, int n, std::uint64_t seed);

struct DichotomyReport {
    int degree = 0;
    int samples = 0;
    int checked = 0;
    int violations = 0;
    std::map<int, int> rank_histogram;
    std::optional<std::string> counterexample;  // first violating form
};

/// The fuzz sample: monomials and (u + t)^d first, then sparse random forms
/// and random sums of powers.
std::vector<BinaryForm> fuzz_forms(int degree, int samples, std::uint64_t seed);

/// Checks every fuzz form and stops at the first violation.
DichotomyReport dichotomy_fuzz(int degree, int samples, std::uint64_t seed);

}  // namespace waring
