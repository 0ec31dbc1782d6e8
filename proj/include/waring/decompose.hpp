#pragma once

// Power-sum decompositions f = sum_i s_i L_i^d read off a square-free apolar
// form g: each root (alpha:beta) of g gives L = alpha u + beta t, and the
// scalars solve the (d+1) x r system in apolar coordinates.

#include <optional>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/bigfloat.hpp"
#include "waring/number_field.hpp"

namespace waring {

enum class FieldTag { Rational, Algebraic, Complex };

const char* to_string(FieldTag tag);

struct DecompositionTerm {
    BigComplex scalar;
    BigComplex alpha;
    BigComplex beta;
    /// Exact values, present for rational and algebraic decompositions.
    std::optional<NfElement> exact_scalar, exact_alpha, exact_beta;
};

struct Decomposition {
    std::vector<DecompositionTerm> terms;
    BigFloat residual = 0;
    FieldTag field_tag = FieldTag::Rational;
    /// Q[theta]/(minpoly) when field_tag is Algebraic.
    NumberFieldPtr field;
    int precision_bits = 0;
};

/// Throws NonReducedRank when the rank witness is not square-free.
Decomposition decompose(const BinaryForm& f, int precision_bits);

/// Max-norm of f - sum s_i L_i^d after scaling f to unit max-norm. Exact
/// terms are summed exactly (an exact match gives 0).
BigFloat verify_decomposition(const BinaryForm& f, const Decomposition& dec);

}  // namespace waring
