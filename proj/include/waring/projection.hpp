#pragma once

// Tangential projection of the rational normal curve of degree d = n + 1.
//
// The cusp source is A = (1:0), i.e. the point u^d, and the centre O is the
// coordinate point e_1 (the form u^n t), which lies on the tangent line to the
// curve at A. Projecting from O deletes the coefficient c_1. The fibre over a
// projected point P is the pencil B(lambda) of forms with c_1 = lambda, and
// r_X(P) is the minimum of the Waring rank over that pencil.
//
// The catalecticant of B(lambda) depends on lambda only through the entries
// (0,1) and (1,0), so every minor has degree at most 2 in lambda. Hence the
// values of lambda where the rank drops are rational or conjugate pairs in a
// quadratic field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/bigfloat.hpp"
#include "waring/number_field.hpp"

namespace waring {

struct ProjectionFrame {
    int n = 3;

    explicit ProjectionFrame(int n_);
    int degree() const { return n + 1; }
};

/// Coordinates (y_0, y_2, y_3, ..., y_{n+1}) of a point of P^n, i.e. the
/// monomial coefficients of a degree n+1 form with c_1 removed.
struct ProjectedPoint {
    int n = 0;
    std::vector<Rational> coords;

    ProjectedPoint() = default;
    ProjectedPoint(int n_, std::vector<Rational> coords_);

    /// Coefficient c_i of the lifted form, i != 1.
    const Rational& coefficient(int i) const;
    friend bool operator==(const ProjectedPoint& a, const ProjectedPoint& b) {
        return a.n == b.n && a.coords == b.coords;
    }
};

/// Projectively equal: proportional coordinate vectors.
bool same_point(const ProjectedPoint& a, const ProjectedPoint& b);

/// Throws CenterOfProjection for forms proportional to u^n t.
ProjectedPoint project(const BinaryForm& f);
BinaryForm lift(const ProjectedPoint& p, const Rational& lambda);
BasicBinaryForm<NfElement> lift(const ProjectedPoint& p, const NfElement& lambda);

/// l_O of the curve point (a u + b t)^{n+1}, in monomial coordinates.
ProjectedPoint cusp_curve_point(const P1Point& t, int n);

/// A real or complex algebraic number: its minimal polynomial over Q (integer,
/// content-free, positive leading coefficient) and an isolating approximation.
struct AlgebraicNumber {
    UPoly<Rational> minpoly;
    BigComplex approximation;
    BigFloat radius = 0;

    static AlgebraicNumber rational(const Rational& q);
    int degree() const { return minpoly.degree(); }
    bool is_rational() const { return degree() == 1; }
    Rational rational_value() const;
    /// The number as an element of Q[x]/(minpoly) (or a plain rational).
    NfElement to_element() const;
    std::string to_string() const;
};

/// Roots of an irreducible factor; one AlgebraicNumber per conjugate.
std::vector<AlgebraicNumber> algebraic_roots(const UPoly<Rational>& irreducible, int precision_bits);

struct SpecialLambdas {
    /// Cat_r(B(lambda)) has a kernel for every lambda.
    bool all_lambda = false;
    /// gcd of the maximal minors as a polynomial in lambda (zero when all_lambda).
    UPoly<Rational> minor_gcd;
    /// Irreducible factors of minor_gcd with one representative root each.
    std::vector<AlgebraicNumber> values;
};

SpecialLambdas special_lambdas(const ProjectedPoint& p, int r, int precision_bits = 192);

struct XRankOptions {
    int nf_degree_bound = 4;
    int precision_bits = 192;
    std::uint64_t seed = 0;
};

struct LambdaEvaluation {
    AlgebraicNumber lambda;
    bool generic = false;
    int border_rank = 0;
    int rank = 0;
};

struct XRankResult {
    int value = 0;
    AlgebraicNumber witness_lambda;
    bool witness_generic = false;

    // Certificate of B(witness_lambda).
    int border_rank = 0;
    int fiber_rank = 0;
    int kernel_dimension = 0;
    WitnessKind kind = WitnessKind::SquareFree;
    /// Apolar form of B(witness_lambda), coefficients rendered in theta when algebraic.
    std::vector<std::string> apolar_form;
    std::optional<BinaryForm> rational_apolar_form;
    /// Rational points of the computing set (all of it when it splits over Q).
    std::vector<P1Point> witness_points;
    bool witness_splits = false;

    int generic_level = 0;  // border rank of B(lambda) for general lambda
    std::vector<LambdaEvaluation> examined;

    bool incomplete = false;
    std::vector<AlgebraicNumber> unexplored;
};

XRankResult x_rank(const ProjectedPoint& p, const XRankOptions& options = {});

}  // namespace waring
