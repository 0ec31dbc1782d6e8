#pragma once

// Executable case analysis for X-ranks of projected points, with instance
// generators realising every case and a cross-check against the fibre scan.
//
// Notation: d = n + 1, A = (1:0) (the form u^d), O = u^n t, W the scheme
// computing the border rank of B, E the computing set of M, m the
// multiplicity of A in W.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/projection.hpp"

namespace waring {

enum class CaseTag {
    e4_i,
    e4_ii,
    e4_iii,
    e3_1_info,
    e3_2,
    e3_3_wminus1,
    e3_3_wminus2,
    e3_3_cusp,
    e3_4_exact,
    e3_4_interval,
    e3_5,
    out_of_scope,
};

const char* to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(const std::string& text);
/// Every tag except out_of_scope.
const std::vector<CaseTag>& generatable_cases();

struct Prediction {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
};

struct ClassifierVerdict {
    std::string theorem;  // "e3" or "e4"
    CaseTag case_tag = CaseTag::out_of_scope;
    std::optional<Prediction> prediction;

    /// Preimages on C of the predicted witness set: the square-free form
    /// cutting them out, and those of its points that are rational.
    std::optional<BinaryForm> witness_form;
    std::vector<P1Point> witness_points;
    bool witness_unique = false;
    bool generic_only = false;
    bool proof_derived = false;

    int n = 0;
    int w = 0;  // w for e3, rho for e4
    int mult_A = 0;
    bool scheme_reduced = false;
    std::optional<bool> residual_reduced;  // W minus 2A, when m = 2
    std::string violated_hypothesis;
    std::vector<std::string> trace;
};

// ---------------------------------------------------------------------------

/// Basis (monomial coefficient vectors) of the linear span of the scheme
/// cut out by g, in the space of degree-d forms; deg g <= d + 1.
std::vector<std::vector<Rational>> scheme_span(const BinaryForm& g, int d);

struct OInSpan {
    bool linear_algebra = false;  // O in <W> by an explicit rank computation
    bool multiplicity = false;    // multiplicity of A in W is at least 2
    bool agree() const { return linear_algebra == multiplicity; }
};

/// Both routes. Throws RangeError when deg W > n + 2.
OInSpan o_in_span_routes(const ZeroScheme& w, const ProjectionFrame& frame);
/// Throws HypothesisError when the routes disagree.
bool o_in_span(const ZeroScheme& w, const ProjectionFrame& frame);

ClassifierVerdict classify_e4(const BinaryForm& m, const ProjectionFrame& frame);
ClassifierVerdict classify_e3(const BinaryForm& b, const ProjectionFrame& frame);
/// Dispatches on rank == border rank; hypothesis failures become out_of_scope.
ClassifierVerdict classify(const BinaryForm& f, const ProjectionFrame& frame);

// ---------------------------------------------------------------------------

struct InstanceSpec {
    CaseTag tag = CaseTag::e4_i;
    int n = 5;
    int w = 2;  // w or rho
    std::uint64_t seed = 0;
    int max_attempts = 200;
};

struct GeneratedInstance {
    BinaryForm form;
    InstanceSpec spec;
    /// W (e3 cases) or E (e4 cases); empty for e4_iii.
    ZeroScheme scheme;
    std::vector<std::pair<P1Point, int>> points;
    int mult_A = 0;
    std::optional<bool> o_in_span;  // e3_1_info annotation
    int attempts = 0;
};

/// Throws HypothesisError for parameters outside the case, RetryExhausted
/// when no admissible draw is found.
GeneratedInstance generate_instance(const InstanceSpec& spec);

/// Admissible parameter check used by generate_instance (empty when valid).
std::string case_parameter_error(CaseTag tag, int n, int w);

struct CrosscheckReport {
    ClassifierVerdict verdict;
    XRankResult xrank;
    std::optional<bool> agrees;           // none for out_of_scope
    std::optional<bool> witness_matches;  // e4_i: fibre witness equals l_O(E)
    std::string detail;
};

CrosscheckReport crosscheck(const BinaryForm& f, const ProjectionFrame& frame, const XRankOptions& options = {});

}  // namespace waring
