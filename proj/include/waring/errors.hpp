#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/// Base class of every error raised by the library. `code()` is a stable
/// machine-readable tag used by the CLI when it emits structured errors.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define WARING_DEFINE_ERROR(Name, Code)                                        \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& message) : Error(Code, message) {}   \
    }

WARING_DEFINE_ERROR(ParseError, "parse_error");
WARING_DEFINE_ERROR(ZeroFormError, "zero_form");
WARING_DEFINE_ERROR(RangeError, "out_of_range");
WARING_DEFINE_ERROR(AmbiguousScheme, "ambiguous_scheme");
WARING_DEFINE_ERROR(NonReducedRank, "nonreduced_rank");
WARING_DEFINE_ERROR(PrecisionError, "precision_insufficient");
WARING_DEFINE_ERROR(CenterOfProjection, "center_of_projection");
WARING_DEFINE_ERROR(HypothesisError, "hypothesis_violated");
WARING_DEFINE_ERROR(RetryExhausted, "retry_budget_exhausted");
WARING_DEFINE_ERROR(DegreeMismatch, "degree_mismatch");
WARING_DEFINE_ERROR(ZeroDivisor, "zero_divisor");

#undef WARING_DEFINE_ERROR

}  // namespace waring
