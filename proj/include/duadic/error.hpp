#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace duadic {

enum class Errc {
    NotPrime,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    ZeroElement,
    OrderNotDividing,
    NotInSubfield,
    NotCoprime,
    NotUnionOfCosets,
    NotSubfield,
    CoefficientNotInSubfield,
    HermitianOnNonSquareField,
    LengthNotEven,
    DistanceNotExact,
    DegenerateN,
    HypothesisViolated,
    NoGammaSolution,
    NoSplitting,
    InvalidTable,
    InvalidArgument,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI, bindings, tests) can dispatch on it without parsing text.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace duadic
