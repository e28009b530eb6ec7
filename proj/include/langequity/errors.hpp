#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace langequity {

/// Machine-readable error codes. The CLI prints them verbatim as
/// `ERROR <code>: <detail>` so scripts can match on the code name.
enum class Errc {
    UnknownLanguage,
    AmbiguousName,
    EmptyMemberSet,
    UnknownCountry,
    ZeroCountryPopulation,
    ParseError,
    OutOfRangeScore,
    ShareSumExceedsOne,
    MissingContext,
    DegenerateRange,
    EmptyUniverse,
    AllZeroPopulations,
    NoRowsForFlow,
    UnmappedCountry,
    UniverseMismatch,
    EmptySubset,
    UnknownNode,
    SelfPair,
    EmptyGroup,
    InsufficientData,
    GraphTooLarge,
    LengthMismatch,
    UnknownTask,
    InvalidArgument,
    IoError,
    Usage,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)) {}

    Errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

[[noreturn]] inline void raise(Errc code, std::string detail) {
    throw Error(code, std::move(detail));
}

} // namespace langequity
