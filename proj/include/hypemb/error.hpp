#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypemb {

enum class ErrorCode {
    EmptyInput,
    NonPositiveEntry,
    LengthMismatch,
    DimensionMismatch,
    InvalidSurface,
    InadmissibleOrbit,
    InconsistentHomology,
    HypothesisViolated,
    Overflow,
    Parse,
};

auto to_string(ErrorCode code) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

}  // namespace hypemb
