#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicliq {

/// Domain error categories. Every public operation reports failure by
/// throwing `Error` with one of these codes; the C API maps them 1:1 onto
/// `bq_status` values.
enum class ErrorCode {
    RaggedInput,
    BadChar,
    BadJson,
    PatternTooLarge,
    TooLarge,
    NotSquare,
    DegreeTooHigh,
    BadPattern,
    BadModulus,
    Unsupported,
    Timeout,
    IndexOutOfRange,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bicliq
