#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arp {

enum class ErrorCode {
    EmptyInstance,
    NonPositiveValue,
    InvalidPermutation,
    WrongKind,
    NonPositiveRate,
    NegativeSuffix,
    SizeCapExceeded,
    GenerationFailed,
    InvalidParam,
    InsufficientData,
    ParseError,
    Timeout,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    [[nodiscard]] const std::string &detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace arp
