#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commkappa {

/// Every failure raised by the library carries one of these kinds so the CLI
/// can map it to an exit code without parsing messages.
enum class ErrorKind {
    NonPrimeCharacteristic,
    UnsupportedSize,
    CarrierMismatch,
    OrderCapExceeded,
    InvalidGenerator,
    BadParams,
    OrderMismatch,
    NotNormal,
    TargetTooLarge,
    PDoesNotDivideOrder,
    NotSubgroup,
    TooLargeForExact,
    NotMaximumWitness,
    NotACGroup,
    NonIntegerResult,
    ExactCapExceeded,
    Disconnected,
    CenterTooSmall,
    IndexTooSmall,
    AbelianInput,
    ParamsOutOfRange,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the leading kind tag.
    std::string detail() const { return std::string(what()).substr(to_string(kind_).size() + 2); }

private:
    ErrorKind kind_;
};

}  // namespace commkappa
