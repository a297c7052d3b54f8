#include "commkappa/errors.hpp"

namespace commkappa {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::CarrierMismatch: return "CarrierMismatch";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::InvalidGenerator: return "InvalidGenerator";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::TargetTooLarge: return "TargetTooLarge";
        case ErrorKind::PDoesNotDivideOrder: return "PDoesNotDivideOrder";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::TooLargeForExact: return "TooLargeForExact";
        case ErrorKind::NotMaximumWitness: return "NotMaximumWitness";
        case ErrorKind::NotACGroup: return "NotACGroup";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::ExactCapExceeded: return "ExactCapExceeded";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::CenterTooSmall: return "CenterTooSmall";
        case ErrorKind::IndexTooSmall: return "IndexTooSmall";
        case ErrorKind::AbelianInput: return "AbelianInput";
        case ErrorKind::ParamsOutOfRange: return "ParamsOutOfRange";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace commkappa
