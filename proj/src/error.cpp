#include "frobkit/error.hpp"

namespace frobkit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::InvalidFrobeniusExponent: return "InvalidFrobeniusExponent";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::UnitDefiningIdeal: return "UnitDefiningIdeal";
        case ErrorCode::NotPrimaryAtOrigin: return "NotPrimaryAtOrigin";
        case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
        case ErrorCode::ContainmentViolated: return "ContainmentViolated";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InternalError: return "InternalError";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnboundName: return "UnboundName";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string token, const std::string& message)
    : Error(ErrorCode::SyntaxError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message + " near '" + token + "'"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

}  // namespace frobkit
