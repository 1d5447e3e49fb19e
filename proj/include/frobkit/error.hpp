#ifndef FROBKIT_ERROR_HPP
#define FROBKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobkit {

enum class ErrorCode {
    DivisionByZero,
    ArityMismatch,
    OrderMismatch,
    InvalidFrobeniusExponent,
    ExponentOverflow,
    BudgetExceeded,
    NonPrimeCharacteristic,
    UnitDefiningIdeal,
    NotPrimaryAtOrigin,
    NonHomogeneousInput,
    ContainmentViolated,
    InvalidArgument,
    InternalError,
    SyntaxError,
    UnboundName,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception of the library. The code is what the CLI reports.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, std::string token, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

}  // namespace frobkit

#endif
