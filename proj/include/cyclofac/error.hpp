#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclofac {

enum class ErrorCode {
  InvalidArgument,
  ZeroDivisor,
  ConstantTermZero,
  ConstantInput,
  ExponentOverflow,
  BoundExceeded,
  A0TooLarge,
  HypothesisViolation,
  InternalInconsistency,
  NegativeCoefficient,
  NotAFactor,
  DegenerateTrinomial,
  ExponentCollision,
  LimitExceeded,
  InfeasibleParams,
  SyntaxError,
  BadRange,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this type; `code()` is stable
/// and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cyclofac
