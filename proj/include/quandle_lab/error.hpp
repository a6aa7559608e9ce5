#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quandle_lab {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  ZeroArgument,
  NotPrimitive,
  InvalidParams,
  GroupAxiomFailure,
  AxiomFailure,
  MalformedTable,
  ClosureBudgetExceeded,
  OrderTooSmall,
  SearchBudgetExceeded,
  SyntaxError,
  BothZero,
  RelationViolation,
  NotBijective,
  RewriteMismatch,
  Singular,
  NotHomomorphism,
  GroupNotFinite,
  ToleranceFailure,
  VerificationFailure,
  IllConditioned,
  NotInvolution,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Word-grammar failure; `position` is the 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace quandle_lab
