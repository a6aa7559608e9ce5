#include "quandle_lab/error.hpp"

namespace quandle_lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime:
      return "NotPrime";
    case ErrorCode::ReducibleModulus:
      return "ReducibleModulus";
    case ErrorCode::DivisionByZero:
      return "DivisionByZero";
    case ErrorCode::ZeroArgument:
      return "ZeroArgument";
    case ErrorCode::NotPrimitive:
      return "NotPrimitive";
    case ErrorCode::InvalidParams:
      return "InvalidParams";
    case ErrorCode::GroupAxiomFailure:
      return "GroupAxiomFailure";
    case ErrorCode::AxiomFailure:
      return "AxiomFailure";
    case ErrorCode::MalformedTable:
      return "MalformedTable";
    case ErrorCode::ClosureBudgetExceeded:
      return "ClosureBudgetExceeded";
    case ErrorCode::OrderTooSmall:
      return "OrderTooSmall";
    case ErrorCode::SearchBudgetExceeded:
      return "SearchBudgetExceeded";
    case ErrorCode::SyntaxError:
      return "SyntaxError";
    case ErrorCode::BothZero:
      return "BothZero";
    case ErrorCode::RelationViolation:
      return "RelationViolation";
    case ErrorCode::NotBijective:
      return "NotBijective";
    case ErrorCode::RewriteMismatch:
      return "RewriteMismatch";
    case ErrorCode::Singular:
      return "Singular";
    case ErrorCode::NotHomomorphism:
      return "NotHomomorphism";
    case ErrorCode::GroupNotFinite:
      return "GroupNotFinite";
    case ErrorCode::ToleranceFailure:
      return "ToleranceFailure";
    case ErrorCode::VerificationFailure:
      return "VerificationFailure";
    case ErrorCode::IllConditioned:
      return "IllConditioned";
    case ErrorCode::NotInvolution:
      return "NotInvolution";
    case ErrorCode::PreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace quandle_lab
