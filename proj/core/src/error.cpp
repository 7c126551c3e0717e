#include "permlab/error.hpp"

namespace permlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::NotAFamily: return "NotAFamily";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InClosure: return "InClosure";
    case ErrorCode::IndexBudgetExhausted: return "IndexBudgetExhausted";
    case ErrorCode::NotStrictlyLess: return "NotStrictlyLess";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

namespace {

std::string render(ErrorCode code, const std::string& detail) {
  std::string out(to_string(code));
  out += '(';
  out += detail;
  out += ')';
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail,
             std::optional<std::size_t> suggested_index_budget)
    : std::runtime_error(render(code, detail)),
      code_(code),
      detail_(std::move(detail)),
      suggested_index_budget_(suggested_index_budget) {}

}  // namespace permlab
