#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permlab {

enum class ErrorCode {
  ParseError,
  DuplicateElement,
  UnknownElement,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  NotContained,
  BudgetExceeded,
  SizeBudgetExceeded,
  ShapeViolation,
  NotAMember,
  UniverseMismatch,
  NotAFamily,
  IndexOutOfRange,
  InClosure,
  IndexBudgetExhausted,
  NotStrictlyLess,
  PreconditionViolated,
  UnknownAtom,
  InvariantBreach,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error. `what()` renders
/// as `Code(detail)`, e.g. `NotTransitive(p,q,r)`, so messages name the
/// violating tuple directly.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail,
        std::optional<std::size_t> suggested_index_budget = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Only set for IndexBudgetExhausted.
  std::optional<std::size_t> suggested_index_budget() const noexcept {
    return suggested_index_budget_;
  }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> suggested_index_budget_;
};

}  // namespace permlab
