#ifndef LATBEL_ERROR_HPP
#define LATBEL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latbel {

enum class ErrorKind {
  CycleDetected,
  UnknownElement,
  DuplicateElement,
  EmptyStructure,
  NotALattice,
  DecompositionNotUnique,
  SizeLimitExceeded,
  LatticeMismatch,
  NotABijection,
  NoConsistentExtension,
  InvalidNegation,
  InvalidArgument,
  TotalConflict,
  FocusIsBottom,
  TopMassZero,
  NotABelief,
  NonPositiveWeight,
  NotDistributive,
  NotAutodual,
  TiesInDistribution,
  TopValueNotOne,
  InvalidDistribution,
  SelectionFailed,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EmptyStructure: return "EmptyStructure";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::DecompositionNotUnique: return "DecompositionNotUnique";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::NoConsistentExtension: return "NoConsistentExtension";
    case ErrorKind::InvalidNegation: return "InvalidNegation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::FocusIsBottom: return "FocusIsBottom";
    case ErrorKind::TopMassZero: return "TopMassZero";
    case ErrorKind::NotABelief: return "NotABelief";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotAutodual: return "NotAutodual";
    case ErrorKind::TiesInDistribution: return "TiesInDistribution";
    case ErrorKind::TopValueNotOne: return "TopValueNotOne";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::SelectionFailed: return "SelectionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `names()` carries the element names
/// involved (cycle members, offending pair, ...) in a stable order.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::string> names = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        names_(std::move(names)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> names_;
};

}  // namespace latbel

#endif  // LATBEL_ERROR_HPP
