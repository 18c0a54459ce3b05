#ifndef LATBEL_REPORT_HPP
#define LATBEL_REPORT_HPP

#include <optional>

#include "latbel/capacity.hpp"
#include "latbel/possibilistic.hpp"

namespace latbel {

struct CapacityCheckReport {
  bool is_capacity = false;
  bool is_belief = false;
  bool is_necessity_hint = false;
  /// Empty when the family count exceeds Limits::max_families.
  std::optional<MonotonicityOrder> monotone;
  /// First failed check among capacity and belief, if any.
  std::optional<Check> failure_witness;
};

inline CapacityCheckReport capacity_report(const SetFunction& f, double tol = kTolerance,
                                           const Limits& limits = {}) {
  CapacityCheckReport r;
  const Check cap = check_capacity(f, tol);
  const Check bel = check_belief(f, tol);
  r.is_capacity = cap.holds;
  r.is_belief = bel.holds;
  r.is_necessity_hint = check_necessity(f, tol).holds;
  if (!cap) r.failure_witness = cap;
  else if (!bel) r.failure_witness = bel;
  try {
    r.monotone = monotonicity_order(f, tol, limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
  }
  return r;
}

}  // namespace latbel

#endif  // LATBEL_REPORT_HPP
