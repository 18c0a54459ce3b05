#ifndef LATBEL_CHECK_HPP
#define LATBEL_CHECK_HPP

#include <limits>
#include <string>
#include <utility>

#include "latbel/lattice.hpp"

namespace latbel {

/// Default slack for inequality checks and equality of function values.
inline constexpr double kTolerance = 1e-9;

/// Outcome of a property check. On failure `witness` names the offending
/// elements and, for numeric checks, `lhs`/`rhs` hold the two sides that
/// disagreed.
struct Check {
  bool holds = true;
  Witness witness;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  std::string reason;

  explicit operator bool() const noexcept { return holds; }

  static Check pass() { return {}; }
  static Check fail(Witness w, std::string why,
                    double lhs = std::numeric_limits<double>::quiet_NaN(),
                    double rhs = std::numeric_limits<double>::quiet_NaN()) {
    Check c;
    c.holds = false;
    c.witness = std::move(w);
    c.lhs = lhs;
    c.rhs = rhs;
    c.reason = std::move(why);
    return c;
  }
};

}  // namespace latbel

#endif  // LATBEL_CHECK_HPP
