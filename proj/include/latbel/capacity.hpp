#ifndef LATBEL_CAPACITY_HPP
#define LATBEL_CAPACITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "latbel/check.hpp"
#include "latbel/duality.hpp"
#include "latbel/transforms.hpp"

namespace latbel {

namespace detail {

inline Check check_bounds(const SetFunction& f, double tol) {
  const Lattice& l = f.lattice();
  if (std::abs(f[l.bottom()]) > tol)
    return Check::fail({l.bottom()}, "value at bottom is not 0", f[l.bottom()], 0.0);
  if (std::abs(f[l.top()] - 1.0) > tol)
    return Check::fail({l.top()}, "value at top is not 1", f[l.top()], 1.0);
  return Check::pass();
}

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

/// Visits every family of pairwise distinct elements with 2 <= size <= kmax,
/// ordered by size and then lexicographically by element index. The visitor
/// receives (family, f(∨family), Σ_{∅≠I⊆family} (-1)^{|I|+1} f(∧I)) and
/// returns false to stop.
///
/// The alternating sum is kept as integer coefficients per lattice element:
/// adding x to a family with coefficients c gives c'(e') = c(e') + [e' = x]
/// - Σ_{e∧x = e'} c(e), so each family costs O(|L|) instead of O(2^k).
template <class Visit>
void for_each_family(const SetFunction& f, std::size_t kmax, const Limits& limits, Visit&& visit) {
  const Lattice& l = f.lattice();
  const auto n = static_cast<Element>(l.size());
  const std::size_t top_size = std::min<std::size_t>(kmax, n);

  std::uint64_t total = 0;
  for (std::size_t s = 2; s <= top_size; ++s) {
    total += binomial_saturating(n, s, limits.max_families);
    if (total > limits.max_families)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "more than " + std::to_string(limits.max_families) + " families to check");
  }

  std::vector<std::vector<std::int64_t>> coef(top_size + 1, std::vector<std::int64_t>(n, 0));
  std::vector<Element> joins(top_size + 1, l.bottom());
  std::vector<Element> family;
  bool stop = false;

  for (std::size_t size = 2; size <= top_size && !stop; ++size) {
    auto dfs = [&](auto&& self, Element start) -> void {
      const std::size_t depth = family.size();
      if (depth == size) {
        double rhs = 0;
        for (Element e = 0; e < n; ++e)
          if (coef[depth][e] != 0) rhs += static_cast<double>(coef[depth][e]) * f[e];
        if (!visit(family, f[joins[depth]], rhs)) stop = true;
        return;
      }
      for (Element x = start; x + (size - depth) <= n && !stop; ++x) {
        auto& next = coef[depth + 1];
        next = coef[depth];
        for (Element e = 0; e < n; ++e)
          if (coef[depth][e] != 0) next[l.meet(e, x)] -= coef[depth][e];
        next[x] += 1;
        joins[depth + 1] = depth == 0 ? x : l.join(joins[depth], x);
        family.push_back(x);
        self(self, x + 1);
        family.pop_back();
      }
    };
    dfs(dfs, 0);
  }
}

}  // namespace detail

/// f(⊥) = 0, f(⊤) = 1 and x ≤ y ⇒ f(x) ≤ f(y).
inline Check check_capacity(const SetFunction& f, double tol = kTolerance) {
  if (Check c = detail::check_bounds(f, tol); !c) return c;
  const Lattice& l = f.lattice();
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.lt(x, y) && f[x] > f[y] + tol)
        return Check::fail({x, y}, "not isotone", f[x], f[y]);
  return Check::pass();
}

/// Boundary conditions plus a nonnegative Möbius transform. On failure the
/// witness is the element with the most negative mass.
inline Check check_belief(const SetFunction& f, double tol = kTolerance) {
  if (Check c = detail::check_bounds(f, tol); !c) return c;
  const SetFunction m = mobius_transform(f);
  Element worst = 0;
  for (Element x = 1; x < m.size(); ++x)
    if (m[x] < m[worst]) worst = x;
  if (m[worst] < -tol) return Check::fail({worst}, "negative Möbius mass", m[worst], 0.0);
  return Check::pass();
}

/// k-monotonicity over every family x_1..x_k. Families with repeated
/// elements collapse to smaller families of distinct elements, so all
/// distinct families of sizes 2..k are checked.
inline Check check_k_monotone(const SetFunction& f, std::size_t k, double tol = kTolerance,
                              const Limits& limits = {}) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k-monotonicity needs k >= 2");
  Check out = Check::pass();
  detail::for_each_family(f, k, limits, [&](const std::vector<Element>& fam, double lhs, double rhs) {
    if (lhs >= rhs - tol) return true;
    out = Check::fail(fam, std::to_string(fam.size()) + "-family violates monotonicity", lhs, rhs);
    return false;
  });
  return out;
}

/// The equality version of check_k_monotone.
inline Check check_k_valuation(const SetFunction& f, std::size_t k, double tol = kTolerance,
                               const Limits& limits = {}) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k-valuation needs k >= 2");
  Check out = Check::pass();
  detail::for_each_family(f, k, limits, [&](const std::vector<Element>& fam, double lhs, double rhs) {
    if (std::abs(lhs - rhs) <= tol) return true;
    out = Check::fail(fam, std::to_string(fam.size()) + "-family breaks the valuation equality", lhs, rhs);
    return false;
  });
  return out;
}

/// Largest k for which total monotonicity is decided on |L| elements.
inline std::size_t total_monotone_order(const Lattice& l) {
  return std::max<std::size_t>(2, l.size() >= 2 ? l.size() - 2 : 0);
}

inline Check check_total_monotone(const SetFunction& f, double tol = kTolerance,
                                  const Limits& limits = {}) {
  return check_k_monotone(f, total_monotone_order(f.lattice()), tol, limits);
}

struct MonotonicityOrder {
  /// Largest k such that f is k-monotone; values below 2 mean f is not even
  /// 2-monotone. Capped at total_monotone_order.
  std::size_t max_k = 0;
  bool total = false;
  Check failure;  // first violating family when not total
};

inline MonotonicityOrder monotonicity_order(const SetFunction& f, double tol = kTolerance,
                                            const Limits& limits = {}) {
  MonotonicityOrder r;
  const std::size_t cap = total_monotone_order(f.lattice());
  r.failure = check_k_monotone(f, cap, tol, limits);
  if (r.failure) {
    r.max_k = cap;
    r.total = true;
  } else {
    r.max_k = r.failure.witness.size() - 1;
  }
  return r;
}

enum class ConjugateVariant { vee, wedge };

/// vee: x ↦ 1 - f(n(x)); wedge: x ↦ 1 - f(n⁻¹(x)).
inline SetFunction conjugate(const SetFunction& f, const Negation& n, ConjugateVariant variant) {
  if (!n.lattice.same_as(f.lattice()))
    throw Error(ErrorKind::InvalidNegation, "negation belongs to another lattice");
  if (n.wedge) throw Error(ErrorKind::InvalidNegation, "conjugates are taken w.r.t. a ∨-negation");
  if (!verify_vee_negation(n.lattice, n.map))
    throw Error(ErrorKind::InvalidNegation, "map is not a ∨-negation");
  const auto& via = variant == ConjugateVariant::vee ? n.map : n.inverse;
  SetFunction out(f.lattice());
  for (Element x = 0; x < f.size(); ++x) out[x] = 1.0 - f[via[x]];
  return out;
}

}  // namespace latbel

#endif  // LATBEL_CAPACITY_HPP
