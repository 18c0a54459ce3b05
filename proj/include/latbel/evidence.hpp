#ifndef LATBEL_EVIDENCE_HPP
#define LATBEL_EVIDENCE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "latbel/capacity.hpp"
#include "latbel/transforms.hpp"

namespace latbel {

/// Möbius side of a belief function. Masses may be signed (components of a
/// decomposition with weight > 1 have a negative mass); normalization and
/// m(⊥) = 0 are checked by validate() rather than enforced on construction,
/// since raw combination legitimately leaves mass on ⊥.
class MassAllocation {
 public:
  explicit MassAllocation(SetFunction m) : m_(std::move(m)) {}

  const SetFunction& function() const noexcept { return m_; }
  const Lattice& lattice() const noexcept { return m_.lattice(); }
  std::size_t size() const noexcept { return m_.size(); }
  double operator[](Element x) const { return m_[x]; }
  double total() const { return m_.sum(); }

  bool is_nonnegative(double tol = kTolerance) const {
    for (Element x = 0; x < size(); ++x)
      if (m_[x] < -tol) return false;
    return true;
  }

  /// Σ m = 1 and m(⊥) = 0.
  Check validate(double tol = kTolerance) const {
    const Element bot = lattice().bottom();
    if (std::abs(m_[bot]) > tol) return Check::fail({bot}, "mass on bottom", m_[bot], 0.0);
    if (std::abs(total() - 1.0) > tol) return Check::fail({}, "masses do not sum to 1", total(), 1.0);
    return Check::pass();
  }

  /// Elements carrying |m| > tol, in input order.
  std::vector<Element> focal_elements(double tol = kTolerance) const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x)
      if (std::abs(m_[x]) > tol) out.push_back(x);
    return out;
  }

  /// bel(x) = Σ_{y≤x} m(y).
  SetFunction belief() const { return zeta_transform(m_); }
  SetFunction commonality() const { return comobius_transform(m_); }

 private:
  SetFunction m_;
};

inline MassAllocation mass_of(const SetFunction& bel) { return MassAllocation(mobius_transform(bel)); }

/// The vacuous allocation m(⊤) = 1.
inline MassAllocation vacuous(const Lattice& l) {
  SetFunction m(l);
  m[l.top()] = 1.0;
  return MassAllocation(std::move(m));
}

enum class ConflictPolicy {
  raw,          ///< m(x) = Σ_{y1∧y2=x} m1(y1) m2(y2), ⊥ included
  zero_bottom,  ///< raw, then m(⊥) := 0 without rescaling
  normalize,    ///< m(⊥) := 0 and the rest divided by the non-conflicting mass
};

/// Dempster's rule on a lattice: meet-convolution of the two allocations.
inline MassAllocation combine(const MassAllocation& m1, const MassAllocation& m2,
                              ConflictPolicy policy = ConflictPolicy::raw,
                              double tol = kTolerance) {
  require_same(m1.lattice(), m2.lattice(), "combined allocations");
  const Lattice& l = m1.lattice();
  SetFunction m(l);
  for (Element a = 0; a < l.size(); ++a) {
    if (m1[a] == 0.0) continue;
    for (Element b = 0; b < l.size(); ++b) m[l.meet(a, b)] += m1[a] * m2[b];
  }
  if (policy == ConflictPolicy::raw) return MassAllocation(std::move(m));

  const double conflict = m[l.bottom()];
  m[l.bottom()] = 0.0;
  if (policy == ConflictPolicy::normalize) {
    const double kept = m.sum();
    if (std::abs(kept) <= tol)
      throw Error(ErrorKind::TotalConflict,
                  "all combined mass lands on bottom (conflict " + std::to_string(conflict) + ")");
    for (Element x = 0; x < l.size(); ++x) m[x] /= kept;
  }
  return MassAllocation(std::move(m));
}

/// y^w: mass 1 - w on y and w on ⊤. w in (0,1) gives a belief function;
/// other w give the signed components of a decomposition.
inline MassAllocation simple_support(const Lattice& l, Element y, double w) {
  if (y >= l.size()) throw Error(ErrorKind::UnknownElement, "focus index out of range");
  if (y == l.bottom())
    throw Error(ErrorKind::FocusIsBottom, "a simple support cannot focus on bottom", {l.name(y)});
  SetFunction m(l);
  m[y] += 1.0 - w;
  m[l.top()] += w;
  return MassAllocation(std::move(m));
}

/// Weights of a decomposition into simple supports. Elements without an
/// entry carry weight 1 (the vacuous component). ⊤ never has an entry.
struct SupportWeights {
  Lattice lattice;
  std::vector<double> w;  // dense, 1.0 when absent

  explicit SupportWeights(Lattice l) : lattice(std::move(l)), w(lattice.size(), 1.0) {}

  /// Non-identity entries (|w - 1| > 1e-12) in input order.
  std::vector<std::pair<Element, double>> entries() const {
    std::vector<std::pair<Element, double>> out;
    for (Element y = 0; y < w.size(); ++y)
      if (std::abs(w[y] - 1.0) > 1e-12) out.emplace_back(y, w[y]);
    return out;
  }
};

/// w_y = Π_{x≥y} q(x)^{-mu(y,x)} for every y ≠ ⊤, where q is the
/// commonality of bel. Requires bel to be a belief function with m(⊤) > 0,
/// which keeps every q(x) ≥ m(⊤) positive.
///
/// The weight on ⊥ is in general not 1: with m(⊥) = 0 the product of the
/// other components still leaves mass on ⊥, and the ⊥ component removes it.
inline SupportWeights decompose(const SetFunction& bel, double tol = kTolerance) {
  if (Check c = check_belief(bel, tol); !c) {
    std::vector<std::string> names;
    for (Element e : c.witness) names.push_back(bel.lattice().name(e));
    throw Error(ErrorKind::NotABelief, c.reason, names);
  }
  const Lattice& l = bel.lattice();
  const MobiusMatrix mu = mobius_function(l);
  const SetFunction m = mobius_transform(bel, mu);
  if (m[l.top()] <= tol)
    throw Error(ErrorKind::TopMassZero, "decomposition needs m(top) > 0", {l.name(l.top())});
  const SetFunction q = comobius_transform(m);

  SupportWeights out(l);
  for (Element y = 0; y < l.size(); ++y) {
    if (y == l.top()) continue;
    const Bits& above = l.poset().up_set(y);
    double w = 1.0;
    for (auto x = above.find_first(); x != Bits::npos; x = above.find_next(x)) {
      const auto e = mu(y, static_cast<Element>(x));
      if (e != 0) w *= std::pow(q[static_cast<Element>(x)], static_cast<double>(-e));
    }
    out.w[y] = std::abs(w - 1.0) <= 1e-12 ? 1.0 : w;
  }
  return out;
}

/// ⊕ of every y^{w(y)} under the raw policy, computed on the commonality
/// side: q(x) = Π_{y : x ≰ y} w(y).
inline MassAllocation recombine(const SupportWeights& weights) {
  const Lattice& l = weights.lattice;
  for (Element y = 0; y < l.size(); ++y)
    if (!(weights.w[y] > 0.0))
      throw Error(ErrorKind::NonPositiveWeight, "weight of '" + l.name(y) + "' is not positive",
                  {l.name(y)});
  SetFunction q(l);
  for (Element x = 0; x < l.size(); ++x) {
    double p = 1.0;
    for (Element y = 0; y < l.size(); ++y)
      if (!l.leq(x, y)) p *= weights.w[y];
    q[x] = p;
  }
  return MassAllocation(mass_from_comobius(q));
}

}  // namespace latbel

#endif  // LATBEL_EVIDENCE_HPP
