#ifndef LATBEL_POSSIBILISTIC_HPP
#define LATBEL_POSSIBILISTIC_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "latbel/capacity.hpp"
#include "latbel/duality.hpp"
#include "latbel/evidence.hpp"

namespace latbel {

/// N(x∧y) = min(N(x), N(y)) for all pairs, with N(⊥) = 0 and N(⊤) = 1.
inline Check check_necessity(const SetFunction& f, double tol = kTolerance) {
  if (Check c = detail::check_bounds(f, tol); !c) return c;
  const Lattice& l = f.lattice();
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      const double lhs = f[l.meet(x, y)], rhs = std::min(f[x], f[y]);
      if (std::abs(lhs - rhs) > tol) return Check::fail({x, y}, "N(x∧y) != min(N(x),N(y))", lhs, rhs);
    }
  return Check::pass();
}

/// Π(x∨y) = max(Π(x), Π(y)) for all pairs, with Π(⊥) = 0 and Π(⊤) = 1.
inline Check check_possibility(const SetFunction& f, double tol = kTolerance) {
  if (Check c = detail::check_bounds(f, tol); !c) return c;
  const Lattice& l = f.lattice();
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      const double lhs = f[l.join(x, y)], rhs = std::max(f[x], f[y]);
      if (std::abs(lhs - rhs) > tol) return Check::fail({x, y}, "Π(x∨y) != max(Π(x),Π(y))", lhs, rhs);
    }
  return Check::pass();
}

/// π on the join-irreducibles; its maximum is 1.
struct PossibilityDistribution {
  Lattice lattice;
  std::map<Element, double> pi;
};

/// ν on the meet-irreducibles; its minimum is 0.
struct NecessityDistribution {
  Lattice lattice;
  std::map<Element, double> nu;
};

namespace detail {

inline void require_distributive(const Lattice& l) {
  if (distributivity_violation(l))
    throw Error(ErrorKind::NotDistributive, "distributions need a distributive lattice");
}

inline void check_distribution(const Lattice& l, const std::map<Element, double>& values,
                               const std::vector<Element>& domain, const char* kind,
                               double extreme, double tol, bool require_extreme = true) {
  if (values.size() != domain.size())
    throw Error(ErrorKind::InvalidDistribution,
                std::string(kind) + " must give a value for each of its " +
                    std::to_string(domain.size()) + " irreducibles");
  for (Element j : domain) {
    auto it = values.find(j);
    if (it == values.end())
      throw Error(ErrorKind::InvalidDistribution,
                  std::string(kind) + " has no value for '" + l.name(j) + "'", {l.name(j)});
    if (!(it->second >= -tol && it->second <= 1.0 + tol))
      throw Error(ErrorKind::InvalidDistribution,
                  std::string(kind) + " value of '" + l.name(j) + "' is outside [0,1]", {l.name(j)});
  }
  // Restrictions of isotone functions are isotone.
  for (Element a : domain)
    for (Element b : domain)
      if (l.lt(a, b) && values.at(a) > values.at(b) + tol)
        throw Error(ErrorKind::InvalidDistribution,
                    std::string(kind) + " is not isotone: '" + l.name(a) + "' < '" + l.name(b) +
                        "' but its value is larger",
                    {l.name(a), l.name(b)});
  bool hit = domain.empty() || !require_extreme;
  for (const auto& [e, v] : values) hit = hit || std::abs(v - extreme) <= tol;
  if (!hit)
    throw Error(ErrorKind::InvalidDistribution,
                std::string(kind) + " never reaches " + (extreme == 1.0 ? "1" : "0"));
}

}  // namespace detail

inline PossibilityDistribution make_possibility_distribution(const Lattice& l,
                                                             std::map<Element, double> pi,
                                                             double tol = kTolerance) {
  for (const auto& [e, v] : pi)
    if (e >= l.size() || !l.is_join_irreducible(e))
      throw Error(ErrorKind::InvalidDistribution, "π is defined on join-irreducibles only");
  detail::check_distribution(l, pi, l.join_irreducibles(), "π", 1.0, tol);
  return {l, std::move(pi)};
}

inline NecessityDistribution make_necessity_distribution(const Lattice& l,
                                                         std::map<Element, double> nu,
                                                         double tol = kTolerance) {
  for (const auto& [e, v] : nu)
    if (e >= l.size() || !l.is_meet_irreducible(e))
      throw Error(ErrorKind::InvalidDistribution, "ν is defined on meet-irreducibles only");
  detail::check_distribution(l, nu, l.meet_irreducibles(), "ν", 0.0, tol);
  return {l, std::move(nu)};
}

/// Restriction of a possibility function to the join-irreducibles.
inline PossibilityDistribution possibility_distribution(const SetFunction& f,
                                                        double tol = kTolerance) {
  detail::require_distributive(f.lattice());
  std::map<Element, double> pi;
  for (Element j : f.lattice().join_irreducibles()) pi[j] = f[j];
  return make_possibility_distribution(f.lattice(), std::move(pi), tol);
}

/// Restriction of a necessity function to the meet-irreducibles.
inline NecessityDistribution necessity_distribution(const SetFunction& f,
                                                    double tol = kTolerance) {
  detail::require_distributive(f.lattice());
  std::map<Element, double> nu;
  for (Element m : f.lattice().meet_irreducibles()) nu[m] = f[m];
  return make_necessity_distribution(f.lattice(), std::move(nu), tol);
}

/// Π(x) = max over the minimal join decomposition of x; Π(⊥) = 0.
inline double eval_possibility(const PossibilityDistribution& d, Element x) {
  detail::require_distributive(d.lattice);
  double v = 0.0;
  for (Element j : eta_star(d.lattice, x)) v = std::max(v, d.pi.at(j));
  return v;
}

/// N(x) = min over the minimal meet decomposition of x; N(⊤) = 1.
inline double eval_necessity(const NecessityDistribution& d, Element x) {
  detail::require_distributive(d.lattice);
  double v = 1.0;
  for (Element m : mu_star(d.lattice, x)) v = std::min(v, d.nu.at(m));
  return v;
}

inline SetFunction possibility_function(const PossibilityDistribution& d) {
  SetFunction f(d.lattice);
  for (Element x = 0; x < f.size(); ++x) f[x] = eval_possibility(d, x);
  return f;
}

inline SetFunction necessity_function(const NecessityDistribution& d) {
  SetFunction f(d.lattice);
  for (Element x = 0; x < f.size(); ++x) f[x] = eval_necessity(d, x);
  return f;
}

/// One row of the chain reconstruction: at step k the join-irreducible j_k
/// (k-th smallest π) is negated and ι_k selected.
struct ReconstructionStep {
  std::size_t k = 0;
  Element x = 0;                    // j_k
  Element negated = 0;              // n(j_k)
  std::vector<Element> eta_negated; // η(n(j_k))
  Element iota = 0;                 // ι_k
  Element chain_element = 0;        // ι_n ∨ … ∨ ι_k
  double mass = 0.0;                // π(j_k) - π(j_{k-1})
};

struct FocalChain {
  std::vector<Element> chain;   // ι_n, ι_n∨ι_{n-1}, …, ⊤ (⊥ excluded)
  MassAllocation mass;
  std::vector<Element> iota;    // ι_n, …, ι_1
  std::vector<Element> sorted;  // j_1, …, j_n by increasing π
  std::vector<ReconstructionStep> steps;  // k = n down to 1
};

/// Recovers the unique maximal chain of focal elements and its masses from a
/// possibility distribution on an autodual distributive lattice. π must be
/// strictly increasing once sorted, with maximum 1.
///
/// ι_k is selected as the unique join-irreducible outside η(n(j_k)) but
/// inside every η(n(j_l)), l < k; the alternative rule (least element of
/// η(n(j_{k-1})) ∖ η(n(j_k)) not yet chosen) is run alongside and must agree.
inline FocalChain reconstruct_chain(const Lattice& l, const Negation& n,
                                    const PossibilityDistribution& pi, double tol = kTolerance) {
  detail::require_distributive(l);
  if (!n.lattice.same_as(l) || !pi.lattice.same_as(l))
    throw Error(ErrorKind::LatticeMismatch, "negation and distribution must live on the lattice");
  if (n.wedge || !verify_vee_negation(l, n.map))
    throw Error(ErrorKind::InvalidNegation, "reconstruction needs a ∨-negation");
  // The maximum is checked below so that it reports TopValueNotOne.
  detail::check_distribution(l, pi.pi, l.join_irreducibles(), "π", 1.0, tol, false);

  std::vector<Element> js = l.join_irreducibles();
  std::stable_sort(js.begin(), js.end(),
                   [&](Element a, Element b) { return pi.pi.at(a) < pi.pi.at(b); });
  const std::size_t count = js.size();
  for (std::size_t i = 1; i < count; ++i)
    if (pi.pi.at(js[i]) - pi.pi.at(js[i - 1]) <= tol)
      throw Error(ErrorKind::TiesInDistribution,
                  "π('" + l.name(js[i - 1]) + "') and π('" + l.name(js[i]) + "') are tied",
                  {l.name(js[i - 1]), l.name(js[i])});
  if (count > 0 && std::abs(pi.pi.at(js.back()) - 1.0) > tol)
    throw Error(ErrorKind::TopValueNotOne, "largest π value is not 1", {l.name(js.back())});

  // ηn[k] = η(n(j_{k+1})) as membership flags over elements.
  std::vector<std::vector<char>> in_eta(count, std::vector<char>(l.size(), 0));
  for (std::size_t k = 0; k < count; ++k)
    for (Element j : eta(l, n(js[k]))) in_eta[k][j] = 1;

  FocalChain out{{}, MassAllocation(SetFunction(l)), {}, js, {}};
  std::vector<char> chosen(l.size(), 0);
  Element acc = l.bottom();
  SetFunction mass(l);

  for (std::size_t k = count; k-- > 0;) {  // k is 0-based: step k+1
    std::vector<Element> by_intersection;
    for (Element j : l.join_irreducibles()) {
      if (in_eta[k][j]) continue;
      bool all = true;
      for (std::size_t i = 0; i < k && all; ++i) all = in_eta[i][j] != 0;
      if (all) by_intersection.push_back(j);
    }
    if (by_intersection.size() != 1)
      throw Error(ErrorKind::SelectionFailed,
                  "step " + std::to_string(k + 1) + ": " + std::to_string(by_intersection.size()) +
                      " candidates instead of one");

    std::vector<Element> pool;
    for (Element j : l.join_irreducibles())
      if ((k == 0 || in_eta[k - 1][j]) && !in_eta[k][j] && !chosen[j]) pool.push_back(j);
    std::optional<Element> least;
    for (Element c : pool)
      if (std::all_of(pool.begin(), pool.end(), [&](Element o) { return l.leq(c, o); })) least = c;
    if (!least || *least != by_intersection.front())
      throw Error(ErrorKind::SelectionFailed,
                  "step " + std::to_string(k + 1) + ": selection rules disagree");

    const Element iota = by_intersection.front();
    chosen[iota] = 1;
    const Element next = l.join(acc, iota);
    if (!l.covers(acc, next))
      throw Error(ErrorKind::SelectionFailed,
                  "step " + std::to_string(k + 1) + ": chain is not maximal");
    acc = next;

    const double below = k == 0 ? 0.0 : pi.pi.at(js[k - 1]);
    const double m = pi.pi.at(js[k]) - below;
    mass[acc] += m;
    out.iota.push_back(iota);
    out.chain.push_back(acc);
    out.steps.push_back({k + 1, js[k], n(js[k]), eta(l, n(js[k])), iota, acc, m});
  }
  if (acc != l.top()) throw Error(ErrorKind::SelectionFailed, "chain does not reach top");

  const SetFunction nec = zeta_transform(mass);
  for (Element j : js)
    if (std::abs(1.0 - nec[n(j)] - pi.pi.at(j)) > tol)
      throw Error(ErrorKind::SelectionFailed,
                  "reconstructed masses do not reproduce π('" + l.name(j) + "')", {l.name(j)});
  out.mass = MassAllocation(std::move(mass));
  return out;
}

}  // namespace latbel

#endif  // LATBEL_POSSIBILISTIC_HPP
