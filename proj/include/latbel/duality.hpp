#ifndef LATBEL_DUALITY_HPP
#define LATBEL_DUALITY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "latbel/check.hpp"
#include "latbel/lattice.hpp"

namespace latbel {

/// A ∨-negation (n(x∨y) = n(x)∧n(y), n(⊤) = ⊥) or, when `wedge` is set, the
/// ∧-negation obtained by inverting one.
struct Negation {
  Lattice lattice;
  std::vector<Element> map;
  std::vector<Element> inverse;
  bool wedge = false;

  Element operator()(Element x) const { return map.at(x); }

  friend bool operator==(const Negation& a, const Negation& b) {
    return a.lattice.same_as(b.lattice) && a.wedge == b.wedge && a.map == b.map;
  }
};

namespace detail {

inline std::vector<Element> inverse_of(const Lattice& l, const std::vector<Element>& map) {
  if (map.size() != l.size())
    throw Error(ErrorKind::NotABijection, "map has " + std::to_string(map.size()) +
                                              " entries for " + std::to_string(l.size()) +
                                              " elements");
  std::vector<Element> inv(map.size(), static_cast<Element>(map.size()));
  for (Element x = 0; x < map.size(); ++x) {
    const Element y = map[x];
    if (y >= map.size())
      throw Error(ErrorKind::NotABijection, "image of '" + l.name(x) + "' is out of range");
    if (inv[y] != map.size())
      throw Error(ErrorKind::NotABijection,
                  "'" + l.name(inv[y]) + "' and '" + l.name(x) + "' share the image '" +
                      l.name(y) + "'",
                  {l.name(inv[y]), l.name(x), l.name(y)});
    inv[y] = x;
  }
  return inv;
}

}  // namespace detail

/// Checks bijectivity (raises NotABijection otherwise), n(⊤) = ⊥, and the
/// De Morgan identity on all pairs.
inline Check verify_vee_negation(const Lattice& l, const std::vector<Element>& map) {
  detail::inverse_of(l, map);
  if (map[l.top()] != l.bottom()) return Check::fail({l.top()}, "top is not sent to bottom");
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x; y < l.size(); ++y)
      if (map[l.join(x, y)] != l.meet(map[x], map[y]))
        return Check::fail({x, y}, "n(x∨y) differs from n(x)∧n(y)");
  return Check::pass();
}

/// Wraps a verified map; InvalidNegation if it is not a ∨-negation.
inline Negation make_negation(const Lattice& l, std::vector<Element> map) {
  const Check c = verify_vee_negation(l, map);
  if (!c) {
    std::vector<std::string> names;
    for (Element e : c.witness) names.push_back(l.name(e));
    throw Error(ErrorKind::InvalidNegation, c.reason, names);
  }
  auto inv = detail::inverse_of(l, map);
  return Negation{l, std::move(map), std::move(inv), false};
}

/// Enumerates anti-automorphisms of l (equivalently its ∨-negations), at
/// most `limit` of them, in lexicographic order of the image sequence
/// n(e0), n(e1), ... taken in input order.
inline std::vector<Negation> find_negations(const Lattice& l, std::size_t limit = 1) {
  std::vector<Negation> out;
  if (limit == 0) return out;
  const auto n = static_cast<Element>(l.size());

  // An anti-automorphism swaps height with co-height and up-degree with
  // down-degree.
  std::vector<std::vector<Element>> candidates(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.height(x) == l.coheight(y) &&
          l.upper_covers(x).size() == l.lower_covers(y).size() &&
          l.lower_covers(x).size() == l.upper_covers(y).size())
        candidates[x].push_back(y);

  std::vector<Element> map(n);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, Element x) -> void {
    if (out.size() >= limit) return;
    if (x == n) {
      out.push_back(Negation{l, map, detail::inverse_of(l, map), false});
      return;
    }
    for (Element y : candidates[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (Element z = 0; z < x && ok; ++z)
        ok = l.leq(x, z) == l.leq(map[z], y) && l.leq(z, x) == l.leq(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      self(self, x + 1);
      used[y] = 0;
      if (out.size() >= limit) return;
    }
  };
  extend(extend, 0);
  return out;
}

inline bool is_autodual(const Lattice& l) { return !find_negations(l, 1).empty(); }

/// Swaps map and inverse; the inverse of a ∨-negation is a ∧-negation.
inline Negation invert(const Negation& n) {
  return Negation{n.lattice, n.inverse, n.map, !n.wedge};
}

inline bool is_involutive(const Negation& n) {
  for (Element x = 0; x < n.map.size(); ++x)
    if (n.map[n.map[x]] != x) return false;
  return true;
}

/// Extends a correspondence join-irreducible -> meet-irreducible to the
/// whole lattice by n(x) = ∧_{j ∈ η(x)} jmap(j). Requires a distributive
/// lattice; NoConsistentExtension when the result is not a ∨-negation
/// agreeing with jmap.
inline Negation negation_from_irreducible_map(const Lattice& l,
                                              const std::map<Element, Element>& jmap) {
  if (distributivity_violation(l))
    throw Error(ErrorKind::NotDistributive, "irreducible maps extend only on distributive lattices");
  for (const auto& [j, m] : jmap) {
    if (j >= l.size() || !l.is_join_irreducible(j))
      throw Error(ErrorKind::InvalidArgument, "key is not join-irreducible");
    if (m >= l.size() || !l.is_meet_irreducible(m))
      throw Error(ErrorKind::InvalidArgument,
                  "image of '" + l.name(j) + "' is not meet-irreducible", {l.name(j)});
  }
  std::map<Element, Element> seen;
  for (Element j : l.join_irreducibles()) {
    auto it = jmap.find(j);
    if (it == jmap.end())
      throw Error(ErrorKind::InvalidArgument, "no image given for '" + l.name(j) + "'",
                  {l.name(j)});
    if (auto [pos, fresh] = seen.emplace(it->second, j); !fresh)
      throw Error(ErrorKind::NotABijection,
                  "'" + l.name(pos->second) + "' and '" + l.name(j) + "' share the image '" +
                      l.name(it->second) + "'",
                  {l.name(pos->second), l.name(j), l.name(it->second)});
  }

  std::vector<Element> map(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    std::vector<Element> images;
    for (Element j : eta(l, x)) images.push_back(jmap.at(j));
    map[x] = meet_or_top(l, images);
  }
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::NoConsistentExtension, "induced map is not a bijection");
  const Check c = verify_vee_negation(l, map);
  if (!c) {
    std::vector<std::string> names;
    for (Element e : c.witness) names.push_back(l.name(e));
    throw Error(ErrorKind::NoConsistentExtension, c.reason, names);
  }
  for (const auto& [j, m] : jmap)
    if (map[j] != m)
      throw Error(ErrorKind::NoConsistentExtension,
                  "extension disagrees with the given image of '" + l.name(j) + "'", {l.name(j)});
  auto inv = detail::inverse_of(l, map);
  return Negation{l, std::move(map), std::move(inv), false};
}

}  // namespace latbel

#endif  // LATBEL_DUALITY_HPP
