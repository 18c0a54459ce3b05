#ifndef LATBEL_LATTICE_HPP
#define LATBEL_LATTICE_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latbel/error.hpp"
#include "latbel/poset.hpp"

namespace latbel {

/// Counterexample tuple for a failed structural or functional check.
using Witness = std::vector<Element>;

class Lattice;
Lattice lattice_from_poset(const Poset& p);

namespace detail {

struct LatticeData {
  Poset poset;
  std::vector<Element> join, meet;  // n*n tables
  Element bottom = 0, top = 0;
  std::vector<Element> join_irr, meet_irr;
  std::vector<char> is_join_irr, is_meet_irr;
  std::vector<unsigned> height, coheight;

  // Local distributivity is expensive (M3 search), so it is decided once on
  // first use.
  mutable std::once_flag local_once;
  mutable bool lower_local = false, upper_local = false;
};

}  // namespace detail

/// A finite lattice. Copies share the same immutable tables, so passing a
/// Lattice by value is cheap; two handles are the same lattice iff they
/// share tables.
class Lattice {
 public:
  const Poset& poset() const noexcept { return d_->poset; }
  std::size_t size() const noexcept { return d_->poset.size(); }
  const std::vector<std::string>& names() const noexcept { return d_->poset.names(); }
  const std::string& name(Element x) const { return d_->poset.name(x); }
  Element at(std::string_view n) const { return d_->poset.at(n); }
  std::optional<Element> find(std::string_view n) const { return d_->poset.find(n); }

  bool leq(Element x, Element y) const { return d_->poset.leq(x, y); }
  bool lt(Element x, Element y) const { return d_->poset.lt(x, y); }
  bool covers(Element lower, Element upper) const { return d_->poset.covers(lower, upper); }
  const std::vector<Element>& upper_covers(Element x) const { return d_->poset.upper_covers(x); }
  const std::vector<Element>& lower_covers(Element x) const { return d_->poset.lower_covers(x); }

  Element join(Element x, Element y) const { return d_->join[x * size() + y]; }
  Element meet(Element x, Element y) const { return d_->meet[x * size() + y]; }
  Element bottom() const noexcept { return d_->bottom; }
  Element top() const noexcept { return d_->top; }

  const std::vector<Element>& join_irreducibles() const noexcept { return d_->join_irr; }
  const std::vector<Element>& meet_irreducibles() const noexcept { return d_->meet_irr; }
  bool is_join_irreducible(Element x) const { return d_->is_join_irr[x] != 0; }
  bool is_meet_irreducible(Element x) const { return d_->is_meet_irr[x] != 0; }

  /// Length of a longest chain from bottom to x / from x to top.
  unsigned height(Element x) const { return d_->height[x]; }
  unsigned coheight(Element x) const { return d_->coheight[x]; }

  bool is_lower_locally_distributive() const;
  bool is_upper_locally_distributive() const;

  bool same_as(const Lattice& o) const noexcept { return d_ == o.d_; }

 private:
  friend Lattice lattice_from_poset(const Poset& p);
  std::shared_ptr<const detail::LatticeData> d_;
};

/// Raises LatticeMismatch unless both handles refer to the same lattice.
inline void require_same(const Lattice& a, const Lattice& b, const char* what) {
  if (!a.same_as(b))
    throw Error(ErrorKind::LatticeMismatch, std::string(what) + " live on different lattices");
}

inline Lattice lattice_from_poset(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::EmptyStructure, "a lattice needs at least one element");

  auto d = std::make_shared<detail::LatticeData>();
  d->poset = p;

  // depth: longest chain from a minimal element. Among the common upper
  // bounds of x and y, the least one (if any) is the unique one of minimal
  // depth, and it must lie below every other common bound.
  std::vector<unsigned> depth(n, 0), codepth(n, 0);
  for (Element v : p.linear_extension())
    for (Element w : p.lower_covers(v)) depth[v] = std::max(depth[v], depth[w] + 1);
  const auto& topo = p.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (Element w : p.upper_covers(*it)) codepth[*it] = std::max(codepth[*it], codepth[w] + 1);

  auto fail = [&](Element x, Element y, const char* reason) {
    throw Error(ErrorKind::NotALattice,
                "pair (" + p.name(x) + ", " + p.name(y) + "): " + reason,
                {p.name(x), p.name(y), reason});
  };
  auto least_of = [&](const Bits& common, const std::vector<unsigned>& rank,
                      const auto& bound_set) -> std::optional<Element> {
    std::optional<Element> best;
    for (auto i = common.find_first(); i != Bits::npos; i = common.find_next(i)) {
      const auto e = static_cast<Element>(i);
      if (!best || rank[e] < rank[*best]) best = e;
    }
    if (!best || !common.is_subset_of(bound_set(*best))) return std::nullopt;
    return best;
  };

  d->join.assign(n * n, 0);
  d->meet.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    d->join[x * n + x] = d->meet[x * n + x] = x;
    for (Element y = x + 1; y < n; ++y) {
      Element j, m;
      if (p.leq(x, y)) {
        j = y;
        m = x;
      } else if (p.leq(y, x)) {
        j = x;
        m = y;
      } else {
        const Bits ups = p.up_set(x) & p.up_set(y);
        if (ups.none()) fail(x, y, "no-upper-bound");
        auto lub = least_of(ups, depth, [&](Element e) -> const Bits& { return p.up_set(e); });
        if (!lub) fail(x, y, "no-least-upper-bound");
        const Bits downs = p.down_set(x) & p.down_set(y);
        if (downs.none()) fail(x, y, "no-lower-bound");
        auto glb =
            least_of(downs, codepth, [&](Element e) -> const Bits& { return p.down_set(e); });
        if (!glb) fail(x, y, "no-greatest-lower-bound");
        j = *lub;
        m = *glb;
      }
      d->join[x * n + y] = d->join[y * n + x] = j;
      d->meet[x * n + y] = d->meet[y * n + x] = m;
    }
  }

  Element bot = 0, top = 0;
  for (Element x = 1; x < n; ++x) {
    bot = d->meet[bot * n + x];
    top = d->join[top * n + x];
  }
  d->bottom = bot;
  d->top = top;

  d->is_join_irr.assign(n, 0);
  d->is_meet_irr.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (p.lower_covers(x).size() == 1) {
      d->is_join_irr[x] = 1;
      d->join_irr.push_back(x);
    }
    if (p.upper_covers(x).size() == 1) {
      d->is_meet_irr[x] = 1;
      d->meet_irr.push_back(x);
    }
  }
  d->height = depth;
  d->coheight = codepth;

  Lattice l;
  l.d_ = std::move(d);
  return l;
}

/// The order dual: same element names, every cover reversed.
inline Lattice dual(const Lattice& l, const Limits& limits = {}) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : l.poset().cover_pairs()) covers.emplace_back(l.name(b), l.name(a));
  return lattice_from_poset(build_poset(l.names(), covers, limits));
}

/// n-ary join; the join of a singleton is the element itself.
inline Element join(const Lattice& l, std::span<const Element> xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "join of an empty set");
  Element acc = xs.front();
  for (Element x : xs) {
    if (x >= l.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    acc = l.join(acc, x);
  }
  return acc;
}

inline Element meet(const Lattice& l, std::span<const Element> xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "meet of an empty set");
  Element acc = xs.front();
  for (Element x : xs) {
    if (x >= l.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    acc = l.meet(acc, x);
  }
  return acc;
}

/// Join over a possibly empty set; the empty join is bottom.
inline Element join_or_bottom(const Lattice& l, std::span<const Element> xs) {
  return xs.empty() ? l.bottom() : join(l, xs);
}
inline Element meet_or_top(const Lattice& l, std::span<const Element> xs) {
  return xs.empty() ? l.top() : meet(l, xs);
}

/// Normal decomposition: the join-irreducibles below x.
inline std::vector<Element> eta(const Lattice& l, Element x) {
  std::vector<Element> out;
  for (Element j : l.join_irreducibles())
    if (l.leq(j, x)) out.push_back(j);
  return out;
}

/// The meet-irreducibles above x.
inline std::vector<Element> mu_set(const Lattice& l, Element x) {
  std::vector<Element> out;
  for (Element m : l.meet_irreducibles())
    if (l.leq(x, m)) out.push_back(m);
  return out;
}

namespace detail {

// Elements of `full` that cannot be dropped without changing the fold; when
// the irredundant decomposition is unique it is exactly this set.
template <class Fold>
std::vector<Element> essential_part(const std::vector<Element>& full, Element target, Fold fold) {
  std::vector<Element> keep;
  std::vector<Element> rest;
  for (std::size_t i = 0; i < full.size(); ++i) {
    rest.clear();
    for (std::size_t k = 0; k < full.size(); ++k)
      if (k != i) rest.push_back(full[k]);
    if (fold(rest) != target) keep.push_back(full[i]);
  }
  return keep;
}

}  // namespace detail

/// Minimal (irredundant) join decomposition. Only unique, hence only
/// defined, on lower locally distributive lattices.
inline std::vector<Element> eta_star(const Lattice& l, Element x) {
  if (!l.is_lower_locally_distributive())
    throw Error(ErrorKind::DecompositionNotUnique,
                "minimal join decomposition needs a lower locally distributive lattice");
  auto fold = [&](const std::vector<Element>& s) { return join_or_bottom(l, s); };
  auto out = detail::essential_part(eta(l, x), x, fold);
  if (fold(out) != x)
    throw Error(ErrorKind::DecompositionNotUnique,
                "no unique irredundant decomposition of '" + l.name(x) + "'", {l.name(x)});
  return out;
}

inline std::vector<Element> mu_star(const Lattice& l, Element x) {
  if (!l.is_upper_locally_distributive())
    throw Error(ErrorKind::DecompositionNotUnique,
                "minimal meet decomposition needs an upper locally distributive lattice");
  auto fold = [&](const std::vector<Element>& s) { return meet_or_top(l, s); };
  auto out = detail::essential_part(mu_set(l, x), x, fold);
  if (fold(out) != x)
    throw Error(ErrorKind::DecompositionNotUnique,
                "no unique irredundant decomposition of '" + l.name(x) + "'", {l.name(x)});
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates. Each returns the first counterexample in input
// order, or nullopt when the property holds.

inline std::optional<Witness> linearity_violation(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y)
      if (!l.poset().comparable(x, y)) return Witness{x, y};
  return std::nullopt;
}

inline std::optional<Witness> rankedness_violation(const Lattice& l) {
  for (auto [lo, hi] : l.poset().cover_pairs())
    if (l.height(hi) != l.height(lo) + 1) return Witness{lo, hi};
  return std::nullopt;
}

/// x∨y covering both x and y must force x and y to cover x∧y.
inline std::optional<Witness> lower_semimodularity_violation(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      const Element j = l.join(x, y), m = l.meet(x, y);
      if (l.covers(x, j) && l.covers(y, j) && !(l.covers(m, x) && l.covers(m, y)))
        return Witness{x, y};
    }
  return std::nullopt;
}

/// x and y covering x∧y must force x∨y to cover both.
inline std::optional<Witness> upper_semimodularity_violation(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y) {
      const Element j = l.join(x, y), m = l.meet(x, y);
      if (l.covers(m, x) && l.covers(m, y) && !(l.covers(x, j) && l.covers(y, j)))
        return Witness{x, y};
    }
  return std::nullopt;
}

/// Checks (x∨y)∧z = (x∧z)∨(y∧z) over all triples.
inline std::optional<Witness> distributivity_violation(const Lattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z)))
          return Witness{x, y, z};
  return std::nullopt;
}

/// Searches for a sublattice isomorphic to M3. Returns (bottom, a, b, c, top)
/// of the first embedding found.
inline std::optional<Witness> find_m3_sublattice(const Lattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (l.poset().comparable(a, b)) continue;
      const Element t = l.join(a, b), m = l.meet(a, b);
      for (Element c = b + 1; c < n; ++c) {
        if (l.poset().comparable(a, c) || l.poset().comparable(b, c)) continue;
        if (l.join(a, c) == t && l.join(b, c) == t && l.meet(a, c) == m && l.meet(b, c) == m)
          return Witness{m, a, b, c, t};
      }
    }
  return std::nullopt;
}

inline std::vector<Element> complements(const Lattice& l, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < l.size(); ++y)
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  return out;
}

inline std::optional<Witness> complementedness_violation(const Lattice& l) {
  for (Element x = 0; x < l.size(); ++x)
    if (complements(l, x).empty()) return Witness{x};
  return std::nullopt;
}

inline std::optional<Witness> atomisticity_violation(const Lattice& l) {
  for (Element j : l.join_irreducibles())
    if (!l.covers(l.bottom(), j)) return Witness{j};
  return std::nullopt;
}

inline bool Lattice::is_lower_locally_distributive() const {
  std::call_once(d_->local_once, [this] {
    const bool no_m3 = !find_m3_sublattice(*this).has_value();
    d_->lower_local = no_m3 && !lower_semimodularity_violation(*this);
    d_->upper_local = no_m3 && !upper_semimodularity_violation(*this);
  });
  return d_->lower_local;
}

inline bool Lattice::is_upper_locally_distributive() const {
  is_lower_locally_distributive();
  return d_->upper_local;
}

// ---------------------------------------------------------------------------

/// All maximal chains bottom -> top, each listed bottom first.
inline std::vector<std::vector<Element>> maximal_chains(const Lattice& l,
                                                        const Limits& limits = {}) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> path{l.bottom()};
  auto walk = [&](auto&& self, Element v) -> void {
    if (v == l.top()) {
      if (out.size() >= limits.max_chains)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits.max_chains) + " maximal chains");
      out.push_back(path);
      return;
    }
    for (Element w : l.upper_covers(v)) {
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  walk(walk, l.bottom());
  return out;
}

/// Lattice of downsets of a poset, ordered by inclusion, together with the
/// downset each lattice element stands for.
struct DownsetLattice {
  Poset base;
  Lattice lattice;
  std::vector<Bits> downsets;  // indexed by lattice element

  /// Lattice element whose downset is `d`.
  Element element_of(const Bits& d) const {
    for (Element x = 0; x < downsets.size(); ++x)
      if (downsets[x] == d) return x;
    throw Error(ErrorKind::UnknownElement, "not a downset of the base poset");
  }
};

/// Canonical name of a set of base elements: "{a,b}" in base input order.
inline std::string set_name(const Poset& base, const Bits& s) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (!first) out += ',';
    out += base.name(static_cast<Element>(i));
    first = false;
  }
  return out + "}";
}

inline DownsetLattice downset_lattice(const Poset& p, const Limits& limits = {}) {
  const std::size_t n = p.size();
  const auto& order = p.linear_extension();
  std::vector<Bits> found;
  Bits current(n);
  // Decide membership along a linear extension; x may enter only once all of
  // its lower covers have, so every leaf is a distinct downset.
  auto grow = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      if (found.size() >= limits.max_downsets)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits.max_downsets) + " downsets");
      found.push_back(current);
      return;
    }
    const Element x = order[i];
    self(self, i + 1);
    const auto& lower = p.lower_covers(x);
    if (std::all_of(lower.begin(), lower.end(), [&](Element y) { return current[y]; })) {
      current.set(x);
      self(self, i + 1);
      current.reset(x);
    }
  };
  grow(grow, 0);
  if (found.size() > limits.max_elements)
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(found.size()) + " downsets exceed the element cap of " +
                    std::to_string(limits.max_elements));

  auto key = [](const Bits& b) {
    std::vector<std::size_t> idx;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) idx.push_back(i);
    return idx;
  };
  std::sort(found.begin(), found.end(), [&](const Bits& a, const Bits& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return key(a) < key(b);
  });

  std::vector<std::string> names;
  names.reserve(found.size());
  for (const auto& d : found) names.push_back(set_name(p, d));

  // D is covered by D ∪ {x} for every x minimal in the complement of D.
  std::map<Bits, Element> where;
  for (Element i = 0; i < found.size(); ++i) where.emplace(found[i], i);
  std::vector<std::pair<std::string, std::string>> covers;
  for (Element i = 0; i < found.size(); ++i)
    for (Element x = 0; x < n; ++x) {
      if (found[i][x]) continue;
      Bits next = found[i];
      next.set(x);
      if (auto it = where.find(next); it != where.end()) covers.emplace_back(names[i], names[it->second]);
    }

  DownsetLattice out{p, lattice_from_poset(build_poset(names, covers, limits)), std::move(found)};
  return out;
}

}  // namespace latbel

#endif  // LATBEL_LATTICE_HPP
