#ifndef LATBEL_POSET_HPP
#define LATBEL_POSET_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latbel/error.hpp"

namespace latbel {

/// Position of an element in the declared element list.
using Element = std::uint32_t;
using Bits = boost::dynamic_bitset<>;
using CoverPair = std::pair<Element, Element>;

/// Caps that turn combinatorial blow-ups into SizeLimitExceeded.
struct Limits {
  std::size_t max_elements = 4096;
  std::size_t max_downsets = std::size_t{1} << 20;
  std::size_t max_chains = 1'000'000;
  std::size_t max_families = 10'000'000;

  /// Defaults, with LATBEL_MAX_ELEMENTS overriding the element cap.
  static Limits from_env() {
    Limits l;
    if (const char* v = std::getenv("LATBEL_MAX_ELEMENTS")) {
      char* end = nullptr;
      const unsigned long long n = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && n > 0) l.max_elements = static_cast<std::size_t>(n);
    }
    return l;
  }
};

class Poset;
Poset build_poset(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& covers,
                  const Limits& limits = {});

/// A finite poset given by its Hasse diagram, with the order closure
/// precomputed as bit rows. Immutable after construction.
class Poset {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }

  std::optional<Element> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element at(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error(ErrorKind::UnknownElement, "no element named '" + std::string(name) + "'",
                {std::string(name)});
  }

  bool leq(Element x, Element y) const { return up_[x][y]; }
  bool lt(Element x, Element y) const { return x != y && up_[x][y]; }
  bool comparable(Element x, Element y) const { return up_[x][y] || up_[y][x]; }
  bool covers(Element lower, Element upper) const {
    const auto& u = upper_[lower];
    return std::binary_search(u.begin(), u.end(), upper);
  }

  /// {y : x <= y} and {y : y <= x} as bit rows indexed by element.
  const Bits& up_set(Element x) const { return up_[x]; }
  const Bits& down_set(Element x) const { return down_[x]; }

  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }

  /// Irredundant cover pairs (lower, upper), sorted by (lower, upper).
  const std::vector<CoverPair>& cover_pairs() const noexcept { return covers_; }
  /// Input pairs that were implied by transitivity and therefore dropped.
  const std::vector<CoverPair>& dropped_covers() const noexcept { return dropped_; }

  /// Linear extension that prefers lower input indices among ready elements.
  const std::vector<Element>& linear_extension() const noexcept { return topo_; }

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::string>>&, const Limits&);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<Bits> up_, down_;
  std::vector<std::vector<Element>> upper_, lower_;
  std::vector<CoverPair> covers_, dropped_;
  std::vector<Element> topo_;
};

namespace detail {

inline bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(),
                      [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

// Returns one directed cycle among `alive` nodes, in traversal order.
inline std::vector<Element> find_cycle(const std::vector<std::vector<Element>>& succ,
                                       const std::vector<char>& alive) {
  const std::size_t n = succ.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Element> stack;
  std::vector<Element> cycle;
  std::function<bool(Element)> dfs = [&](Element v) {
    state[v] = 1;
    stack.push_back(v);
    for (Element w : succ[v]) {
      if (!alive[w]) continue;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (Element v = 0; v < n; ++v)
    if (alive[v] && state[v] == 0 && dfs(v)) break;
  return cycle;
}

}  // namespace detail

/// Builds a poset from its element list and cover pairs ["x","y"] meaning y
/// covers x. Duplicate pairs are merged and pairs implied by transitivity are
/// dropped (and recorded in dropped_covers()).
inline Poset build_poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         const Limits& limits) {
  if (elements.size() > limits.max_elements)
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(elements.size()) + " elements exceed the cap of " +
                    std::to_string(limits.max_elements));
  Poset p;
  const auto n = static_cast<Element>(elements.size());
  p.names_ = elements;
  for (Element i = 0; i < n; ++i) {
    if (!detail::valid_token(elements[i]))
      throw Error(ErrorKind::InvalidArgument,
                  "element name '" + elements[i] + "' is empty or contains whitespace",
                  {elements[i]});
    if (!p.index_.emplace(elements[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' declared twice",
                  {elements[i]});
  }

  std::vector<CoverPair> edges;
  edges.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    const Element a = p.at(lo), b = p.at(hi);
    if (a == b) throw Error(ErrorKind::CycleDetected, "self-loop on '" + lo + "'", {lo});
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::vector<Element>> succ(n), pred(n);
  for (auto [a, b] : edges) {
    succ[a].push_back(b);
    pred[b].push_back(a);
  }

  // Kahn's algorithm, smallest ready index first.
  std::vector<std::size_t> indeg(n);
  for (Element v = 0; v < n; ++v) indeg[v] = pred[v].size();
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    const Element v = ready.top();
    ready.pop();
    p.topo_.push_back(v);
    for (Element w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (p.topo_.size() != n) {
    std::vector<char> alive(n, 1);
    for (Element v : p.topo_) alive[v] = 0;
    std::vector<std::string> names;
    for (Element v : detail::find_cycle(succ, alive)) names.push_back(elements[v]);
    std::string msg = "cover relation contains a cycle:";
    for (const auto& s : names) msg += " " + s;
    throw Error(ErrorKind::CycleDetected, msg, names);
  }

  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    const Element v = *it;
    p.up_[v].set(v);
    for (Element w : succ[v]) p.up_[v] |= p.up_[w];
  }
  for (Element v : p.topo_) {
    p.down_[v].set(v);
    for (Element w : pred[v]) p.down_[v] |= p.down_[w];
  }

  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (auto [a, b] : edges) {
    // a < z < b for some z means the pair is implied by transitivity.
    if ((p.up_[a] & p.down_[b]).count() > 2) {
      p.dropped_.emplace_back(a, b);
      continue;
    }
    p.covers_.emplace_back(a, b);
    p.upper_[a].push_back(b);
    p.lower_[b].push_back(a);
  }
  for (auto& v : p.upper_) std::sort(v.begin(), v.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());
  return p;
}

/// Subposet induced on `subset` (listed in the order given), with its own
/// cover relation recomputed from the restricted order.
inline Poset induced_subposet(const Poset& p, const std::vector<Element>& subset,
                              const Limits& limits = {}) {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (Element x : subset) names.push_back(p.name(x));
  std::vector<std::pair<std::string, std::string>> covers;
  for (Element x : subset)
    for (Element y : subset) {
      if (!p.lt(x, y)) continue;
      const bool between = std::any_of(subset.begin(), subset.end(), [&](Element z) {
        return p.lt(x, z) && p.lt(z, y);
      });
      if (!between) covers.emplace_back(p.name(x), p.name(y));
    }
  return build_poset(names, covers, limits);
}

}  // namespace latbel

#endif  // LATBEL_POSET_HPP
