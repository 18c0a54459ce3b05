#ifndef LATBEL_IO_HPP
#define LATBEL_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "latbel/duality.hpp"
#include "latbel/evidence.hpp"
#include "latbel/lattice.hpp"
#include "latbel/possibilistic.hpp"
#include "latbel/profile.hpp"
#include "latbel/report.hpp"
#include "latbel/transforms.hpp"

namespace latbel::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

/// Parses JSON text; syntax errors become ParseError with "source:line:col".
inline Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline void check_version(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a JSON object");
  if (auto it = j.find("v"); it != j.end() && (!it->is_number_integer() || *it != kFormatVersion))
    bad(where, "unsupported format version");
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

// Object of name -> number, keyed by element.
inline std::map<Element, double> values_of(const Lattice& l, const Json& obj,
                                           const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object of element -> number");
  std::map<Element, double> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_number()) bad(where + "." + it.key(), "expected a number");
    out[l.at(it.key())] = it.value().get<double>();
  }
  return out;
}

}  // namespace detail

/// {"elements": [...], "covers": [["x","y"], ...]} where y covers x.
inline Poset poset_from_json(const Json& j, const std::string& where = "lattice",
                             const Limits& limits = {}) {
  detail::check_version(j, where);
  const Json& els = detail::member(j, "elements", where);
  if (!els.is_array()) detail::bad(where + ".elements", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!els[i].is_string()) detail::bad(where + ".elements[" + std::to_string(i) + "]", "expected a string");
    names.push_back(els[i].get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (auto it = j.find("covers"); it != j.end()) {
    if (!it->is_array()) detail::bad(where + ".covers", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& c = (*it)[i];
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        detail::bad(where + ".covers[" + std::to_string(i) + "]", "expected [\"lower\", \"upper\"]");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return build_poset(names, covers, limits);
}

inline OrderedJson to_json(const Poset& p) {
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["elements"] = p.names();
  OrderedJson covers = OrderedJson::array();
  for (auto [a, b] : p.cover_pairs()) covers.push_back({p.name(a), p.name(b)});
  j["covers"] = std::move(covers);
  return j;
}

inline OrderedJson to_json(const Lattice& l) { return to_json(l.poset()); }

/// {"values": {"name": number, ...}}; every element must be present.
inline SetFunction function_from_json(const Lattice& l, const Json& j,
                                      const std::string& where = "function") {
  detail::check_version(j, where);
  const auto values = detail::values_of(l, detail::member(j, "values", where), where + ".values");
  std::vector<std::string> missing;
  SetFunction f(l);
  for (Element x = 0; x < l.size(); ++x) {
    auto it = values.find(x);
    if (it == values.end()) missing.push_back(l.name(x));
    else f[x] = it->second;
  }
  if (!missing.empty()) {
    std::string msg = "missing values for:";
    for (const auto& s : missing) msg += " " + s;
    throw Error(ErrorKind::InvalidArgument, where + ": " + msg, missing);
  }
  return f;
}

inline OrderedJson to_json(const SetFunction& f) {
  OrderedJson values = OrderedJson::object();
  for (Element x = 0; x < f.size(); ++x) values[f.lattice().name(x)] = f[x];
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["values"] = std::move(values);
  return j;
}

/// Weights use the function format; absent elements carry weight 1.
inline SupportWeights weights_from_json(const Lattice& l, const Json& j,
                                        const std::string& where = "weights") {
  detail::check_version(j, where);
  SupportWeights w(l);
  for (const auto& [e, v] : detail::values_of(l, detail::member(j, "values", where), where + ".values"))
    w.w[e] = v;
  return w;
}

inline OrderedJson to_json(const SupportWeights& w) {
  OrderedJson values = OrderedJson::object();
  for (auto [e, v] : w.entries()) values[w.lattice.name(e)] = v;
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["values"] = std::move(values);
  return j;
}

/// {"map": {"x": "n(x)", ...}}, total.
inline Negation negation_from_json(const Lattice& l, const Json& j,
                                   const std::string& where = "negation") {
  detail::check_version(j, where);
  const Json& obj = detail::member(j, "map", where);
  if (!obj.is_object()) detail::bad(where + ".map", "expected an object of element -> element");
  std::vector<Element> map(l.size(), static_cast<Element>(l.size()));
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_string()) detail::bad(where + ".map." + it.key(), "expected an element name");
    map[l.at(it.key())] = l.at(it.value().get<std::string>());
  }
  std::vector<std::string> missing;
  for (Element x = 0; x < l.size(); ++x)
    if (map[x] == l.size()) missing.push_back(l.name(x));
  if (!missing.empty()) {
    std::string msg = "map is not total, missing:";
    for (const auto& s : missing) msg += " " + s;
    throw Error(ErrorKind::NotABijection, where + ": " + msg, missing);
  }
  return make_negation(l, std::move(map));
}

inline OrderedJson to_json(const Negation& n) {
  OrderedJson map = OrderedJson::object();
  for (Element x = 0; x < n.map.size(); ++x) map[n.lattice.name(x)] = n.lattice.name(n.map[x]);
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["map"] = std::move(map);
  return j;
}

/// {"pi": {...}} on join-irreducibles.
inline PossibilityDistribution possibility_from_json(const Lattice& l, const Json& j,
                                                     const std::string& where = "distribution") {
  detail::check_version(j, where);
  return make_possibility_distribution(l, detail::values_of(l, detail::member(j, "pi", where), where + ".pi"));
}

/// {"nu": {...}} on meet-irreducibles.
inline NecessityDistribution necessity_from_json(const Lattice& l, const Json& j,
                                                 const std::string& where = "distribution") {
  detail::check_version(j, where);
  return make_necessity_distribution(l, detail::values_of(l, detail::member(j, "nu", where), where + ".nu"));
}

inline OrderedJson to_json(const PossibilityDistribution& d) {
  OrderedJson pi = OrderedJson::object();
  for (Element j : d.lattice.join_irreducibles()) pi[d.lattice.name(j)] = d.pi.at(j);
  OrderedJson out;
  out["v"] = kFormatVersion;
  out["pi"] = std::move(pi);
  return out;
}

inline OrderedJson to_json(const NecessityDistribution& d) {
  OrderedJson nu = OrderedJson::object();
  for (Element m : d.lattice.meet_irreducibles()) nu[d.lattice.name(m)] = d.nu.at(m);
  OrderedJson out;
  out["v"] = kFormatVersion;
  out["nu"] = std::move(nu);
  return out;
}

inline OrderedJson names_json(const Lattice& l, const std::vector<Element>& xs) {
  OrderedJson a = OrderedJson::array();
  for (Element x : xs) a.push_back(l.name(x));
  return a;
}

/// {"holds": bool} plus witness, sides and reason on failure.
inline OrderedJson to_json(const Check& c, const Lattice& l) {
  OrderedJson j;
  j["holds"] = c.holds;
  if (!c.holds) {
    j["witness"] = names_json(l, c.witness);
    if (!std::isnan(c.lhs)) j["lhs"] = c.lhs;
    if (!std::isnan(c.rhs)) j["rhs"] = c.rhs;
    j["reason"] = c.reason;
  }
  return j;
}

inline OrderedJson to_json(const StructureProfile& p) {
  OrderedJson flags = OrderedJson::object();
  for (const auto& [k, v] : p.flags()) flags[k] = v;
  OrderedJson wit = OrderedJson::object();
  for (const auto& [k, v] : p.flags())
    if (auto it = p.witnesses.find(k); it != p.witnesses.end()) wit[k] = it->second;
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["flags"] = std::move(flags);
  j["witnesses"] = std::move(wit);
  return j;
}

inline OrderedJson to_json(const CapacityCheckReport& r, const Lattice& l) {
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["is_capacity"] = r.is_capacity;
  j["is_belief"] = r.is_belief;
  j["is_necessity"] = r.is_necessity_hint;
  if (r.monotone) {
    if (r.monotone->total) j["max_k_monotone"] = "total";
    else j["max_k_monotone"] = r.monotone->max_k;
  } else {
    j["max_k_monotone"] = nullptr;
  }
  if (r.failure_witness) j["failure"] = to_json(*r.failure_witness, l);
  return j;
}

/// Nonzero entries mu(x,y) as [x, y, value], x in input order.
inline OrderedJson to_json(const MobiusMatrix& mu) {
  const Lattice& l = mu.lattice();
  OrderedJson rows = OrderedJson::array();
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (mu(x, y) != 0) rows.push_back({l.name(x), l.name(y), mu(x, y)});
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["mu"] = std::move(rows);
  return j;
}

inline OrderedJson to_json(const std::vector<Negation>& ns) {
  OrderedJson a = OrderedJson::array();
  for (const auto& n : ns) a.push_back(to_json(n)["map"]);
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["negations"] = std::move(a);
  return j;
}

inline OrderedJson chains_json(const Lattice& l, const std::vector<std::vector<Element>>& chains) {
  OrderedJson a = OrderedJson::array();
  for (const auto& c : chains) a.push_back(names_json(l, c));
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["chains"] = std::move(a);
  return j;
}

inline OrderedJson to_json(const FocalChain& fc) {
  const Lattice& l = fc.mass.lattice();
  OrderedJson steps = OrderedJson::array();
  for (const auto& s : fc.steps) {
    OrderedJson r;
    r["k"] = s.k;
    r["x"] = l.name(s.x);
    r["n(x)"] = l.name(s.negated);
    r["eta(n(x))"] = names_json(l, s.eta_negated);
    r["iota"] = l.name(s.iota);
    r["chain"] = l.name(s.chain_element);
    r["mass"] = s.mass;
    steps.push_back(std::move(r));
  }
  OrderedJson mass = OrderedJson::object();
  for (Element c : fc.chain) mass[l.name(c)] = fc.mass[c];
  OrderedJson j;
  j["v"] = kFormatVersion;
  j["sorted"] = names_json(l, fc.sorted);
  j["iota"] = names_json(l, fc.iota);
  j["chain"] = names_json(l, fc.chain);
  j["mass"] = std::move(mass);
  j["steps"] = std::move(steps);
  return j;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot(const Poset& p, const std::vector<unsigned>& rank,
                       const std::vector<char>& highlight) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) {
    os << "  " << dot_quote(p.name(x));
    if (!highlight.empty() && highlight[x]) os << " [style=filled, fillcolor=black, fontcolor=white]";
    os << ";\n";
  }
  unsigned max_rank = 0;
  for (unsigned r : rank) max_rank = std::max(max_rank, r);
  for (unsigned r = 0; r <= max_rank && !rank.empty(); ++r) {
    os << "  { rank=same;";
    for (Element x = 0; x < p.size(); ++x)
      if (rank[x] == r) os << ' ' << dot_quote(p.name(x)) << ';';
    os << " }\n";
  }
  for (auto [a, b] : p.cover_pairs()) os << "  " << dot_quote(p.name(a)) << " -> " << dot_quote(p.name(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace detail

/// Hasse diagram drawn bottom-up, one rank per height, join-irreducibles
/// filled black.
inline std::string to_dot(const Lattice& l) {
  std::vector<unsigned> rank(l.size());
  std::vector<char> ji(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    rank[x] = l.height(x);
    ji[x] = l.is_join_irreducible(x) ? 1 : 0;
  }
  return detail::dot(l.poset(), rank, ji);
}

inline std::string to_dot(const Poset& p) {
  std::vector<unsigned> rank(p.size(), 0);
  for (Element v : p.linear_extension())
    for (Element w : p.lower_covers(v)) rank[v] = std::max(rank[v], rank[w] + 1);
  return detail::dot(p, rank, {});
}

}  // namespace latbel::io

#endif  // LATBEL_IO_HPP
