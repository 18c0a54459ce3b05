// latbel: command-line front end for the lattice belief-function library.
//
// Exit status: 0 when the checked property holds, 1 when it fails, 2 on
// malformed input or any library error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latbel/io.hpp"
#include "latbel/latbel.hpp"

using namespace latbel;
namespace lio = latbel::io;

namespace {

struct Options {
  bool json = false;
  double tolerance = kTolerance;
  std::optional<std::size_t> limit;

  Limits limits() const {
    Limits l = Limits::from_env();
    if (limit) l.max_families = l.max_chains = *limit;
    return l;
  }
};

Options opt;

Poset load_poset(const std::string& path) {
  Poset p = lio::poset_from_json(lio::read_file(path), path, opt.limits());
  for (auto [a, b] : p.dropped_covers())
    std::cerr << "warning: " << path << ": dropped transitive cover " << p.name(a) << " < "
              << p.name(b) << "\n";
  return p;
}

Lattice load_lattice(const std::string& path) { return lattice_from_poset(load_poset(path)); }

SetFunction load_function(const Lattice& l, const std::string& path) {
  return lio::function_from_json(l, lio::read_file(path), path);
}

std::string num(double v) { return lio::format_number(v); }

std::string join_names(const Lattice& l, const std::vector<Element>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + l.name(xs[i]);
  return out;
}

void emit(const lio::OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const lio::OrderedJson& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, path + ": cannot write");
  out << j.dump(2) << "\n";
}

void print_table(const SetFunction& f, bool skip_zero = false) {
  std::size_t w = 0;
  for (const auto& n : f.lattice().names()) w = std::max(w, n.size());
  for (Element x = 0; x < f.size(); ++x) {
    if (skip_zero && std::abs(f[x]) <= opt.tolerance) continue;
    const std::string& n = f.lattice().name(x);
    std::cout << n << std::string(w - n.size() + 2, ' ') << num(f[x]) << "\n";
  }
}

// Function-valued results: JSON on stdout with --json, a table otherwise;
// -o additionally writes the JSON file.
void output_function(const SetFunction& f, const std::string& out, bool skip_zero = false) {
  const auto j = lio::to_json(f);
  if (!out.empty()) write_file(out, j);
  if (opt.json) emit(j);
  else print_table(f, skip_zero);
}

int report_check(const Check& c, const Lattice& l, const std::string& what) {
  if (opt.json) {
    auto j = lio::to_json(c, l);
    j["property"] = what;
    emit(j);
  } else if (c) {
    std::cout << what << ": holds\n";
  } else {
    std::cout << what << ": fails (" << c.reason << ")\n";
    if (!c.witness.empty()) std::cout << "  witness: " << join_names(l, c.witness) << "\n";
    if (!std::isnan(c.lhs)) std::cout << "  lhs: " << num(c.lhs) << "\n";
    if (!std::isnan(c.rhs)) std::cout << "  rhs: " << num(c.rhs) << "\n";
  }
  return c ? 0 : 1;
}

ConflictPolicy parse_policy(const std::string& s) {
  if (s == "raw") return ConflictPolicy::raw;
  if (s == "zero-bottom") return ConflictPolicy::zero_bottom;
  return ConflictPolicy::normalize;
}

Negation load_or_find_negation(const Lattice& l, const std::string& path) {
  if (!path.empty()) return lio::negation_from_json(l, lio::read_file(path), path);
  auto found = find_negations(l, 1);
  if (found.empty()) throw Error(ErrorKind::NotAutodual, "lattice admits no ∨-negation");
  return found.front();
}

// --- commands --------------------------------------------------------------

int cmd_check(const std::string& path) {
  const StructureProfile p = profile(load_poset(path));
  if (opt.json) {
    emit(lio::to_json(p));
  } else {
    for (const auto& [name, value] : p.flags()) {
      std::cout << name << ": " << (value ? "true" : "false");
      if (auto it = p.witnesses.find(name); it != p.witnesses.end() && !it->second.empty()) {
        std::cout << "  (witness:";
        for (const auto& w : it->second) std::cout << " " << w;
        std::cout << ")";
      }
      std::cout << "\n";
      if (!p.is_lattice) break;
    }
  }
  return p.is_lattice ? 0 : 1;
}

int cmd_birkhoff(const std::string& path, const std::string& out) {
  const DownsetLattice d = downset_lattice(load_poset(path), opt.limits());
  const auto j = lio::to_json(d.lattice);
  if (!out.empty()) write_file(out, j);
  if (out.empty() || opt.json) emit(j);
  else std::cout << d.lattice.size() << " downsets written to " << out << "\n";
  return 0;
}

int cmd_mobius(const std::string& path) {
  const Lattice l = load_lattice(path);
  const MobiusMatrix mu = mobius_function(l);
  if (opt.json) {
    emit(lio::to_json(mu));
    return 0;
  }
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (mu(x, y) != 0) std::cout << "mu(" << l.name(x) << ", " << l.name(y) << ") = " << mu(x, y) << "\n";
  return 0;
}

int cmd_transform(const std::string& dir, const std::string& lpath, const std::string& fpath,
                  const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const SetFunction f = load_function(l, fpath);
  SetFunction r = dir == "mobius"     ? mobius_transform(f)
                  : dir == "zeta"     ? zeta_transform(f)
                  : dir == "comobius" ? comobius_transform(f)
                                      : mass_from_comobius(f);
  output_function(r, out);
  return 0;
}

int cmd_bel_check(const std::string& lpath, const std::string& fpath) {
  const Lattice l = load_lattice(lpath);
  const SetFunction f = load_function(l, fpath);
  const CapacityCheckReport r = capacity_report(f, opt.tolerance, opt.limits());
  if (opt.json) {
    emit(lio::to_json(r, l));
  } else {
    std::cout << "capacity: " << (r.is_capacity ? "true" : "false") << "\n";
    std::cout << "belief: " << (r.is_belief ? "true" : "false") << "\n";
    std::cout << "necessity: " << (r.is_necessity_hint ? "true" : "false") << "\n";
    std::cout << "max k-monotone: ";
    if (!r.monotone) std::cout << "undecided (family cap)\n";
    else if (r.monotone->total) std::cout << "total\n";
    else std::cout << r.monotone->max_k << "\n";
    if (r.failure_witness) {
      const Check& c = *r.failure_witness;
      std::cout << "failure: " << c.reason << " at " << join_names(l, c.witness);
      if (!std::isnan(c.lhs)) std::cout << " (" << num(c.lhs) << " vs " << num(c.rhs) << ")";
      std::cout << "\n";
    }
  }
  return r.is_belief ? 0 : 1;
}

int cmd_kmono(bool valuation, std::size_t k, const std::string& lpath, const std::string& fpath) {
  const Lattice l = load_lattice(lpath);
  const SetFunction f = load_function(l, fpath);
  const Check c = valuation ? check_k_valuation(f, k, opt.tolerance, opt.limits())
                            : check_k_monotone(f, k, opt.tolerance, opt.limits());
  return report_check(c, l, std::to_string(k) + (valuation ? "-valuation" : "-monotone"));
}

int cmd_conjugate(const std::string& lpath, const std::string& fpath, const std::string& npath,
                  const std::string& variant, const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const SetFunction f = load_function(l, fpath);
  const Negation n = load_or_find_negation(l, npath);
  output_function(conjugate(f, n, variant == "wedge" ? ConjugateVariant::wedge : ConjugateVariant::vee), out);
  return 0;
}

int cmd_combine(const std::string& lpath, const std::string& p1, const std::string& p2,
                const std::string& policy, const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const MassAllocation m1(load_function(l, p1)), m2(load_function(l, p2));
  const MassAllocation m = combine(m1, m2, parse_policy(policy), opt.tolerance);
  output_function(m.function(), out, true);
  return 0;
}

int cmd_decompose(const std::string& lpath, const std::string& fpath, const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const SupportWeights w = decompose(load_function(l, fpath), opt.tolerance);
  const auto j = lio::to_json(w);
  if (!out.empty()) write_file(out, j);
  if (opt.json) {
    emit(j);
  } else {
    for (auto [y, v] : w.entries()) std::cout << l.name(y) << "  " << num(v) << "\n";
  }
  return 0;
}

int cmd_recombine(const std::string& lpath, const std::string& wpath, const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const SupportWeights w = lio::weights_from_json(l, lio::read_file(wpath), wpath);
  output_function(recombine(w).function(), out, true);
  return 0;
}

int cmd_necessity(bool possibility, const std::string& lpath, const std::string& fpath) {
  const Lattice l = load_lattice(lpath);
  const SetFunction f = load_function(l, fpath);
  const Check c = possibility ? check_possibility(f, opt.tolerance) : check_necessity(f, opt.tolerance);
  const bool distributive = !distributivity_violation(l);
  if (opt.json) {
    auto j = lio::to_json(c, l);
    j["property"] = possibility ? "possibility" : "necessity";
    if (c && distributive)
      j["distribution"] = possibility ? lio::to_json(possibility_distribution(f, opt.tolerance))
                                      : lio::to_json(necessity_distribution(f, opt.tolerance));
    emit(j);
    return c ? 0 : 1;
  }
  report_check(c, l, possibility ? "possibility" : "necessity");
  if (c && distributive) {
    if (possibility) {
      const auto d = possibility_distribution(f, opt.tolerance);
      for (Element j : l.join_irreducibles()) std::cout << "  pi(" << l.name(j) << ") = " << num(d.pi.at(j)) << "\n";
    } else {
      const auto d = necessity_distribution(f, opt.tolerance);
      for (Element m : l.meet_irreducibles()) std::cout << "  nu(" << l.name(m) << ") = " << num(d.nu.at(m)) << "\n";
    }
  }
  return c ? 0 : 1;
}

int cmd_reconstruct(const std::string& lpath, const std::string& npath, const std::string& ppath,
                    const std::string& out) {
  const Lattice l = load_lattice(lpath);
  const Negation n = load_or_find_negation(l, npath);
  const PossibilityDistribution pi = lio::possibility_from_json(l, lio::read_file(ppath), ppath);
  const FocalChain fc = reconstruct_chain(l, n, pi, opt.tolerance);
  if (!out.empty()) write_file(out, lio::to_json(fc.mass.function()));
  if (opt.json) {
    emit(lio::to_json(fc));
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"step k", "x", "n(x)", "eta(n(x))", "iota_k", "chain", "mass"}};
  for (const auto& s : fc.steps)
    rows.push_back({std::to_string(s.k), l.name(s.x), l.name(s.negated), join_names(l, s.eta_negated, ","),
                    l.name(s.iota), l.name(s.chain_element), num(s.mass)});
  std::vector<std::size_t> w(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      std::cout << r[i] << (i + 1 < r.size() ? std::string(w[i] - r[i].size() + 2, ' ') : "");
    std::cout << "\n";
  }
  return 0;
}

int cmd_negations(const std::string& path, bool all, std::size_t limit) {
  const Lattice l = load_lattice(path);
  const auto ns = find_negations(l, all ? static_cast<std::size_t>(-1) : limit);
  if (opt.json) {
    emit(lio::to_json(ns));
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) {
      std::cout << "negation " << i + 1 << (is_involutive(ns[i]) ? " (involutive)" : "") << ":";
      for (Element x = 0; x < l.size(); ++x) std::cout << " " << l.name(x) << "->" << l.name(ns[i](x));
      std::cout << "\n";
    }
    if (ns.empty()) std::cout << "no negation: the lattice is not autodual\n";
  }
  return ns.empty() ? 1 : 0;
}

int cmd_chains(const std::string& path) {
  const Lattice l = load_lattice(path);
  const auto chains = maximal_chains(l, opt.limits());
  if (opt.json) emit(lio::chains_json(l, chains));
  else
    for (const auto& c : chains) std::cout << join_names(l, c, " < ") << "\n";
  return 0;
}

int cmd_dot(const std::string& path) {
  const Poset p = load_poset(path);
  try {
    std::cout << lio::to_dot(lattice_from_poset(p));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotALattice && e.kind() != ErrorKind::EmptyStructure) throw;
    std::cout << lio::to_dot(p);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief functions and possibility measures on finite lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--tolerance", opt.tolerance, "Comparison slack")->check(CLI::NonNegativeNumber);
  app.add_option("--limit", opt.limit, "Cap on enumerated families and chains")->check(CLI::PositiveNumber);

  int rc = 0;
  std::string lattice, file, file2, negation, pi, out, policy = "raw", variant = "vee", direction;
  std::size_t k = 2, neg_limit = 1;
  bool all = false;

  auto lattice_opt = [&](CLI::App* c) {
    c->add_option("-L,--lattice", lattice, "Lattice file")->required()->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--output", out, "Write the result as JSON"); };

  auto* check = app.add_subcommand("check", "Structural profile of a lattice file");
  check->add_option("lattice", lattice)->required();
  check->callback([&] { rc = cmd_check(lattice); });

  auto* birk = app.add_subcommand("birkhoff", "Lattice of downsets of a poset");
  birk->add_option("poset", file)->required();
  out_opt(birk);
  birk->callback([&] { rc = cmd_birkhoff(file, out); });

  auto* mob = app.add_subcommand("mobius", "Möbius function of a lattice");
  mob->add_option("lattice", lattice)->required();
  mob->callback([&] { rc = cmd_mobius(lattice); });

  auto* tr = app.add_subcommand("transform", "Möbius, zeta and co-Möbius transforms");
  tr->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"mobius", "zeta", "comobius", "inverse-comobius"}));
  tr->add_option("function", file)->required();
  lattice_opt(tr);
  out_opt(tr);
  tr->callback([&] { rc = cmd_transform(direction, lattice, file, out); });

  auto* bel = app.add_subcommand("bel", "Belief, necessity and possibility functions");
  bel->require_subcommand(1);

  auto* bcheck = bel->add_subcommand("check", "Capacity / belief report");
  bcheck->add_option("function", file)->required();
  lattice_opt(bcheck);
  bcheck->callback([&] { rc = cmd_bel_check(lattice, file); });

  for (bool val : {false, true}) {
    auto* c = bel->add_subcommand(val ? "valuation" : "kmono", val ? "k-valuation check" : "k-monotonicity check");
    c->add_option("k", k)->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    c->add_option("function", file)->required();
    lattice_opt(c);
    c->callback([&, val] { rc = cmd_kmono(val, k, lattice, file); });
  }

  auto* conj = bel->add_subcommand("conjugate", "Conjugate with respect to a negation");
  conj->add_option("function", file)->required();
  conj->add_option("-n,--negation", negation, "Negation file (default: first one found)");
  conj->add_option("--variant", variant)->check(CLI::IsMember({"vee", "wedge"}));
  lattice_opt(conj);
  out_opt(conj);
  conj->callback([&] { rc = cmd_conjugate(lattice, file, negation, variant, out); });

  auto* comb = bel->add_subcommand("combine", "Dempster combination of two masses");
  comb->add_option("m1", file)->required();
  comb->add_option("m2", file2)->required();
  comb->add_option("--policy", policy)->check(CLI::IsMember({"raw", "zero-bottom", "normalize"}));
  lattice_opt(comb);
  out_opt(comb);
  comb->callback([&] { rc = cmd_combine(lattice, file, file2, policy, out); });

  auto* dec = bel->add_subcommand("decompose", "Weights of simple support components");
  dec->add_option("belief", file)->required();
  lattice_opt(dec);
  out_opt(dec);
  dec->callback([&] { rc = cmd_decompose(lattice, file, out); });

  auto* rec = bel->add_subcommand("recombine", "Mass of the combined simple supports");
  rec->add_option("weights", file)->required();
  lattice_opt(rec);
  out_opt(rec);
  rec->callback([&] { rc = cmd_recombine(lattice, file, out); });

  for (bool poss : {false, true}) {
    auto* c = bel->add_subcommand(poss ? "possibility" : "necessity",
                                  poss ? "Possibility check and distribution" : "Necessity check and distribution");
    c->add_option("function", file)->required();
    lattice_opt(c);
    c->callback([&, poss] { rc = cmd_necessity(poss, lattice, file); });
  }

  auto reconstruct = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("reconstruct", "Focal chain of a possibility distribution");
    lattice_opt(c);
    c->add_option("-n,--negation", negation, "Negation file (default: first one found)");
    c->add_option("--pi", pi, "Possibility distribution file")->required();
    out_opt(c);
    c->callback([&] { rc = cmd_reconstruct(lattice, negation, pi, out); });
  };
  reconstruct(bel);
  auto* poss = app.add_subcommand("poss", "Possibility tools");
  poss->require_subcommand(1);
  reconstruct(poss);

  auto* neg = app.add_subcommand("negations", "Enumerate ∨-negations");
  neg->add_option("lattice", lattice)->required();
  auto* all_flag = neg->add_flag("--all", all, "All negations");
  neg->add_option("--limit", neg_limit, "At most K negations")->excludes(all_flag)->check(CLI::PositiveNumber);
  neg->callback([&] { rc = cmd_negations(lattice, all, neg_limit); });

  auto* ch = app.add_subcommand("chains", "Maximal chains");
  ch->add_option("lattice", lattice)->required();
  ch->callback([&] { rc = cmd_chains(lattice); });

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("lattice", lattice)->required();
  dot->callback([&] { rc = cmd_dot(lattice); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
