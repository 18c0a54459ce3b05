#ifndef LATBEL_PROFILE_HPP
#define LATBEL_PROFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latbel/duality.hpp"
#include "latbel/lattice.hpp"

namespace latbel {

/// Structural flags of a lattice. `witnesses` holds a counterexample (as
/// element names) for every flag that is false, keyed by flag name.
struct StructureProfile {
  bool is_lattice = false;
  bool is_linear = false;
  bool is_ranked = false;
  bool is_modular = false;
  bool is_lower_semimodular = false;
  bool is_upper_semimodular = false;
  bool is_distributive = false;
  bool is_lower_locally_distributive = false;
  bool is_upper_locally_distributive = false;
  bool is_complemented = false;
  bool is_atomistic = false;
  bool is_autodual = false;
  std::map<std::string, std::vector<std::string>> witnesses;

  /// (flag name, value) in a fixed reporting order.
  std::vector<std::pair<std::string, bool>> flags() const {
    return {{"lattice", is_lattice},
            {"linear", is_linear},
            {"ranked", is_ranked},
            {"modular", is_modular},
            {"lower_semimodular", is_lower_semimodular},
            {"upper_semimodular", is_upper_semimodular},
            {"distributive", is_distributive},
            {"lower_locally_distributive", is_lower_locally_distributive},
            {"upper_locally_distributive", is_upper_locally_distributive},
            {"complemented", is_complemented},
            {"atomistic", is_atomistic},
            {"autodual", is_autodual}};
  }
};

inline StructureProfile profile(const Lattice& l) {
  StructureProfile p;
  auto names = [&](const Witness& w) {
    std::vector<std::string> out;
    for (Element e : w) out.push_back(l.name(e));
    return out;
  };
  auto decide = [&](bool& flag, const char* key, const std::optional<Witness>& w) {
    flag = !w.has_value();
    if (w) p.witnesses[key] = names(*w);
  };

  p.is_lattice = true;
  decide(p.is_linear, "linear", linearity_violation(l));
  decide(p.is_ranked, "ranked", rankedness_violation(l));
  const auto lower = lower_semimodularity_violation(l);
  const auto upper = upper_semimodularity_violation(l);
  decide(p.is_lower_semimodular, "lower_semimodular", lower);
  decide(p.is_upper_semimodular, "upper_semimodular", upper);
  decide(p.is_modular, "modular", lower ? lower : upper);
  decide(p.is_distributive, "distributive", distributivity_violation(l));
  const auto m3 = find_m3_sublattice(l);
  decide(p.is_lower_locally_distributive, "lower_locally_distributive", lower ? lower : m3);
  decide(p.is_upper_locally_distributive, "upper_locally_distributive", upper ? upper : m3);
  decide(p.is_complemented, "complemented", complementedness_violation(l));
  decide(p.is_atomistic, "atomistic", atomisticity_violation(l));
  p.is_autodual = is_autodual(l);
  if (!p.is_autodual) p.witnesses["autodual"] = {};
  return p;
}

/// Profile of a poset that may not be a lattice; in that case only
/// is_lattice is reported (false) with the offending pair and reason.
inline StructureProfile profile(const Poset& poset) {
  try {
    return profile(lattice_from_poset(poset));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotALattice && e.kind() != ErrorKind::EmptyStructure) throw;
    StructureProfile p;
    p.witnesses["lattice"] = e.names();
    return p;
  }
}

}  // namespace latbel

#endif  // LATBEL_PROFILE_HPP
