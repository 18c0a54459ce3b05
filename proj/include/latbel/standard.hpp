#ifndef LATBEL_STANDARD_HPP
#define LATBEL_STANDARD_HPP

#include <string>
#include <utility>
#include <vector>

#include "latbel/lattice.hpp"

namespace latbel {

/// Chain 0 < 1 < … < length.
inline Lattice chain_lattice(std::size_t length) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i <= length; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return lattice_from_poset(build_poset(names, covers));
}

/// Antichain on the given names.
inline Poset antichain(const std::vector<std::string>& names) { return build_poset(names, {}); }

/// Subsets of {1..k}, named "{}", "{1}", "{1,2}", … ordered by size.
inline DownsetLattice boolean_lattice(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back(std::to_string(i));
  return downset_lattice(antichain(names));
}

inline Lattice m3_lattice() {
  return lattice_from_poset(build_poset(
      {"bot", "a", "b", "c", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}}));
}

/// bot < x < y < top, bot < z < top.
inline Lattice n5_lattice() {
  return lattice_from_poset(build_poset(
      {"bot", "x", "y", "z", "top"},
      {{"bot", "x"}, {"x", "y"}, {"y", "top"}, {"bot", "z"}, {"z", "top"}}));
}

}  // namespace latbel

#endif  // LATBEL_STANDARD_HPP
