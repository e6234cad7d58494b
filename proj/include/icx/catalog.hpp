#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icx/subgroup_system.hpp"

namespace icx {

struct CatalogEntry {
  std::string name;
  std::vector<int> schlafli; // empty when none
  SubgroupSystem system;
  std::vector<int> expected_f_vector;
  std::uint64_t expected_flags = 0;
  std::vector<std::uint64_t> expected_k;
  bool polytope = false;
  bool lattice = false;
  bool positive = true; // negative entries are expected to fail verification
};

// Finite universal regular polytopes as concrete permutation groups.
// Supported: {p} for 2 <= p <= 12, {3,3}, {3,4}, {4,3}, {3,5}, {5,3},
// {3,3,3}, {4,3,3}, {3,3,4}.
SubgroupSystem universal_polytope(const std::vector<int>& symbol);

// Complexes with k_i > 2 or nontrivial flag stabilizers, plus one negative
// entry that fails the intersection property.
std::vector<CatalogEntry> nonpolytope_examples();

// Full catalog: selected universal polytopes, the non-polytopal entries and a
// non-lattice polytope. Expected counts of every positive entry are checked
// against the built complex the first time the catalog is loaded.
const std::vector<CatalogEntry>& all_entries();

const CatalogEntry* find_entry(const std::string& name);

} // namespace icx
