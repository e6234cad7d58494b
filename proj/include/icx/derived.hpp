#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icx/complex.hpp"
#include "icx/perm_group.hpp"
#include "icx/subgroup_system.hpp"

namespace icx {

// System of the (n-1)-skeleton of a polytope system of rank m: faces of rank
// below n are kept, everything else collapses into the top face. The group
// stays the same; it may act on the skeleton with a kernel.
SubgroupSystem skeleton_system(const SubgroupSystem& polytope_sys, int n);

struct SkeletonKernelReport {
  bool holds = false;
  bool kernel_is_flag_stabilizer = false;
  std::uint64_t facet_stabilizer_order = 0; // |<R_j : j != n-1>|
  std::uint64_t kernel_order = 0;
  std::uint64_t quotient_order = 0;
  std::uint64_t facet_flag_count = 0;
  bool quotient_is_string_cgroup = false;
  std::string detail;
};

// For a polytope-complex system: the action of the base-facet stabilizer on
// the base facet section has kernel exactly R_-1, and the induced group is
// the facet's (string C-) automorphism group.
SkeletonKernelReport verify_skeleton_kernel(const SubgroupSystem& skel_sys);

// Candidate extension: a base system of rank n, a rank-(n+1) subgroup family
// R'_-1..R'_{n+1} over lambda, and a homomorphism pi from <R'_j : j <= n-1>
// onto the base group, given on generators.
struct ExtensionData {
  SubgroupSystem base;
  PermGroup lambda;
  std::vector<PermGroup> candidate_subgroups; // length base.rank() + 3
  std::vector<std::pair<Perm, Perm>> pi;      // generator -> image
};

struct ExtensionReport {
  struct Item {
    std::string name;
    bool holds = false;
    std::string witness;
  };
  bool ok = false;
  std::vector<Item> conditions;
  std::vector<int> extension_f_vector; // of the built complex, when reached
  std::uint64_t facets_checked = 0;

  const Item* find(const std::string& name) const;
};

// Checks the extension hypotheses: (a) structure, (b) commutation of distant
// candidate subgroups, (c) pi is a well-defined surjection with
// pi^-1(R_i) = R'_i and pi^-1(upper_i of base) = upper-i ∩ lower part.
// On success builds the candidate complex and certifies that every facet is
// isomorphic to the base complex. With check_lattice, also evaluates the
// quantified product-set condition for the lattice property and the poset
// lattice test on the built complex.
ExtensionReport verify_extension(const ExtensionData& data, bool check_lattice);

int facet_count(const IncidenceComplex& k);

} // namespace icx
