#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icx/complex.hpp"
#include "icx/perm_group.hpp"
#include "icx/subgroup_system.hpp"

namespace icx {

// The coset complex of a verified system together with the bookkeeping
// needed to act on it: one canonical coset representative per proper face
// and the induced permutation action of the group on face ids.
class BuiltComplex {
public:
  const IncidenceComplex& complex() const { return complex_; }
  const SubgroupSystem& system() const { return system_; }
  const Flag& base_flag() const { return base_flag_; }

  // Face of rank i whose coset contains rep.
  int face_of(int rank_i, const Perm& rep) const;
  const Perm& representative(int face_id) const;

  // Face bijection induced by right multiplication with g.
  std::vector<int> face_map(const Perm& g) const;
  // face_map of every generator of the group.
  std::vector<std::vector<int>> action_generators() const;

private:
  friend BuiltComplex build_complex(const SubgroupSystem&, bool);
  IncidenceComplex complex_;
  SubgroupSystem system_;
  std::vector<Perm> reps_; // per face id; identity for the improper faces
  Flag base_flag_;
  Perm canonical_in_coset(int rank_i, const Perm& rep) const;
};

// Builds the coset complex: i-faces are the right cosets of <R_j : j != i>,
// two cosets are incident iff they intersect. Requires the system to be a
// verified generalized string C-group. With cross_check set, every incidence
// is evaluated by both the coset-intersection rule and the product-membership
// rule; a disagreement raises internal-inconsistency.
BuiltComplex build_complex(const SubgroupSystem& sys, bool cross_check = false);

// Incidence of the cosets stabilizer(i)*phi <= stabilizer(j)*psi, evaluated
// by two independent routes that must agree:
//   (membership)  phi*psi^-1 in upper(i+1)*lower(j-1)
//   (intersection) the cosets meet
bool incidence_test(const SubgroupSystem& sys, int i, const Perm& phi, int j, const Perm& psi);

// Distinguished generating subgroups of a flag-transitive group of face
// bijections: R_i is the stabilizer of the base flag minus its rank-i face,
// realized as permutations of the face-id space.
SubgroupSystem derive_system(const IncidenceComplex& k,
                             const std::vector<std::vector<int>>& gens, const Flag& base);

struct ReconstructionReport {
  bool isomorphic = false;
  bool canonical_map_used = false; // F_i*g -> coset face succeeded directly
  std::vector<int> map;            // k-face id -> rebuilt-face id (when isomorphic)
};

// Rebuilds the complex from a system derived on k's faces and exhibits an
// isomorphism, preferring the canonical orbit map.
ReconstructionReport verify_reconstruction(const IncidenceComplex& k, const SubgroupSystem& sys,
                                           const Flag& base);

// System of the section between the base i-face and base j-face:
// <R_{i+1},...,R_{j-1}> with the flag stabilizer kept, re-indexed to rank
// j-i-1.
SubgroupSystem section_group(const SubgroupSystem& sys, int i, int j);

struct SectionTheoremReport {
  bool holds = true;
  std::vector<std::string> failures;
};

// All base sections of the coset complex match the complexes of their
// section groups, and every open rank-2 interval has |R_i : R_-1| faces.
SectionTheoremReport verify_section_theorem(const SubgroupSystem& sys);

// Kernel of the action of the group on the coset complex: core of the flag
// stabilizer.
PermGroup action_kernel(const SubgroupSystem& sys);

} // namespace icx
