#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "icx/perm.hpp"

namespace icx {

namespace detail {
class StabChain;
struct GroupData;
}

// A finite permutation group given by generators. Order and membership come
// from a stabilizer chain; the full element list is enumerated on demand and
// cached. Immutable after construction; copies share state.
class PermGroup {
public:
  PermGroup() = default; // degree-0 placeholder

  static PermGroup trivial(int degree);
  static PermGroup generated(int degree, std::vector<Perm> gens);

  int degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& p) const;

  // All elements, sorted lexicographically by image sequence (identity first).
  const std::vector<Perm>& elements() const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& g) const;

  bool valid() const { return data_ != nullptr; }

private:
  std::shared_ptr<const detail::GroupData> data_;
};

// Right-coset decomposition of G into cosets H*g, with one canonical
// representative per coset: the lexicographically least element of the coset.
struct CosetDecomposition {
  PermGroup parent;
  PermGroup subgroup;
  std::vector<Perm> representatives; // sorted
  std::uint64_t index = 0;

  // Canonical representative of the coset subgroup*g.
  Perm representative_of(const Perm& g) const;
  // Position of that representative in `representatives`.
  std::size_t coset_index_of(const Perm& g) const;
};

CosetDecomposition right_cosets(const PermGroup& g, const PermGroup& h);

PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b);

// {a*b : a in A, b in B} as a sorted element list.
std::vector<Perm> product_set(const PermGroup& a, const PermGroup& b);
bool product_sets_equal(const PermGroup& a, const PermGroup& b);

// Largest normal subgroup of g contained in h (the kernel of the action of g
// on the right cosets of h).
PermGroup core(const PermGroup& g, const PermGroup& h);

PermGroup conjugate_group(const PermGroup& h, const Perm& by);

// Group generated by the union of the generators of a and b.
PermGroup join_groups(const PermGroup& a, const PermGroup& b);

// Sorted product of two sorted element lists (both inside a common group).
std::vector<Perm> product_of_sets(const std::vector<Perm>& a, const std::vector<Perm>& b);

} // namespace icx
