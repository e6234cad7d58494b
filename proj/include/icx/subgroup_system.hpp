#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icx/perm_group.hpp"

namespace icx {

// A subset of the index range N = {-1, 0, ..., n} attached to a system of
// rank n. Stored as a bitmask with bit (i+1) standing for index i.
class IndexSet {
public:
  explicit IndexSet(int rank) : rank_(rank) {}
  IndexSet(int rank, std::initializer_list<int> values);

  static IndexSet full(int rank);
  static IndexSet interval(int rank, int lo, int hi); // {lo,...,hi}, empty if lo > hi

  int rank() const { return rank_; }
  bool contains(int i) const;
  void insert(int i);
  void erase(int i);
  int size() const;
  bool empty() const { return bits_ == 0; }

  IndexSet complement() const;                // N \ I
  IndexSet intersect(const IndexSet& o) const;

  std::vector<int> values() const; // ascending
  std::string to_string() const;   // "{0,1}"
  std::uint32_t bits() const { return bits_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  int rank_;
  std::uint32_t bits_ = 0;
  void check(int i) const;
};

// A group together with distinguished generating subgroups R_-1,...,R_n,
// where R_-1 = R_n is a proper subgroup of every other R_i and the R_i for
// 0 <= i <= n-1 generate the whole group. Immutable; the distinguished
// subgroups <R_i : i in I> are cached per index set.
class SubgroupSystem {
public:
  // subgroups has length n+2 and lists R_-1, R_0, ..., R_n in order.
  static SubgroupSystem create(PermGroup gamma, std::vector<PermGroup> subgroups);

  int rank() const;
  int degree() const;
  const PermGroup& gamma() const;
  const PermGroup& r(int i) const; // i in [-1, n]

  // <R_i : i in I>, with the empty set mapping to R_-1.
  const PermGroup& distinguished(const IndexSet& index_set) const;

  const PermGroup& stabilizer_of_rank(int i) const; // <R_j : j != i>
  const PermGroup& lower(int i) const;              // <R_j : j <= i>, R_-1 for i < -1
  const PermGroup& upper(int i) const;              // <R_j : j >= i>, R_-1 for i > n

  bool valid() const { return data_ != nullptr; }

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

struct IntersectionReport {
  bool holds = true;
  std::optional<std::pair<IndexSet, IndexSet>> witness;
  bool sampled = false; // true when rank exceeded the exhaustive cap
};

struct StringConditionReport {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};

struct GscgReport {
  bool holds = true;
  IntersectionReport intersection;
  StringConditionReport string_condition;
};

struct LatticeConditionReport {
  bool holds = true;
  std::optional<int> witness; // first i with R_i R_{i+1} ∩ R_{i+1} R_i != R_i ∪ R_{i+1}
};

struct PrimeBoundReport {
  bool holds = true;
  std::uint64_t bound = 0; // max(k_i - 1)
  std::optional<std::uint64_t> offending_prime;
};

// Verifies Gamma_I ∩ Gamma_J = Gamma_{I∩J} over all I,J ⊆ {0..n-1}. Subset
// pairs are scanned from largest to smallest so a failure witness names the
// outermost failing pair.
IntersectionReport check_intersection_property(const SubgroupSystem& sys);

// R_i R_j = R_j R_i as element sets for all -1 <= i < j-1 <= n-1.
StringConditionReport check_string_condition(const SubgroupSystem& sys);

GscgReport is_generalized_string_cgroup(const SubgroupSystem& sys);

// The polytope case: trivial flag stabilizer, involutory generators, string
// relations, intersection property.
bool is_string_cgroup(const SubgroupSystem& sys);

// k_i = |R_i : R_-1|.
std::uint64_t compute_k(const SubgroupSystem& sys, int i);
std::vector<std::uint64_t> k_vector(const SubgroupSystem& sys);

// Necessary condition for the complex to be a lattice:
// R_i R_{i+1} ∩ R_{i+1} R_i = R_i ∪ R_{i+1} for i = 0..n-2.
LatticeConditionReport lattice_necessary_condition(const SubgroupSystem& sys);

// Every prime dividing |R_-1| is at most max(k_i - 1).
PrimeBoundReport flag_stabilizer_prime_bound(const SubgroupSystem& sys);

} // namespace icx
