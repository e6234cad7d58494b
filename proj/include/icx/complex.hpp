#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icx {

struct Face {
  int id = -1;
  int rank = -1;
  std::string label;
};

// One face per rank -1..n, indexed by rank+1.
using Flag = std::vector<int>;

// A totally ordered face set; ranks are pairwise distinct.
struct Chain {
  std::vector<int> faces; // ascending rank
};

// A ranked poset with a least and a greatest face, built from its covering
// relation. The full order is materialized as reachability over the Hasse
// edges. Immutable after construction.
class IncidenceComplex {
public:
  static IncidenceComplex from_covers(int rank, std::vector<Face> faces,
                                      std::vector<std::pair<int, int>> covers);

  int rank() const { return rank_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const Face& face(int id) const;
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<int>& faces_of_rank(int r) const; // r in [-1, rank]
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool proper(int id) const { return id != bottom_ && id != top_; }

  const std::vector<int>& upper_covers(int id) const;
  const std::vector<int>& lower_covers(int id) const;
  bool leq(int a, int b) const;
  bool incident(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Faces strictly between a and b.
  std::vector<int> open_interval(int a, int b) const;

  // All maximal chains hitting every rank, sorted lexicographically.
  std::vector<Flag> flags() const;
  std::vector<Flag> adjacent_flags(const Flag& flag, int i) const;

  // Normalizes a face set into a chain (sorted by rank); rejects sets that
  // are not totally ordered or repeat a rank.
  Chain make_chain(std::vector<int> faces) const;
  // Completes a chain to a flag with one face per rank, or nullopt if no
  // completion exists.
  std::optional<Flag> extend_to_flag(const Chain& chain) const;

  std::vector<int> f_vector() const; // proper ranks 0..n-1

  // {h : a <= h <= b} re-ranked to an incidence complex of rank
  // rank(b) - rank(a) - 1.
  IncidenceComplex section(int a, int b) const;

private:
  int rank_ = -1;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<int>> by_rank_; // index rank+1
  std::vector<std::vector<std::uint64_t>> reach_; // reach_[a] bit b set iff a <= b
  int bottom_ = -1, top_ = -1;

  void set_reach(int a, int b);
};

struct Verdict {
  bool holds = true;
  std::string witness; // empty when the check holds

  explicit operator bool() const { return holds; }
};

// Every chain extends to a flag with one face per rank.
Verdict check_I2(const IncidenceComplex& k);
// Every incident (i-1,i+1)-pair has at least two faces between.
Verdict check_I4(const IncidenceComplex& k);
// ... exactly two (the polytope case).
Verdict check_diamond(const IncidenceComplex& k);

Verdict check_connected(const IncidenceComplex& k);
Verdict check_strongly_connected(const IncidenceComplex& k);
Verdict check_flag_connected(const IncidenceComplex& k);
Verdict check_strongly_flag_connected(const IncidenceComplex& k);

struct LatticeVerdict {
  bool holds = true;
  std::optional<std::pair<int, int>> witness; // face pair without unique join/meet
  std::string which;                          // "join" or "meet"
};
LatticeVerdict is_lattice(const IncidenceComplex& k);

// Rank- and order-preserving bijection, or nullopt. Deterministic: candidates
// are tried by ascending id after an invariant refinement pass.
std::optional<std::vector<int>> are_isomorphic(const IncidenceComplex& k,
                                               const IncidenceComplex& l);

struct ActionReport {
  bool is_automorphism_set = true;
  bool flag_transitive = false;
  bool simply_flag_transitive = false;
  std::uint64_t group_order = 0;
  std::uint64_t flag_stabilizer_order = 0;
  std::uint64_t flag_count = 0;
  std::uint64_t flag_orbit_size = 0;
  std::string violation;
};

// gens are face-id bijections; they must preserve rank and the order.
ActionReport verify_group_action(const IncidenceComplex& k,
                                 const std::vector<std::vector<int>>& gens);

} // namespace icx
