#pragma once

// Test-only reference implementations, independent of the stabilizer-chain
// and coset machinery they check.

#include <algorithm>
#include <set>
#include <vector>

#include "icx/perm.hpp"

namespace icx::oracle {

// Breadth-first closure of a generating set.
inline std::vector<Perm> closure(int degree, const std::vector<Perm>& gens,
                                 std::size_t cap = 1'000'000) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier) {
      for (const Perm& s : gens) {
        Perm h = compose(g, s);
        if (seen.insert(h).second) {
          next.push_back(h);
          if (seen.size() > cap) throw std::runtime_error("closure cap");
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

// Right cosets H\G by brute enumeration; returns the lexicographically least
// member of each coset, sorted.
inline std::vector<Perm> coset_reps(const std::vector<Perm>& group_elems,
                                    const std::vector<Perm>& subgroup_elems) {
  std::set<Perm> remaining(group_elems.begin(), group_elems.end());
  std::vector<Perm> reps;
  while (!remaining.empty()) {
    Perm least = *remaining.begin();
    reps.push_back(least);
    for (const Perm& h : subgroup_elems) remaining.erase(compose(h, least));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

inline std::vector<Perm> intersect_sorted(std::vector<Perm> a, std::vector<Perm> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Perm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Perm> product(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  std::set<Perm> out;
  for (const Perm& x : a)
    for (const Perm& y : b) out.insert(compose(x, y));
  return std::vector<Perm>(out.begin(), out.end());
}

} // namespace icx::oracle
