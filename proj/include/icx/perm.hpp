#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace icx {

// A permutation of {0,...,degree-1}, stored as its image sequence.
// Products act left-to-right: (a*b) applies a first, then b, matching the
// right action of groups on faces and cosets used throughout.
class Perm {
public:
  Perm() = default; // degree-0 placeholder

  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  // Parses cycle notation like "(0 1)(2 3)"; whitespace separates points,
  // "()" or an empty string is the identity. Unlisted points are fixed.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

Perm compose(const Perm& a, const Perm& b); // apply a, then b
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }
Perm inverse(const Perm& p);
Perm conjugate(const Perm& p, const Perm& by); // by^-1 * p * by
int perm_order(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

} // namespace icx
