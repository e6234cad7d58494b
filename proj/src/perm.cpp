#include "icx/perm.hpp"

#include <algorithm>
#include <sstream>

#include "icx/error.hpp"

namespace icx {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      raise(ErrorKind::InvalidDegree, "image sequence is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) raise(ErrorKind::InvalidDegree, "degree must be at least 1");
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  if (degree < 1) raise(ErrorKind::InvalidDegree, "degree must be at least 1");
  Perm p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      raise(ErrorKind::ParseError, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      bool neg = false;
      if (text[pos] == '-') { neg = true; ++pos; }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        raise(ErrorKind::ParseError, "expected point in cycle notation: " + text);
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (neg) value = -value;
      if (value < 0 || value >= degree)
        raise(ErrorKind::ParseError,
              "point " + std::to_string(value) + " out of range for degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(value)])
        raise(ErrorKind::ParseError, "repeated point " + std::to_string(value));
      used[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= text.size()) raise(ErrorKind::ParseError, "unterminated cycle: " + text);
    ++pos; // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    any = true;
    out << '(' << i;
    seen[static_cast<std::size_t>(i)] = true;
    for (int j = images_[static_cast<std::size_t>(i)]; j != i; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      out << ' ' << j;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    raise(ErrorKind::DegreeMismatch, "composition of permutations of different degree");
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) img[static_cast<std::size_t>(i)] = b[a[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(p[i])] = i;
  return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& by) { return compose(compose(inverse(by), p), by); }

int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace icx
