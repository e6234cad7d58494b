#include "icx/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "icx/error.hpp"
#include "icx/limits.hpp"

namespace icx {
namespace detail {

// Deterministic Schreier-Sims. Level k holds generators fixing the base
// points of levels 0..k-1 together with the transversal of the orbit of its
// own base point. New strong generators are always inserted one level below
// the Schreier generator that produced them, which keeps the subgroup chain
// invariant intact.
class StabChain {
public:
  StabChain(int degree, const std::vector<Perm>& gens) : degree_(degree) {
    std::vector<Perm> start;
    for (const Perm& g : gens)
      if (!g.is_identity()) start.push_back(g);
    if (!start.empty()) {
      levels_.push_back(Level{});
      levels_[0].gens = std::move(start);
      levels_[0].base_point = min_moved_point(levels_[0].gens);
      schreier_sims(0);
    }
  }

  std::uint64_t order() const {
    unsigned __int128 n = 1;
    for (const Level& lv : levels_) {
      n *= lv.transversal.size();
      if (n > static_cast<unsigned __int128>(UINT64_MAX))
        raise(ErrorKind::ResourceLimit, "group order exceeds 2^64");
    }
    return static_cast<std::uint64_t>(n);
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, level] = sift(p, 0);
    (void)level;
    return residue.is_identity();
  }

  std::vector<Perm> enumerate() const {
    std::vector<Perm> result{Perm::identity(degree_)};
    for (std::size_t lv = levels_.size(); lv-- > 0;) {
      std::vector<Perm> next;
      next.reserve(result.size() * levels_[lv].transversal.size());
      for (const auto& [point, u] : levels_[lv].transversal) {
        (void)point;
        for (const Perm& h : result) next.push_back(compose(h, u));
      }
      result = std::move(next);
    }
    return result;
  }

private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal; // point -> u with base^u = point
  };

  int degree_;
  std::vector<Level> levels_;

  static int min_moved_point(const std::vector<Perm>& gens) {
    for (int i = 0;; ++i)
      for (const Perm& g : gens)
        if (g[i] != i) return i;
  }

  void compute_transversal(std::size_t level) {
    Level& lv = levels_[level];
    lv.transversal.clear();
    lv.transversal.emplace(lv.base_point, Perm::identity(degree_));
    std::vector<int> frontier{lv.base_point};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int point : frontier) {
        const Perm u = lv.transversal.at(point);
        for (const Perm& s : lv.gens) {
          int image = s[point];
          if (lv.transversal.find(image) == lv.transversal.end()) {
            lv.transversal.emplace(image, compose(u, s));
            next.push_back(image);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  // Strips g through levels from..end; returns the residue and the level at
  // which stripping stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t lv = from; lv < levels_.size(); ++lv) {
      if (g.is_identity()) return {g, lv};
      int image = g[levels_[lv].base_point];
      auto it = levels_[lv].transversal.find(image);
      if (it == levels_[lv].transversal.end()) return {g, lv};
      g = compose(g, inverse(it->second));
    }
    return {g, levels_.size()};
  }

  void schreier_sims(std::size_t level) {
    compute_transversal(level);
    // Snapshot of orbit points; gens at this level do not change below.
    std::vector<int> orbit;
    for (const auto& [point, u] : levels_[level].transversal) {
      (void)u;
      orbit.push_back(point);
    }
    for (int point : orbit) {
      const Perm u = levels_[level].transversal.at(point);
      for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
        const Perm s = levels_[level].gens[si];
        const Perm& u_next = levels_[level].transversal.at(s[point]);
        Perm schreier = compose(compose(u, s), inverse(u_next));
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), level + 1);
        (void)stop;
        if (!residue.is_identity()) {
          if (level + 1 == levels_.size()) {
            levels_.push_back(Level{});
            levels_[level + 1].base_point = min_moved_point({residue});
          }
          levels_[level + 1].gens.push_back(residue);
          schreier_sims(level + 1);
        }
      }
    }
  }
};

struct GroupData {
  int degree = 0;
  std::vector<Perm> gens;
  std::unique_ptr<StabChain> chain;
  std::uint64_t order = 1;

  mutable std::mutex elements_mutex;
  mutable std::vector<Perm> elements; // lazily filled, sorted
};

} // namespace detail

PermGroup PermGroup::trivial(int degree) { return generated(degree, {}); }

PermGroup PermGroup::generated(int degree, std::vector<Perm> gens) {
  if (degree < 1) raise(ErrorKind::InvalidDegree, "group degree must be at least 1");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      raise(ErrorKind::DegreeMismatch, "generator degree " + std::to_string(g.degree()) +
                                           " differs from group degree " + std::to_string(degree));
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->gens = std::move(gens);
  data->chain = std::make_unique<detail::StabChain>(degree, data->gens);
  data->order = data->chain->order();
  if (data->order > limits::max_group_order())
    raise(ErrorKind::ResourceLimit,
          "group order " + std::to_string(data->order) + " exceeds cap " +
              std::to_string(limits::max_group_order()));
  PermGroup g;
  g.data_ = std::move(data);
  return g;
}

int PermGroup::degree() const { return data_->degree; }

const std::vector<Perm>& PermGroup::generators() const { return data_->gens; }

std::uint64_t PermGroup::order() const { return data_->order; }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree())
    raise(ErrorKind::DegreeMismatch, "membership test across different degrees");
  return data_->chain->contains(p);
}

const std::vector<Perm>& PermGroup::elements() const {
  std::lock_guard<std::mutex> lock(data_->elements_mutex);
  if (data_->elements.empty()) {
    auto elems = data_->chain->enumerate();
    std::sort(elems.begin(), elems.end());
    if (elems.size() != data_->order)
      raise(ErrorKind::InternalInconsistency, "element enumeration disagrees with group order");
    data_->elements = std::move(elems);
  }
  return data_->elements;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree() != g.degree()) return false;
  for (const Perm& x : generators())
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const Perm& x : g.generators())
    for (const Perm& h : generators())
      if (!contains(conjugate(h, x))) return false;
  return true;
}

Perm CosetDecomposition::representative_of(const Perm& g) const {
  if (g.degree() != parent.degree())
    raise(ErrorKind::DegreeMismatch, "coset lookup across different degrees");
  Perm best = compose(subgroup.elements().front(), g);
  for (const Perm& h : subgroup.elements()) {
    Perm candidate = compose(h, g);
    if (candidate < best) best = candidate;
  }
  return best;
}

std::size_t CosetDecomposition::coset_index_of(const Perm& g) const {
  Perm rep = representative_of(g);
  auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
  if (it == representatives.end() || *it != rep)
    raise(ErrorKind::InternalInconsistency, "element sifts to no coset representative");
  return static_cast<std::size_t>(it - representatives.begin());
}

CosetDecomposition right_cosets(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree())
    raise(ErrorKind::DegreeMismatch, "coset decomposition across different degrees");
  if (!h.is_subgroup_of(g))
    raise(ErrorKind::NotSubgroup, "coset decomposition requires a subgroup");

  CosetDecomposition out;
  out.parent = g;
  out.subgroup = h;
  out.index = g.order() / h.order();

  const auto& all = g.elements();
  const auto& hs = h.elements();
  std::set<Perm> visited;
  for (const Perm& x : all) {
    if (visited.count(x)) continue;
    // x is lexicographically least in its coset: every earlier member would
    // already have marked the coset.
    out.representatives.push_back(x);
    for (const Perm& e : hs) visited.insert(compose(e, x));
  }
  if (out.representatives.size() != out.index)
    raise(ErrorKind::InternalInconsistency, "coset count disagrees with index");
  return out;
}

PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    raise(ErrorKind::DegreeMismatch, "intersection across different degrees");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Perm> common;
  for (const Perm& x : small.elements())
    if (large.contains(x)) common.push_back(x);
  return PermGroup::generated(a.degree(), std::move(common));
}

std::vector<Perm> product_set(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    raise(ErrorKind::DegreeMismatch, "product set across different degrees");
  if (a.order() * b.order() > limits::max_product_pairs())
    raise(ErrorKind::ResourceLimit, "product set exceeds pair cap");
  return product_of_sets(a.elements(), b.elements());
}

std::vector<Perm> product_of_sets(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  if (static_cast<std::uint64_t>(a.size()) * b.size() > limits::max_product_pairs())
    raise(ErrorKind::ResourceLimit, "product set exceeds pair cap");
  std::set<Perm> out;
  for (const Perm& x : a)
    for (const Perm& y : b) out.insert(compose(x, y));
  return std::vector<Perm>(out.begin(), out.end());
}

bool product_sets_equal(const PermGroup& a, const PermGroup& b) {
  return product_set(a, b) == product_set(b, a);
}

PermGroup conjugate_group(const PermGroup& h, const Perm& by) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& g : h.generators()) gens.push_back(conjugate(g, by));
  return PermGroup::generated(h.degree(), std::move(gens));
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    raise(ErrorKind::NotSubgroup, "core requires a subgroup");
  CosetDecomposition cosets = right_cosets(g, h);
  std::vector<Perm> current = h.elements();
  for (const Perm& rep : cosets.representatives) {
    if (current.size() == 1) break;
    if (rep.is_identity()) continue;
    std::vector<Perm> kept;
    for (const Perm& x : current) {
      // x in rep^-1 H rep  <=>  rep x rep^-1 in H
      if (h.contains(compose(compose(rep, x), inverse(rep)))) kept.push_back(x);
    }
    current = std::move(kept);
  }
  return PermGroup::generated(g.degree(), std::move(current));
}

PermGroup join_groups(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    raise(ErrorKind::DegreeMismatch, "join across different degrees");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup::generated(a.degree(), std::move(gens));
}

} // namespace icx
