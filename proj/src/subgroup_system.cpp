#include "icx/subgroup_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "icx/error.hpp"
#include "icx/limits.hpp"

namespace icx {

IndexSet::IndexSet(int rank, std::initializer_list<int> values) : rank_(rank) {
  for (int v : values) insert(v);
}

IndexSet IndexSet::full(int rank) {
  IndexSet s(rank);
  for (int i = -1; i <= rank; ++i) s.insert(i);
  return s;
}

IndexSet IndexSet::interval(int rank, int lo, int hi) {
  IndexSet s(rank);
  for (int i = std::max(lo, -1); i <= std::min(hi, rank); ++i) s.insert(i);
  return s;
}

void IndexSet::check(int i) const {
  if (i < -1 || i > rank_)
    raise(ErrorKind::InvalidInput,
          "index " + std::to_string(i) + " outside {-1,...," + std::to_string(rank_) + "}");
}

bool IndexSet::contains(int i) const {
  check(i);
  return (bits_ >> (i + 1)) & 1u;
}

void IndexSet::insert(int i) {
  check(i);
  bits_ |= (1u << (i + 1));
}

void IndexSet::erase(int i) {
  check(i);
  bits_ &= ~(1u << (i + 1));
}

int IndexSet::size() const { return __builtin_popcount(bits_); }

IndexSet IndexSet::complement() const {
  IndexSet s(rank_);
  s.bits_ = ~bits_ & ((1u << (rank_ + 2)) - 1u);
  return s;
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  IndexSet s(rank_);
  s.bits_ = bits_ & o.bits_;
  return s;
}

std::vector<int> IndexSet::values() const {
  std::vector<int> out;
  for (int i = -1; i <= rank_; ++i)
    if ((bits_ >> (i + 1)) & 1u) out.push_back(i);
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : values()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

struct SubgroupSystem::Data {
  int rank = 0;
  PermGroup gamma;
  std::vector<PermGroup> subgroups; // index 0 <-> R_-1

  mutable std::mutex cache_mutex;
  mutable std::map<std::uint32_t, PermGroup> cache;
};

SubgroupSystem SubgroupSystem::create(PermGroup gamma, std::vector<PermGroup> subgroups) {
  if (subgroups.size() < 3)
    raise(ErrorKind::InvalidSystem, "rank: need subgroups R_-1,...,R_n with n >= 1");
  const int n = static_cast<int>(subgroups.size()) - 2;
  for (const PermGroup& r : subgroups) {
    if (!r.valid()) raise(ErrorKind::InvalidSystem, "missing subgroup");
    if (r.degree() != gamma.degree())
      raise(ErrorKind::InvalidSystem, "degree: subgroup degree differs from group degree");
    if (!r.is_subgroup_of(gamma))
      raise(ErrorKind::InvalidSystem, "containment: R_i is not a subgroup of the group");
  }
  const PermGroup& flag_stab = subgroups.front();
  if (!flag_stab.same_group(subgroups.back()))
    raise(ErrorKind::InvalidSystem, "improper-subgroups: R_-1 != R_n");
  for (int i = 0; i <= n - 1; ++i) {
    const PermGroup& ri = subgroups[static_cast<std::size_t>(i) + 1];
    if (!flag_stab.is_subgroup_of(ri) || flag_stab.order() == ri.order())
      raise(ErrorKind::InvalidSystem,
            "proper-containment: R_-1 is not a proper subgroup of R_" + std::to_string(i));
  }
  std::vector<Perm> gens;
  for (int i = 0; i <= n - 1; ++i) {
    const auto& g = subgroups[static_cast<std::size_t>(i) + 1].generators();
    gens.insert(gens.end(), g.begin(), g.end());
  }
  PermGroup span = PermGroup::generated(gamma.degree(), std::move(gens));
  if (!span.same_group(gamma))
    raise(ErrorKind::InvalidSystem, "generators: <R_0,...,R_{n-1}> differs from the group");

  auto data = std::make_shared<Data>();
  data->rank = n;
  data->gamma = std::move(gamma);
  data->subgroups = std::move(subgroups);
  SubgroupSystem sys;
  sys.data_ = std::move(data);
  return sys;
}

int SubgroupSystem::rank() const { return data_->rank; }
int SubgroupSystem::degree() const { return data_->gamma.degree(); }
const PermGroup& SubgroupSystem::gamma() const { return data_->gamma; }

const PermGroup& SubgroupSystem::r(int i) const {
  if (i < -1 || i > rank())
    raise(ErrorKind::InvalidInput, "subgroup index " + std::to_string(i) + " out of range");
  return data_->subgroups[static_cast<std::size_t>(i) + 1];
}

const PermGroup& SubgroupSystem::distinguished(const IndexSet& index_set) const {
  if (index_set.rank() != rank())
    raise(ErrorKind::InvalidInput, "index set rank differs from system rank");
  if (index_set.empty()) return r(-1);

  std::lock_guard<std::mutex> lock(data_->cache_mutex);
  auto it = data_->cache.find(index_set.bits());
  if (it != data_->cache.end()) return it->second;

  std::vector<Perm> gens;
  for (int i : index_set.values()) {
    const auto& g = r(i).generators();
    gens.insert(gens.end(), g.begin(), g.end());
  }
  // R_-1 lies in every distinguished subgroup.
  const auto& base = r(-1).generators();
  gens.insert(gens.end(), base.begin(), base.end());
  PermGroup group = PermGroup::generated(degree(), std::move(gens));
  auto [pos, inserted] = data_->cache.emplace(index_set.bits(), std::move(group));
  (void)inserted;
  return pos->second;
}

const PermGroup& SubgroupSystem::stabilizer_of_rank(int i) const {
  IndexSet s = IndexSet::full(rank());
  s.erase(i);
  return distinguished(s);
}

const PermGroup& SubgroupSystem::lower(int i) const {
  return distinguished(IndexSet::interval(rank(), -1, i));
}

const PermGroup& SubgroupSystem::upper(int i) const {
  return distinguished(IndexSet::interval(rank(), i, rank()));
}

namespace {

// Subsets of {0..n-1} ordered largest first, ties by ascending bitmask.
std::vector<std::uint32_t> subsets_by_descending_size(int n) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  return masks;
}

IndexSet proper_mask_to_set(int rank, std::uint32_t mask) {
  IndexSet s(rank);
  for (int i = 0; i < rank; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

bool sorted_equal(const std::vector<Perm>& a, const std::vector<Perm>& b) { return a == b; }

std::vector<Perm> sorted_intersection(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  std::vector<Perm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool check_pair(const SubgroupSystem& sys, const IndexSet& setI, const IndexSet& setJ) {
  const auto& gi = sys.distinguished(setI).elements();
  const auto& gj = sys.distinguished(setJ).elements();
  const auto& expected = sys.distinguished(setI.intersect(setJ)).elements();
  return sorted_equal(sorted_intersection(gi, gj), expected);
}

} // namespace

IntersectionReport check_intersection_property(const SubgroupSystem& sys) {
  IntersectionReport report;
  const int n = sys.rank();
  // R_-1 = R_n lies inside every R_i, so index sets touching -1 or n reduce
  // to their part inside {0..n-1}; scanning proper subsets is exhaustive.
  if (n <= limits::max_exhaustive_rank()) {
    auto masks = subsets_by_descending_size(n);
    for (std::uint32_t mi : masks) {
      IndexSet setI = proper_mask_to_set(n, mi);
      for (std::uint32_t mj : masks) {
        IndexSet setJ = proper_mask_to_set(n, mj);
        if (!check_pair(sys, setI, setJ)) {
          report.holds = false;
          report.witness = {setI, setJ};
          return report;
        }
      }
    }
    return report;
  }
  report.sampled = true;
  std::mt19937 rng(0x1c5u);
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
  for (int trial = 0; trial < 4096; ++trial) {
    IndexSet setI = proper_mask_to_set(n, dist(rng));
    IndexSet setJ = proper_mask_to_set(n, dist(rng));
    if (!check_pair(sys, setI, setJ)) {
      report.holds = false;
      report.witness = {setI, setJ};
      return report;
    }
  }
  return report;
}

StringConditionReport check_string_condition(const SubgroupSystem& sys) {
  StringConditionReport report;
  const int n = sys.rank();
  for (int i = -1; i <= n - 2; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (!product_sets_equal(sys.r(i), sys.r(j))) {
        report.holds = false;
        report.witness = {i, j};
        return report;
      }
    }
  }
  return report;
}

GscgReport is_generalized_string_cgroup(const SubgroupSystem& sys) {
  GscgReport report;
  report.intersection = check_intersection_property(sys);
  report.string_condition = check_string_condition(sys);
  report.holds = report.intersection.holds && report.string_condition.holds;
  return report;
}

bool is_string_cgroup(const SubgroupSystem& sys) {
  if (!sys.r(-1).is_trivial()) return false;
  const int n = sys.rank();
  std::vector<Perm> rho;
  for (int i = 0; i <= n - 1; ++i) {
    if (sys.r(i).order() != 2) return false;
    rho.push_back(sys.r(i).elements().back());
  }
  for (int i = 0; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      Perm p = compose(rho[static_cast<std::size_t>(i)], rho[static_cast<std::size_t>(j)]);
      if (!compose(p, p).is_identity()) return false;
    }
  return check_intersection_property(sys).holds;
}

std::uint64_t compute_k(const SubgroupSystem& sys, int i) {
  if (i < 0 || i > sys.rank() - 1)
    raise(ErrorKind::InvalidInput, "k index " + std::to_string(i) + " out of range");
  return sys.r(i).order() / sys.r(-1).order();
}

std::vector<std::uint64_t> k_vector(const SubgroupSystem& sys) {
  std::vector<std::uint64_t> ks;
  for (int i = 0; i <= sys.rank() - 1; ++i) ks.push_back(compute_k(sys, i));
  return ks;
}

LatticeConditionReport lattice_necessary_condition(const SubgroupSystem& sys) {
  LatticeConditionReport report;
  for (int i = 0; i <= sys.rank() - 2; ++i) {
    auto forward = product_set(sys.r(i), sys.r(i + 1));
    auto backward = product_set(sys.r(i + 1), sys.r(i));
    auto both = sorted_intersection(forward, backward);

    std::vector<Perm> expected = sys.r(i).elements();
    const auto& next = sys.r(i + 1).elements();
    expected.insert(expected.end(), next.begin(), next.end());
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

    if (both != expected) {
      report.holds = false;
      report.witness = i;
      return report;
    }
  }
  return report;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

PrimeBoundReport flag_stabilizer_prime_bound(const SubgroupSystem& sys) {
  PrimeBoundReport report;
  for (int i = 0; i <= sys.rank() - 1; ++i)
    report.bound = std::max(report.bound, compute_k(sys, i) - 1);
  for (std::uint64_t p : prime_factors(sys.r(-1).order())) {
    if (p > report.bound) {
      report.holds = false;
      report.offending_prime = p;
      return report;
    }
  }
  return report;
}

} // namespace icx
