#include "icx/construction.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <queue>
#include <thread>

#include "icx/error.hpp"
#include "icx/limits.hpp"

namespace icx {

namespace {

// One coset meets another iff some element of the smaller stabilizer carries
// the representative difference into the larger one.
bool cosets_meet(const PermGroup& gi, const Perm& phi, const PermGroup& gj, const Perm& psi) {
  Perm delta = compose(phi, inverse(psi));
  if (gi.order() <= gj.order()) {
    for (const Perm& h : gi.elements())
      if (gj.contains(compose(h, delta))) return true;
    return false;
  }
  Perm delta_inv = inverse(delta);
  for (const Perm& h : gj.elements())
    if (gi.contains(compose(h, delta_inv))) return true;
  return false;
}

bool product_membership(const SubgroupSystem& sys, int i, int j, const Perm& delta) {
  const PermGroup& up = sys.upper(i + 1);
  const PermGroup& low = sys.lower(j - 1);
  if (up.order() <= low.order()) {
    for (const Perm& alpha : up.elements())
      if (low.contains(compose(inverse(alpha), delta))) return true;
    return false;
  }
  for (const Perm& beta : low.elements())
    if (up.contains(compose(delta, inverse(beta)))) return true;
  return false;
}

} // namespace

bool incidence_test(const SubgroupSystem& sys, int i, const Perm& phi, int j, const Perm& psi) {
  if (i < -1 || j > sys.rank() || i > j)
    raise(ErrorKind::InvalidInput, "incidence ranks out of order");
  bool by_product = product_membership(sys, i, j, compose(phi, inverse(psi)));
  bool by_meet = cosets_meet(sys.stabilizer_of_rank(i), phi, sys.stabilizer_of_rank(j), psi);
  if (by_product != by_meet)
    raise(ErrorKind::InternalInconsistency,
          "incidence evaluators disagree at ranks (" + std::to_string(i) + "," +
              std::to_string(j) + ") for " + phi.cycles() + " vs " + psi.cycles());
  return by_meet;
}

Perm BuiltComplex::canonical_in_coset(int rank_i, const Perm& rep) const {
  const PermGroup& stab = system_.stabilizer_of_rank(rank_i);
  Perm best = compose(stab.elements().front(), rep);
  for (const Perm& h : stab.elements()) {
    Perm candidate = compose(h, rep);
    if (candidate < best) best = candidate;
  }
  return best;
}

int BuiltComplex::face_of(int rank_i, const Perm& rep) const {
  if (rank_i == -1) return complex_.bottom();
  if (rank_i == system_.rank()) return complex_.top();
  Perm canon = canonical_in_coset(rank_i, rep);
  const auto& ids = complex_.faces_of_rank(rank_i);
  for (int id : ids)
    if (reps_[static_cast<std::size_t>(id)] == canon) return id;
  raise(ErrorKind::InternalInconsistency, "coset has no face");
}

const Perm& BuiltComplex::representative(int face_id) const {
  return reps_[static_cast<std::size_t>(face_id)];
}

std::vector<int> BuiltComplex::face_map(const Perm& g) const {
  std::vector<int> out(static_cast<std::size_t>(complex_.face_count()));
  for (const Face& f : complex_.faces())
    out[static_cast<std::size_t>(f.id)] =
        face_of(f.rank, compose(reps_[static_cast<std::size_t>(f.id)], g));
  return out;
}

std::vector<std::vector<int>> BuiltComplex::action_generators() const {
  std::vector<std::vector<int>> out;
  for (const Perm& g : system_.gamma().generators()) out.push_back(face_map(g));
  return out;
}

BuiltComplex build_complex(const SubgroupSystem& sys, bool cross_check) {
  GscgReport gscg = is_generalized_string_cgroup(sys);
  if (!gscg.holds) {
    std::string why = !gscg.intersection.holds ? "intersection property fails"
                                               : "commutation of distant subgroups fails";
    if (gscg.intersection.witness)
      why += " at " + gscg.intersection.witness->first.to_string() + "," +
             gscg.intersection.witness->second.to_string();
    raise(ErrorKind::NotACGroup, why);
  }

  const int n = sys.rank();
  BuiltComplex built;
  built.system_ = sys;

  std::vector<Face> faces;
  std::vector<Perm> reps;
  const Perm id = Perm::identity(sys.degree());

  faces.push_back({0, -1, "F-1"});
  reps.push_back(id);
  std::vector<std::vector<int>> ids_by_rank(static_cast<std::size_t>(n));
  for (int i = 0; i <= n - 1; ++i) {
    CosetDecomposition cosets = right_cosets(sys.gamma(), sys.stabilizer_of_rank(i));
    for (const Perm& rep : cosets.representatives) {
      int fid = static_cast<int>(faces.size());
      faces.push_back({fid, i, rep.cycles()});
      reps.push_back(rep);
      ids_by_rank[static_cast<std::size_t>(i)].push_back(fid);
    }
    if (faces.size() > limits::max_faces())
      raise(ErrorKind::ResourceLimit, "coset complex exceeds the face cap");
  }
  int top_id = static_cast<int>(faces.size());
  faces.push_back({top_id, n, "F" + std::to_string(n)});
  reps.push_back(id);

  std::vector<std::pair<int, int>> covers;
  for (int fid : ids_by_rank.front()) covers.push_back({0, fid});
  for (int fid : ids_by_rank.back()) covers.push_back({fid, top_id});

  for (int i = 0; i + 1 <= n - 1; ++i) {
    const PermGroup& gi = sys.stabilizer_of_rank(i);
    const PermGroup& gj = sys.stabilizer_of_rank(i + 1);
    // Warm the element caches so the parallel evaluators only read.
    gi.elements();
    gj.elements();
    std::vector<std::pair<int, int>> pairs;
    for (int a : ids_by_rank[static_cast<std::size_t>(i)])
      for (int b : ids_by_rank[static_cast<std::size_t>(i) + 1]) pairs.push_back({a, b});

    auto evaluate = [&](std::size_t from, std::size_t to, std::vector<char>& incident) {
      for (std::size_t p = from; p < to; ++p) {
        auto [a, b] = pairs[p];
        bool meet = cosets_meet(gi, reps[static_cast<std::size_t>(a)], gj,
                                reps[static_cast<std::size_t>(b)]);
        if (cross_check) {
          bool again = incidence_test(sys, i, reps[static_cast<std::size_t>(a)], i + 1,
                                      reps[static_cast<std::size_t>(b)]);
          if (again != meet) raise(ErrorKind::InternalInconsistency, "cover evaluators disagree");
        }
        incident[p] = meet ? 1 : 0;
      }
    };

    std::vector<char> incident(pairs.size(), 0);
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              pairs.size() / 256 + 1);
    if (workers <= 1) {
      evaluate(0, pairs.size(), incident);
    } else {
      std::vector<std::future<void>> tasks;
      const std::size_t chunk = (pairs.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        std::size_t from = w * chunk;
        std::size_t to = std::min(pairs.size(), from + chunk);
        if (from >= to) break;
        tasks.push_back(std::async(std::launch::async,
                                   [&, from, to] { evaluate(from, to, incident); }));
      }
      for (auto& t : tasks) t.get();
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (incident[p]) covers.push_back(pairs[p]);
  }

  built.reps_ = std::move(reps);
  built.complex_ = IncidenceComplex::from_covers(n, std::move(faces), std::move(covers));
  built.base_flag_.push_back(built.complex_.bottom());
  for (int i = 0; i <= n - 1; ++i) built.base_flag_.push_back(built.face_of(i, id));
  built.base_flag_.push_back(built.complex_.top());
  return built;
}

SubgroupSystem derive_system(const IncidenceComplex& k,
                             const std::vector<std::vector<int>>& gens, const Flag& base) {
  if (static_cast<int>(base.size()) != k.rank() + 2)
    raise(ErrorKind::InvalidAction, "base flag does not span all ranks");
  for (int r = -1; r <= k.rank(); ++r) {
    int id = base[static_cast<std::size_t>(r) + 1];
    if (id < 0 || id >= k.face_count() || k.face(id).rank != r)
      raise(ErrorKind::InvalidAction, "base flag entry at rank " + std::to_string(r) +
                                          " is not a face of that rank");
    if (r > -1 && !k.leq(base[static_cast<std::size_t>(r)], id))
      raise(ErrorKind::InvalidAction, "base flag is not a chain");
  }
  ActionReport action = verify_group_action(k, gens);
  if (!action.is_automorphism_set)
    raise(ErrorKind::InvalidAction, "generators are not automorphisms: " + action.violation);
  if (!action.flag_transitive)
    raise(ErrorKind::InvalidAction, "action is not flag-transitive");

  const int degree = k.face_count();
  std::vector<Perm> perm_gens;
  for (const auto& g : gens) perm_gens.push_back(Perm(g));
  PermGroup gamma = PermGroup::generated(degree, perm_gens);

  const int n = k.rank();
  std::vector<PermGroup> subgroups;
  for (int i = -1; i <= n; ++i) {
    std::vector<Perm> fixers;
    for (const Perm& g : gamma.elements()) {
      bool fixes = true;
      for (int rr = -1; rr <= n && fixes; ++rr) {
        if (rr == i) continue;
        int fid = base[static_cast<std::size_t>(rr) + 1];
        if (g[fid] != fid) fixes = false;
      }
      if (fixes) fixers.push_back(g);
    }
    subgroups.push_back(PermGroup::generated(degree, std::move(fixers)));
  }
  return SubgroupSystem::create(std::move(gamma), std::move(subgroups));
}

ReconstructionReport verify_reconstruction(const IncidenceComplex& k, const SubgroupSystem& sys,
                                           const Flag& base) {
  ReconstructionReport report;
  if (sys.degree() != k.face_count())
    raise(ErrorKind::InvalidInput, "system does not act on the face-id space of the complex");

  BuiltComplex rebuilt = build_complex(sys);
  const IncidenceComplex& l = rebuilt.complex();

  // Canonical map: write each face as base_i * g and send it to the coset
  // face of g.
  std::vector<int> map(static_cast<std::size_t>(k.face_count()), -1);
  bool canonical_ok = true;
  for (int r = -1; r <= k.rank() && canonical_ok; ++r) {
    int start = base[static_cast<std::size_t>(r) + 1];
    std::map<int, Perm> witness;
    witness.emplace(start, Perm::identity(sys.degree()));
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop();
      for (const Perm& g : sys.gamma().generators()) {
        int image = g[cur];
        if (!witness.count(image)) {
          witness.emplace(image, compose(witness.at(cur), g));
          queue.push(image);
        }
      }
    }
    if (witness.size() != k.faces_of_rank(r).size()) {
      canonical_ok = false;
      break;
    }
    for (const auto& [fid, g] : witness) map[static_cast<std::size_t>(fid)] = rebuilt.face_of(r, g);
  }

  auto is_isomorphism = [&](const std::vector<int>& candidate) {
    std::vector<bool> hit(candidate.size(), false);
    for (int x : candidate) {
      if (x < 0 || hit[static_cast<std::size_t>(x)]) return false;
      hit[static_cast<std::size_t>(x)] = true;
    }
    for (const Face& a : k.faces()) {
      if (k.face(a.id).rank != l.face(candidate[static_cast<std::size_t>(a.id)]).rank)
        return false;
      for (const Face& b : k.faces())
        if (k.leq(a.id, b.id) != l.leq(candidate[static_cast<std::size_t>(a.id)],
                                       candidate[static_cast<std::size_t>(b.id)]))
          return false;
    }
    return true;
  };

  if (canonical_ok && is_isomorphism(map)) {
    report.isomorphic = true;
    report.canonical_map_used = true;
    report.map = std::move(map);
    return report;
  }
  if (auto found = are_isomorphic(k, l)) {
    report.isomorphic = true;
    report.map = std::move(*found);
  }
  return report;
}

SubgroupSystem section_group(const SubgroupSystem& sys, int i, int j) {
  if (i < -1 || j > sys.rank() || i >= j - 1)
    raise(ErrorKind::InvalidInput, "section indices need -1 <= i < j-1 <= n-1");
  std::vector<PermGroup> subgroups;
  subgroups.push_back(sys.r(-1));
  for (int t = i + 1; t <= j - 1; ++t) subgroups.push_back(sys.r(t));
  subgroups.push_back(sys.r(sys.rank()));
  PermGroup gamma = sys.distinguished(IndexSet::interval(sys.rank(), i + 1, j - 1));
  return SubgroupSystem::create(std::move(gamma), std::move(subgroups));
}

SectionTheoremReport verify_section_theorem(const SubgroupSystem& sys) {
  SectionTheoremReport report;
  BuiltComplex built = build_complex(sys);
  const IncidenceComplex& k = built.complex();
  const int n = sys.rank();

  for (int i = -1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      IncidenceComplex section = k.section(built.base_flag()[static_cast<std::size_t>(i) + 1],
                                           built.base_flag()[static_cast<std::size_t>(j) + 1]);
      BuiltComplex from_group = build_complex(section_group(sys, i, j));
      if (!are_isomorphic(section, from_group.complex())) {
        report.holds = false;
        report.failures.push_back("section (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") does not match its group");
      }
    }
  }

  for (int i = 0; i <= n - 1; ++i) {
    std::uint64_t expected = compute_k(sys, i);
    for (int below : k.faces_of_rank(i - 1)) {
      for (int above : k.faces_of_rank(i + 1)) {
        if (!k.leq(below, above)) continue;
        std::uint64_t middles = k.open_interval(below, above).size();
        if (middles != expected) {
          report.holds = false;
          report.failures.push_back("interval (" + std::to_string(below) + "," +
                                    std::to_string(above) + ") has " + std::to_string(middles) +
                                    " faces, expected " + std::to_string(expected));
        }
      }
    }
  }
  return report;
}

PermGroup action_kernel(const SubgroupSystem& sys) { return core(sys.gamma(), sys.r(-1)); }

} // namespace icx
