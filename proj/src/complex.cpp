#include "icx/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "icx/error.hpp"
#include "icx/limits.hpp"
#include "icx/perm_group.hpp"

namespace icx {

void IncidenceComplex::set_reach(int a, int b) {
  reach_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] |=
      (std::uint64_t{1} << (b & 63));
}

bool IncidenceComplex::leq(int a, int b) const {
  return (reach_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] >>
          (b & 63)) & 1u;
}

IncidenceComplex IncidenceComplex::from_covers(int rank, std::vector<Face> faces,
                                               std::vector<std::pair<int, int>> covers) {
  if (rank < -1) raise(ErrorKind::InvalidPoset, "rank below -1");
  if (faces.size() > limits::max_faces())
    raise(ErrorKind::ResourceLimit, "face count exceeds cap");

  IncidenceComplex k;
  k.rank_ = rank;
  const int m = static_cast<int>(faces.size());
  for (int i = 0; i < m; ++i) {
    if (faces[static_cast<std::size_t>(i)].id != i)
      raise(ErrorKind::InvalidPoset, "face ids must be 0..m-1 in order");
    int r = faces[static_cast<std::size_t>(i)].rank;
    if (r < -1 || r > rank) raise(ErrorKind::InvalidPoset, "face rank out of range");
  }
  k.faces_ = std::move(faces);
  k.by_rank_.assign(static_cast<std::size_t>(rank) + 2, {});
  for (const Face& f : k.faces_)
    k.by_rank_[static_cast<std::size_t>(f.rank) + 1].push_back(f.id);

  if (rank == -1) {
    if (m != 1) raise(ErrorKind::InvalidPoset, "a rank -1 complex has exactly one face");
    if (!covers.empty()) raise(ErrorKind::InvalidPoset, "a rank -1 complex has no covers");
    k.bottom_ = k.top_ = 0;
  } else {
    if (k.by_rank_.front().size() != 1)
      raise(ErrorKind::InvalidPoset, "need exactly one least face");
    if (k.by_rank_.back().size() != 1)
      raise(ErrorKind::InvalidPoset, "need exactly one greatest face");
    k.bottom_ = k.by_rank_.front().front();
    k.top_ = k.by_rank_.back().front();
  }

  k.up_.assign(static_cast<std::size_t>(m), {});
  k.down_.assign(static_cast<std::size_t>(m), {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      raise(ErrorKind::InvalidPoset, "cover references unknown face");
    if (k.faces_[static_cast<std::size_t>(b)].rank !=
        k.faces_[static_cast<std::size_t>(a)].rank + 1)
      raise(ErrorKind::InvalidPoset, "rank-skipping cover (" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");
    if (!seen.insert({a, b}).second) continue;
    k.up_[static_cast<std::size_t>(a)].push_back(b);
    k.down_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& v : k.up_) std::sort(v.begin(), v.end());
  for (auto& v : k.down_) std::sort(v.begin(), v.end());

  // Reachability, processed from the top rank down.
  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  k.reach_.assign(static_cast<std::size_t>(m), std::vector<std::uint64_t>(words, 0));
  for (int r = rank; r >= -1; --r) {
    for (int id : k.by_rank_[static_cast<std::size_t>(r) + 1]) {
      k.set_reach(id, id);
      for (int above : k.up_[static_cast<std::size_t>(id)]) {
        auto& mine = k.reach_[static_cast<std::size_t>(id)];
        const auto& theirs = k.reach_[static_cast<std::size_t>(above)];
        for (std::size_t w = 0; w < words; ++w) mine[w] |= theirs[w];
      }
    }
  }
  return k;
}

const Face& IncidenceComplex::face(int id) const {
  return faces_.at(static_cast<std::size_t>(id));
}

const std::vector<int>& IncidenceComplex::faces_of_rank(int r) const {
  if (r < -1 || r > rank_) raise(ErrorKind::InvalidInput, "rank out of range");
  return by_rank_[static_cast<std::size_t>(r) + 1];
}

const std::vector<int>& IncidenceComplex::upper_covers(int id) const {
  return up_[static_cast<std::size_t>(id)];
}

const std::vector<int>& IncidenceComplex::lower_covers(int id) const {
  return down_[static_cast<std::size_t>(id)];
}

std::vector<int> IncidenceComplex::open_interval(int a, int b) const {
  std::vector<int> out;
  if (!leq(a, b)) return out;
  for (const Face& f : faces_) {
    if (f.id == a || f.id == b) continue;
    if (leq(a, f.id) && leq(f.id, b)) out.push_back(f.id);
  }
  return out;
}

std::vector<Flag> IncidenceComplex::flags() const {
  std::vector<Flag> out;
  if (rank_ == -1) {
    out.push_back({bottom_});
    return out;
  }
  Flag path{bottom_};
  // Depth-first over upper covers; covers are sorted, so flags come out in
  // lexicographic order.
  struct Frame {
    int id;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{bottom_}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& ups = up_[static_cast<std::size_t>(fr.id)];
    if (face(fr.id).rank == rank_) {
      out.push_back(path);
      stack.pop_back();
      path.pop_back();
      continue;
    }
    if (fr.next >= ups.size()) {
      stack.pop_back();
      path.pop_back();
      continue;
    }
    int child = ups[fr.next++];
    stack.push_back({child});
    path.push_back(child);
  }
  return out;
}

std::vector<Flag> IncidenceComplex::adjacent_flags(const Flag& flag, int i) const {
  if (i < 0 || i > rank_ - 1) raise(ErrorKind::InvalidInput, "adjacency rank out of range");
  std::vector<Flag> out;
  int below = flag[static_cast<std::size_t>(i)];      // rank i-1 face
  int above = flag[static_cast<std::size_t>(i) + 2];  // rank i+1 face
  for (int h : open_interval(below, above)) {
    if (h == flag[static_cast<std::size_t>(i) + 1]) continue;
    Flag other = flag;
    other[static_cast<std::size_t>(i) + 1] = h;
    out.push_back(other);
  }
  return out;
}

Chain IncidenceComplex::make_chain(std::vector<int> ids) const {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return face(a).rank < face(b).rank; });
  for (std::size_t p = 0; p + 1 < ids.size(); ++p) {
    if (face(ids[p]).rank == face(ids[p + 1]).rank)
      raise(ErrorKind::InvalidInput, "chain repeats rank " + std::to_string(face(ids[p]).rank));
    if (!leq(ids[p], ids[p + 1]))
      raise(ErrorKind::InvalidInput, "faces " + std::to_string(ids[p]) + " and " +
                                         std::to_string(ids[p + 1]) + " are incomparable");
  }
  return Chain{std::move(ids)};
}

std::optional<Flag> IncidenceComplex::extend_to_flag(const Chain& chain) const {
  // Anchor at the improper faces, then fill rank gaps by backtracking.
  std::vector<int> fixed = chain.faces;
  if (fixed.empty() || face(fixed.front()).rank != -1) fixed.insert(fixed.begin(), bottom_);
  if (face(fixed.back()).rank != rank_) fixed.push_back(top_);
  for (std::size_t p = 0; p + 1 < fixed.size(); ++p)
    if (!leq(fixed[p], fixed[p + 1])) return std::nullopt;

  Flag flag(static_cast<std::size_t>(rank_) + 2, -1);
  for (int id : fixed) flag[static_cast<std::size_t>(face(id).rank) + 1] = id;

  std::function<bool(int)> fill = [&](int r) -> bool {
    if (r > rank_) return true;
    if (flag[static_cast<std::size_t>(r) + 1] != -1) return fill(r + 1);
    int below = flag[static_cast<std::size_t>(r)];
    int above = r + 1;
    while (flag[static_cast<std::size_t>(above) + 1] == -1) ++above;
    int upper = flag[static_cast<std::size_t>(above) + 1];
    for (int candidate : faces_of_rank(r)) {
      if (!leq(below, candidate) || !leq(candidate, upper)) continue;
      flag[static_cast<std::size_t>(r) + 1] = candidate;
      if (fill(r + 1)) return true;
      flag[static_cast<std::size_t>(r) + 1] = -1;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return flag;
}

std::vector<int> IncidenceComplex::f_vector() const {
  std::vector<int> out;
  for (int r = 0; r <= rank_ - 1; ++r)
    out.push_back(static_cast<int>(by_rank_[static_cast<std::size_t>(r) + 1].size()));
  return out;
}

IncidenceComplex IncidenceComplex::section(int a, int b) const {
  if (!leq(a, b)) raise(ErrorKind::InvalidSection, "section endpoints are not comparable");
  const int lo = face(a).rank;
  const int new_rank = face(b).rank - lo - 1;

  std::vector<int> members;
  for (const Face& f : faces_)
    if (leq(a, f.id) && leq(f.id, b)) members.push_back(f.id);
  std::sort(members.begin(), members.end(), [&](int x, int y) {
    return std::pair(face(x).rank, x) < std::pair(face(y).rank, y);
  });

  std::map<int, int> local;
  std::vector<Face> faces;
  for (int id : members) {
    int nid = static_cast<int>(faces.size());
    local[id] = nid;
    faces.push_back({nid, face(id).rank - lo - 1, face(id).label});
  }
  std::vector<std::pair<int, int>> covers;
  for (int id : members)
    for (int above : up_[static_cast<std::size_t>(id)])
      if (local.count(above)) covers.push_back({local[id], local[above]});
  return from_covers(new_rank, std::move(faces), std::move(covers));
}

Verdict check_I2(const IncidenceComplex& k) {
  for (const Face& f : k.faces()) {
    if (!k.leq(k.bottom(), f.id) || !k.leq(f.id, k.top()))
      return {false, "face " + std::to_string(f.id) + " is not between the improper faces"};
  }
  for (const Face& f : k.faces()) {
    for (const Face& g : k.faces()) {
      if (g.rank - f.rank < 2 || !k.leq(f.id, g.id)) continue;
      if (k.open_interval(f.id, g.id).empty())
        return {false, "no face strictly between " + std::to_string(f.id) + " and " +
                           std::to_string(g.id)};
    }
  }
  return {};
}

namespace {

Verdict check_middle_counts(const IncidenceComplex& k, bool exactly_two) {
  for (int i = 0; i <= k.rank() - 1; ++i) {
    for (int below : k.faces_of_rank(i - 1)) {
      for (int above : k.faces_of_rank(i + 1)) {
        if (!k.leq(below, above)) continue;
        std::size_t middles = k.open_interval(below, above).size();
        bool ok = exactly_two ? middles == 2 : middles >= 2;
        if (!ok)
          return {false, "(" + std::to_string(below) + "," + std::to_string(above) + ") has " +
                             std::to_string(middles) + " middle faces at rank " +
                             std::to_string(i)};
      }
    }
  }
  return {};
}

} // namespace

Verdict check_I4(const IncidenceComplex& k) { return check_middle_counts(k, false); }
Verdict check_diamond(const IncidenceComplex& k) { return check_middle_counts(k, true); }

namespace {

// Connectivity of the proper-face incidence graph; complexes of rank <= 1
// count as connected.
bool connected_poset(const IncidenceComplex& k) {
  if (k.rank() <= 1) return true;
  std::vector<int> proper;
  for (const Face& f : k.faces())
    if (k.proper(f.id)) proper.push_back(f.id);
  if (proper.empty()) return true;
  std::set<int> visited{proper.front()};
  std::queue<int> queue;
  queue.push(proper.front());
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop();
    for (int other : proper) {
      if (visited.count(other) || !k.incident(cur, other)) continue;
      visited.insert(other);
      queue.push(other);
    }
  }
  return visited.size() == proper.size();
}

bool flag_connected_poset(const IncidenceComplex& k) {
  auto flags = k.flags();
  if (flags.size() <= 1) return true;
  auto adjacent = [&](const Flag& a, const Flag& b) {
    int diff = 0;
    for (std::size_t p = 0; p < a.size(); ++p)
      if (a[p] != b[p] && ++diff > 1) return false;
    return diff == 1;
  };
  std::vector<bool> visited(flags.size(), false);
  visited[0] = true;
  std::queue<int> queue;
  queue.push(0);
  std::size_t count = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop();
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (visited[i] || !adjacent(flags[static_cast<std::size_t>(cur)], flags[i])) continue;
      visited[i] = true;
      ++count;
      queue.push(static_cast<int>(i));
    }
  }
  return count == flags.size();
}

// Runs `test` on every section of k, including k itself; returns the first
// failing section pair.
template <typename Test>
Verdict every_section(const IncidenceComplex& k, Test test, const std::string& what) {
  for (const Face& f : k.faces()) {
    for (const Face& g : k.faces()) {
      if (!k.leq(f.id, g.id)) continue;
      if (!test(k.section(f.id, g.id)))
        return {false, "section (" + std::to_string(f.id) + "," + std::to_string(g.id) +
                           ") is not " + what};
    }
  }
  return {};
}

} // namespace

Verdict check_connected(const IncidenceComplex& k) {
  if (connected_poset(k)) return {};
  return {false, "proper-face incidence graph is disconnected"};
}

Verdict check_strongly_connected(const IncidenceComplex& k) {
  return every_section(k, connected_poset, "connected");
}

Verdict check_flag_connected(const IncidenceComplex& k) {
  if (flag_connected_poset(k)) return {};
  return {false, "flag adjacency graph is disconnected"};
}

Verdict check_strongly_flag_connected(const IncidenceComplex& k) {
  return every_section(k, flag_connected_poset, "flag-connected");
}

LatticeVerdict is_lattice(const IncidenceComplex& k) {
  const int m = k.face_count();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      std::vector<int> uppers, lowers;
      for (int x = 0; x < m; ++x) {
        if (k.leq(a, x) && k.leq(b, x)) uppers.push_back(x);
        if (k.leq(x, a) && k.leq(x, b)) lowers.push_back(x);
      }
      int minimal = 0, maximal = 0;
      for (int x : uppers) {
        bool is_minimal = true;
        for (int y : uppers)
          if (y != x && k.leq(y, x)) { is_minimal = false; break; }
        minimal += is_minimal;
      }
      for (int x : lowers) {
        bool is_maximal = true;
        for (int y : lowers)
          if (y != x && k.leq(x, y)) { is_maximal = false; break; }
        maximal += is_maximal;
      }
      if (minimal != 1) return {false, {{a, b}}, "join"};
      if (maximal != 1) return {false, {{a, b}}, "meet"};
    }
  }
  return {};
}

namespace {

// Iterated neighborhood refinement; returns one invariant class id per face.
std::vector<int> refine_signatures(const IncidenceComplex& k) {
  const int m = k.face_count();
  std::vector<int> sig(static_cast<std::size_t>(m));
  {
    std::map<std::tuple<int, std::size_t, std::size_t>, int> classes;
    for (int i = 0; i < m; ++i) {
      auto key = std::tuple(k.face(i).rank, k.upper_covers(i).size(), k.lower_covers(i).size());
      auto [it, added] = classes.emplace(key, static_cast<int>(classes.size()));
      (void)added;
      sig[static_cast<std::size_t>(i)] = it->second;
    }
  }
  for (int round = 0; round < 4; ++round) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> classes;
    std::vector<int> next(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      std::vector<int> up, down;
      for (int j : k.upper_covers(i)) up.push_back(sig[static_cast<std::size_t>(j)]);
      for (int j : k.lower_covers(i)) down.push_back(sig[static_cast<std::size_t>(j)]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      auto key = std::tuple(sig[static_cast<std::size_t>(i)], std::move(up), std::move(down));
      auto [it, added] = classes.emplace(std::move(key), static_cast<int>(classes.size()));
      (void)added;
      next[static_cast<std::size_t>(i)] = it->second;
    }
    if (next == sig) break;
    sig = std::move(next);
  }
  return sig;
}

struct IsoSearch {
  const IncidenceComplex& k;
  const IncidenceComplex& l;
  std::vector<int> sig_k, sig_l;
  std::vector<int> map_kl, map_lk;
  std::vector<int> order; // k-face ids, rank by rank
  std::uint64_t steps = 0;
  static constexpr std::uint64_t step_cap = 20'000'000;

  bool compatible(int a, int b) {
    if (sig_k[static_cast<std::size_t>(a)] != sig_l[static_cast<std::size_t>(b)]) return false;
    // Down-neighbors of a are already mapped (rank order); covers must match.
    for (int d : k.lower_covers(a)) {
      int image = map_kl[static_cast<std::size_t>(d)];
      const auto& lows = l.lower_covers(b);
      if (!std::binary_search(lows.begin(), lows.end(), image)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (++steps > step_cap) raise(ErrorKind::ResourceLimit, "isomorphism search cap");
    if (pos == order.size()) return true;
    int a = order[pos];
    for (int b : l.faces_of_rank(k.face(a).rank)) {
      if (map_lk[static_cast<std::size_t>(b)] != -1) continue;
      if (!compatible(a, b)) continue;
      map_kl[static_cast<std::size_t>(a)] = b;
      map_lk[static_cast<std::size_t>(b)] = a;
      if (extend(pos + 1)) return true;
      map_kl[static_cast<std::size_t>(a)] = -1;
      map_lk[static_cast<std::size_t>(b)] = -1;
    }
    return false;
  }
};

} // namespace

std::optional<std::vector<int>> are_isomorphic(const IncidenceComplex& k,
                                               const IncidenceComplex& l) {
  if (k.rank() != l.rank() || k.face_count() != l.face_count()) return std::nullopt;
  for (int r = -1; r <= k.rank(); ++r)
    if (k.faces_of_rank(r).size() != l.faces_of_rank(r).size()) return std::nullopt;

  IsoSearch search{k, l, refine_signatures(k), refine_signatures(l), {}, {}, {}};
  {
    std::vector<int> a = search.sig_k, b = search.sig_l;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  search.map_kl.assign(static_cast<std::size_t>(k.face_count()), -1);
  search.map_lk.assign(static_cast<std::size_t>(l.face_count()), -1);
  for (int r = -1; r <= k.rank(); ++r)
    for (int id : k.faces_of_rank(r)) search.order.push_back(id);

  if (!search.extend(0)) return std::nullopt;

  // Covers map onto covers in both directions: verify explicitly.
  for (const Face& f : k.faces()) {
    if (k.upper_covers(f.id).size() !=
        l.upper_covers(search.map_kl[static_cast<std::size_t>(f.id)]).size())
      return std::nullopt;
    for (int above : k.upper_covers(f.id)) {
      const auto& ups = l.upper_covers(search.map_kl[static_cast<std::size_t>(f.id)]);
      if (!std::binary_search(ups.begin(), ups.end(),
                              search.map_kl[static_cast<std::size_t>(above)]))
        return std::nullopt;
    }
  }
  return search.map_kl;
}

ActionReport verify_group_action(const IncidenceComplex& k,
                                 const std::vector<std::vector<int>>& gens) {
  ActionReport report;
  const int m = k.face_count();
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != m)
      raise(ErrorKind::InvalidAction, "map is not defined on every face");
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (int x : g) {
      if (x < 0 || x >= m || hit[static_cast<std::size_t>(x)])
        raise(ErrorKind::InvalidAction, "map is not a bijection of the faces");
      hit[static_cast<std::size_t>(x)] = true;
    }
    for (const Face& f : k.faces()) {
      if (k.face(g[static_cast<std::size_t>(f.id)]).rank != f.rank) {
        report.is_automorphism_set = false;
        report.violation = "rank not preserved at face " + std::to_string(f.id);
      }
      for (int above : k.upper_covers(f.id)) {
        const auto& ups = k.upper_covers(g[static_cast<std::size_t>(f.id)]);
        if (!std::binary_search(ups.begin(), ups.end(), g[static_cast<std::size_t>(above)])) {
          report.is_automorphism_set = false;
          report.violation = "cover not preserved at face " + std::to_string(f.id);
        }
      }
    }
    perms.push_back(Perm(g));
  }
  if (!report.is_automorphism_set) return report;

  PermGroup group = PermGroup::generated(std::max(m, 1), std::move(perms));
  report.group_order = group.order();

  auto flags = k.flags();
  report.flag_count = flags.size();
  if (flags.empty()) return report;

  std::set<Flag> all(flags.begin(), flags.end());
  std::set<Flag> orbit{flags.front()};
  std::queue<Flag> queue;
  queue.push(flags.front());
  while (!queue.empty()) {
    Flag cur = queue.front();
    queue.pop();
    for (const Perm& g : group.generators()) {
      Flag image(cur.size());
      for (std::size_t p = 0; p < cur.size(); ++p) image[p] = g[cur[p]];
      if (orbit.insert(image).second) queue.push(image);
    }
  }
  report.flag_orbit_size = orbit.size();
  report.flag_transitive = orbit.size() == all.size();
  report.flag_stabilizer_order = group.order() / orbit.size();
  report.simply_flag_transitive = report.flag_transitive && report.flag_stabilizer_order == 1;
  return report;
}

} // namespace icx
