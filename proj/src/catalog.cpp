#include "icx/catalog.hpp"

#include <algorithm>

#include "icx/complex.hpp"
#include "icx/construction.hpp"
#include "icx/derived.hpp"
#include "icx/error.hpp"

namespace icx {

namespace {

SubgroupSystem involution_system(int degree, const std::vector<Perm>& rhos) {
  PermGroup trivial = PermGroup::trivial(degree);
  std::vector<PermGroup> subgroups;
  subgroups.push_back(trivial);
  std::vector<Perm> all;
  for (const Perm& rho : rhos) {
    subgroups.push_back(PermGroup::generated(degree, {rho}));
    all.push_back(rho);
  }
  subgroups.push_back(trivial);
  return SubgroupSystem::create(PermGroup::generated(degree, all), std::move(subgroups));
}

SubgroupSystem polygon(int p) {
  if (p == 2) {
    // Two vertices on two doubled edges; the vertex action alone is not
    // faithful, so the edge pair gets its own points.
    return involution_system(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)});
  }
  std::vector<int> r0(static_cast<std::size_t>(p)), r1(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    r0[static_cast<std::size_t>(i)] = ((1 - i) % p + p) % p;
    r1[static_cast<std::size_t>(i)] = ((-i) % p + p) % p;
  }
  return involution_system(p, {Perm(r0), Perm(r1)});
}

std::vector<Perm> parse_all(int degree, const std::vector<std::string>& cycles) {
  std::vector<Perm> out;
  for (const auto& c : cycles) out.push_back(Perm::from_cycles(c, degree));
  return out;
}

SubgroupSystem simplex(int rank) {
  // Adjacent transpositions on rank+1 points.
  int degree = rank + 1;
  std::vector<Perm> rhos;
  for (int i = 0; i < rank; ++i)
    rhos.push_back(Perm::from_cycles("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")",
                                     degree));
  return involution_system(degree, rhos);
}

// Signed coordinate permutations on the 2d half-axes: point i is +e_i,
// point d+i is -e_i.
SubgroupSystem hypercube(int d) {
  std::vector<Perm> rhos;
  int degree = 2 * d;
  rhos.push_back(Perm::from_cycles("(0 " + std::to_string(d) + ")", degree));
  for (int i = 0; i + 1 < d; ++i) {
    std::string swap = "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")(" +
                       std::to_string(d + i) + " " + std::to_string(d + i + 1) + ")";
    rhos.push_back(Perm::from_cycles(swap, degree));
  }
  return involution_system(degree, rhos);
}

SubgroupSystem reversed(const SubgroupSystem& sys) {
  std::vector<Perm> rhos;
  for (int i = sys.rank() - 1; i >= 0; --i) rhos.push_back(sys.r(i).elements().back());
  return involution_system(sys.degree(), rhos);
}

// Order-120 reflection group on the 12 icosahedron vertices.
SubgroupSystem icosahedron() {
  auto rhos = parse_all(12, {"(0 1)(3 5)(6 8)(9 10)", "(1 2)(3 4)(6 7)(10 11)",
                             "(2 7)(3 8)(4 11)(5 6)"});
  return involution_system(12, rhos);
}

SubgroupSystem k33_system() {
  const int degree = 6;
  auto gen = [&](const std::string& c) { return Perm::from_cycles(c, degree); };
  // Vertex action of the edge-preserving maps of the complete bipartite
  // graph on parts {0,1,2} and {3,4,5}; base flag (vertex 0, edge {0,3}).
  PermGroup gamma = PermGroup::generated(
      degree, {gen("(0 1)"), gen("(1 2)"), gen("(3 4)"), gen("(4 5)"), gen("(0 3)(1 4)(2 5)")});
  PermGroup flag_stab = PermGroup::generated(degree, {gen("(1 2)"), gen("(4 5)")});
  PermGroup r0 = PermGroup::generated(degree, {gen("(1 2)"), gen("(4 5)"), gen("(0 3)(1 4)(2 5)")});
  PermGroup r1 = PermGroup::generated(degree, {gen("(1 2)"), gen("(4 5)"), gen("(3 4)")});
  return SubgroupSystem::create(gamma, {flag_stab, r0, r1, flag_stab});
}

SubgroupSystem cyclic_system(int k) {
  std::string cycle = "(";
  for (int i = 0; i < k; ++i) cycle += (i ? " " : "") + std::to_string(i);
  cycle += ")";
  PermGroup gamma = PermGroup::generated(k, {Perm::from_cycles(cycle, k)});
  PermGroup trivial = PermGroup::trivial(k);
  return SubgroupSystem::create(gamma, {trivial, gamma, trivial});
}

SubgroupSystem ip_failure_triple() {
  const int degree = 3;
  PermGroup r0 = PermGroup::generated(degree, {Perm::from_cycles("(0 1)", degree)});
  PermGroup r1 = PermGroup::generated(degree, {Perm::from_cycles("(1 2)", degree)});
  PermGroup gamma = join_groups(r0, r1);
  PermGroup trivial = PermGroup::trivial(degree);
  return SubgroupSystem::create(gamma, {trivial, r0, r1, r0, trivial});
}

SubgroupSystem hemioctahedron() {
  auto rhos = parse_all(4, {"(0 2)", "(0 1)", "(0 2)(1 3)"});
  return involution_system(4, rhos);
}

CatalogEntry make_entry(std::string name, std::vector<int> schlafli, SubgroupSystem sys,
                        std::vector<int> f, std::uint64_t flags, std::vector<std::uint64_t> ks,
                        bool polytope, bool lattice) {
  CatalogEntry e;
  e.name = std::move(name);
  e.schlafli = std::move(schlafli);
  e.system = std::move(sys);
  e.expected_f_vector = std::move(f);
  e.expected_flags = flags;
  e.expected_k = std::move(ks);
  e.polytope = polytope;
  e.lattice = lattice;
  return e;
}

void self_test(const CatalogEntry& e) {
  if (!e.positive) {
    if (is_generalized_string_cgroup(e.system).holds)
      raise(ErrorKind::InternalInconsistency, "negative catalog entry verifies: " + e.name);
    return;
  }
  BuiltComplex built = build_complex(e.system);
  if (built.complex().f_vector() != e.expected_f_vector)
    raise(ErrorKind::InternalInconsistency, "catalog f-vector mismatch: " + e.name);
  if (built.complex().flags().size() != e.expected_flags)
    raise(ErrorKind::InternalInconsistency, "catalog flag count mismatch: " + e.name);
  if (k_vector(e.system) != e.expected_k)
    raise(ErrorKind::InternalInconsistency, "catalog k-vector mismatch: " + e.name);
  if (check_diamond(built.complex()).holds != e.polytope)
    raise(ErrorKind::InternalInconsistency, "catalog polytope flag mismatch: " + e.name);
  if (is_lattice(built.complex()).holds != e.lattice)
    raise(ErrorKind::InternalInconsistency, "catalog lattice flag mismatch: " + e.name);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  auto polygon_entry = [&](int p) {
    std::uint64_t order = 2 * static_cast<std::uint64_t>(p);
    entries.push_back(make_entry("{" + std::to_string(p) + "}", {p}, universal_polytope({p}),
                                 {p, p}, order, {2, 2}, true, p != 2));
  };
  polygon_entry(2);
  polygon_entry(3);
  polygon_entry(4);
  polygon_entry(5);
  polygon_entry(6);
  polygon_entry(12);

  entries.push_back(make_entry("{3,3}", {3, 3}, universal_polytope({3, 3}), {4, 6, 4}, 24,
                               {2, 2, 2}, true, true));
  entries.push_back(make_entry("{3,4}", {3, 4}, universal_polytope({3, 4}), {6, 12, 8}, 48,
                               {2, 2, 2}, true, true));
  entries.push_back(make_entry("{4,3}", {4, 3}, universal_polytope({4, 3}), {8, 12, 6}, 48,
                               {2, 2, 2}, true, true));
  entries.push_back(make_entry("{3,5}", {3, 5}, universal_polytope({3, 5}), {12, 30, 20}, 120,
                               {2, 2, 2}, true, true));
  entries.push_back(make_entry("{5,3}", {5, 3}, universal_polytope({5, 3}), {20, 30, 12}, 120,
                               {2, 2, 2}, true, true));
  entries.push_back(make_entry("{3,3,3}", {3, 3, 3}, universal_polytope({3, 3, 3}),
                               {5, 10, 10, 5}, 120, {2, 2, 2, 2}, true, true));
  entries.push_back(make_entry("{4,3,3}", {4, 3, 3}, universal_polytope({4, 3, 3}),
                               {16, 32, 24, 8}, 384, {2, 2, 2, 2}, true, true));
  entries.push_back(make_entry("{3,3,4}", {3, 3, 4}, universal_polytope({3, 3, 4}),
                               {8, 24, 32, 16}, 384, {2, 2, 2, 2}, true, true));

  for (CatalogEntry& e : nonpolytope_examples()) entries.push_back(std::move(e));

  // A polytope whose poset is not a lattice: pairs of vertices share two
  // edges.
  entries.push_back(
      make_entry("hemi-octahedron", {}, hemioctahedron(), {3, 6, 4}, 24, {2, 2, 2}, true, false));

  for (const CatalogEntry& e : entries) self_test(e);
  return entries;
}

} // namespace

SubgroupSystem universal_polytope(const std::vector<int>& symbol) {
  if (symbol.size() == 1) {
    int p = symbol[0];
    if (p >= 2 && p <= 12) return polygon(p);
    raise(ErrorKind::UnsupportedType, "polygon {p} supported for 2 <= p <= 12");
  }
  if (symbol == std::vector<int>{3, 3}) return simplex(3);
  if (symbol == std::vector<int>{3, 3, 3}) return simplex(4);
  if (symbol == std::vector<int>{4, 3}) return hypercube(3);
  if (symbol == std::vector<int>{4, 3, 3}) return hypercube(4);
  if (symbol == std::vector<int>{3, 4}) return reversed(hypercube(3));
  if (symbol == std::vector<int>{3, 3, 4}) return reversed(hypercube(4));
  if (symbol == std::vector<int>{3, 5}) return icosahedron();
  if (symbol == std::vector<int>{5, 3}) return reversed(icosahedron());
  std::string text = "{";
  for (std::size_t i = 0; i < symbol.size(); ++i)
    text += (i ? "," : "") + std::to_string(symbol[i]);
  raise(ErrorKind::UnsupportedType, "unsupported universal polytope " + text + "}");
}

std::vector<CatalogEntry> nonpolytope_examples() {
  std::vector<CatalogEntry> entries;
  for (int k = 3; k <= 5; ++k)
    entries.push_back(make_entry("cyclic-" + std::to_string(k), {}, cyclic_system(k), {k},
                                 static_cast<std::uint64_t>(k), {static_cast<std::uint64_t>(k)},
                                 false, true));
  entries.push_back(make_entry("k33", {}, k33_system(), {6, 9}, 18, {2, 3}, false, true));
  entries.push_back(make_entry("skel1({3,3,3})", {},
                               skeleton_system(universal_polytope({3, 3, 3}), 2), {5, 10}, 20,
                               {2, 4}, false, true));

  CatalogEntry negative = make_entry("ip-failure-triple", {}, ip_failure_triple(), {}, 0, {},
                                     false, false);
  negative.positive = false;
  entries.push_back(std::move(negative));
  return entries;
}

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : all_entries())
    if (e.name == name) return &e;
  return nullptr;
}

} // namespace icx
