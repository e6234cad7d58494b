#include "icx/derived.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "icx/construction.hpp"
#include "icx/error.hpp"

namespace icx {

SubgroupSystem skeleton_system(const SubgroupSystem& polytope_sys, int n) {
  if (!is_string_cgroup(polytope_sys))
    raise(ErrorKind::NotPolytopeSystem, "skeletons need a string C-group");
  const int m = polytope_sys.rank();
  if (n < 1 || n > m)
    raise(ErrorKind::InvalidInput, "skeleton rank must lie in 1.." + std::to_string(m));

  std::vector<Perm> tail;
  for (int i = n; i <= m - 1; ++i) tail.push_back(polytope_sys.r(i).elements().back());

  const int degree = polytope_sys.degree();
  auto with_tail = [&](std::vector<Perm> gens) {
    gens.insert(gens.end(), tail.begin(), tail.end());
    return PermGroup::generated(degree, std::move(gens));
  };

  std::vector<PermGroup> subgroups;
  PermGroup stabilizer = with_tail({});
  subgroups.push_back(stabilizer);
  for (int i = 0; i <= n - 1; ++i)
    subgroups.push_back(with_tail({polytope_sys.r(i).elements().back()}));
  subgroups.push_back(stabilizer);
  return SubgroupSystem::create(polytope_sys.gamma(), std::move(subgroups));
}

SkeletonKernelReport verify_skeleton_kernel(const SubgroupSystem& skel_sys) {
  SkeletonKernelReport report;
  BuiltComplex built = build_complex(skel_sys);
  const IncidenceComplex& k = built.complex();
  const int n = skel_sys.rank();

  for (int facet : k.faces_of_rank(n - 1)) {
    Verdict diamond = check_diamond(k.section(k.bottom(), facet));
    if (!diamond.holds)
      raise(ErrorKind::NotPolytopeComplex,
            "facet " + std::to_string(facet) + " is not a polytope: " + diamond.witness);
  }

  const PermGroup& facet_stab = skel_sys.stabilizer_of_rank(n - 1);
  report.facet_stabilizer_order = facet_stab.order();

  int base_facet = built.base_flag()[static_cast<std::size_t>(n - 1) + 1];
  IncidenceComplex section = k.section(k.bottom(), base_facet);

  // Same member order as IncidenceComplex::section: by (rank, id).
  std::vector<int> members;
  for (const Face& f : k.faces())
    if (k.leq(k.bottom(), f.id) && k.leq(f.id, base_facet)) members.push_back(f.id);
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return std::pair(k.face(a).rank, a) < std::pair(k.face(b).rank, b);
  });
  std::map<int, int> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);

  auto restrict_map = [&](const std::vector<int>& face_map) {
    std::vector<int> out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      out[i] = local.at(face_map[static_cast<std::size_t>(members[i])]);
    return out;
  };

  std::uint64_t kernel = 0;
  bool kernel_inside_stab = true;
  for (const Perm& g : facet_stab.elements()) {
    auto fm = built.face_map(g);
    bool fixes_section = true;
    for (int mem : members)
      if (fm[static_cast<std::size_t>(mem)] != mem) { fixes_section = false; break; }
    if (fixes_section) {
      ++kernel;
      if (!skel_sys.r(-1).contains(g)) kernel_inside_stab = false;
    }
  }
  report.kernel_order = kernel;
  report.kernel_is_flag_stabilizer =
      kernel_inside_stab && kernel == skel_sys.r(-1).order();
  report.quotient_order = facet_stab.order() / kernel;
  report.facet_flag_count = section.flags().size();

  std::vector<std::vector<int>> induced;
  for (const Perm& g : facet_stab.generators()) induced.push_back(restrict_map(built.face_map(g)));

  Flag base;
  for (int r = -1; r <= section.rank(); ++r)
    base.push_back(local.at(built.base_flag()[static_cast<std::size_t>(r) + 1]));

  try {
    SubgroupSystem quotient = derive_system(section, induced, base);
    report.quotient_is_string_cgroup =
        is_string_cgroup(quotient) && quotient.gamma().order() == report.quotient_order;
    if (!report.quotient_is_string_cgroup) report.detail = "induced facet group is not a string C-group";
  } catch (const Error& e) {
    report.detail = e.what();
  }

  report.holds = report.kernel_is_flag_stabilizer && report.quotient_is_string_cgroup &&
                 report.quotient_order == report.facet_flag_count;
  return report;
}

const ExtensionReport::Item* ExtensionReport::find(const std::string& name) const {
  for (const Item& item : conditions)
    if (item.name == name) return &item;
  return nullptr;
}

namespace {

bool in_sorted(const std::vector<Perm>& sorted, const Perm& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

std::vector<Perm> translate(const std::vector<Perm>& set, const Perm& by) {
  std::vector<Perm> out;
  out.reserve(set.size());
  for (const Perm& x : set) out.push_back(compose(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

ExtensionReport verify_extension(const ExtensionData& data, bool check_lattice) {
  ExtensionReport report;
  const int n = data.base.rank();
  const int degree = data.lambda.degree();
  if (data.candidate_subgroups.size() != static_cast<std::size_t>(n) + 3)
    raise(ErrorKind::InvalidInput, "candidate needs subgroups R'_-1..R'_{n+1}");
  for (const PermGroup& g : data.candidate_subgroups)
    if (g.degree() != degree)
      raise(ErrorKind::InvalidInput, "candidate subgroup degree differs from the group");
  auto rc = [&](int i) -> const PermGroup& {
    return data.candidate_subgroups[static_cast<std::size_t>(i) + 1];
  };

  auto push = [&](std::string name, bool holds, std::string witness) {
    report.conditions.push_back({std::move(name), holds, holds ? "" : std::move(witness)});
    return report.conditions.back().holds;
  };

  // (a) structure
  bool a_ok = true;
  std::string a_why;
  if (!rc(-1).same_group(rc(n + 1))) { a_ok = false; a_why = "R'_-1 != R'_{n+1}"; }
  if (a_ok && (!rc(-1).is_subgroup_of(rc(n)) || rc(-1).order() >= rc(n).order())) {
    a_ok = false;
    a_why = "R'_-1 is not a proper subgroup of R'_n";
  }
  std::vector<Perm> low_gens, all_gens;
  for (int i = -1; i <= n + 1; ++i) {
    const auto& g = rc(i).generators();
    all_gens.insert(all_gens.end(), g.begin(), g.end());
    if (i <= n - 1) low_gens.insert(low_gens.end(), g.begin(), g.end());
  }
  PermGroup lambda_low = PermGroup::generated(degree, low_gens);
  if (a_ok && !PermGroup::generated(degree, all_gens).same_group(data.lambda)) {
    a_ok = false;
    a_why = "candidate subgroups do not generate the group";
  }
  if (a_ok && lambda_low.order() == data.lambda.order()) {
    a_ok = false;
    a_why = "the group equals its facet subgroup";
  }
  push("a-structure", a_ok, a_why);

  // (b) commutation of distant subgroups: 0 <= i < j-1 <= n-1.
  bool b_ok = true;
  std::string b_why;
  for (int i = 0; b_ok && i <= n - 1; ++i)
    for (int j = i + 2; b_ok && j <= n; ++j)
      if (!product_sets_equal(rc(i), rc(j))) {
        b_ok = false;
        b_why = "R'_" + std::to_string(i) + " and R'_" + std::to_string(j) + " do not commute";
      }
  push("b-commutation", b_ok, b_why);

  // (c) the homomorphism: well-defined, surjective, compatible
  std::map<Perm, Perm> image;
  bool pi_ok = true;
  std::string pi_why;
  {
    std::vector<Perm> domain_gens;
    for (const auto& [g, img] : data.pi) {
      domain_gens.push_back(g);
      if (g.degree() != degree || img.degree() != data.base.degree()) {
        pi_ok = false;
        pi_why = "pi generator degrees do not match";
      } else if (!lambda_low.contains(g)) {
        pi_ok = false;
        pi_why = "pi generator outside the facet subgroup";
      } else if (!data.base.gamma().contains(img)) {
        pi_ok = false;
        pi_why = "pi image outside the base group";
      }
    }
    if (pi_ok && !PermGroup::generated(degree, domain_gens).same_group(lambda_low)) {
      pi_ok = false;
      pi_why = "pi generators do not generate the facet subgroup";
    }
  }
  if (pi_ok) {
    image.emplace(Perm::identity(degree), Perm::identity(data.base.degree()));
    std::queue<Perm> frontier;
    frontier.push(Perm::identity(degree));
    while (!frontier.empty() && pi_ok) {
      Perm g = frontier.front();
      frontier.pop();
      const Perm& img_g = image.at(g);
      for (const auto& [s, t] : data.pi) {
        Perm gs = compose(g, s);
        Perm img_gs = compose(img_g, t);
        auto it = image.find(gs);
        if (it == image.end()) {
          image.emplace(gs, img_gs);
          frontier.push(gs);
        } else if (it->second != img_gs) {
          pi_ok = false;
          pi_why = "pi is not well-defined at " + gs.cycles();
          break;
        }
      }
    }
    if (pi_ok && image.size() != lambda_low.order()) {
      pi_ok = false;
      pi_why = "pi closure misses part of the facet subgroup";
    }
  }
  push("c-well-defined", pi_ok, pi_why);

  bool surjective = pi_ok;
  if (pi_ok) {
    std::set<Perm> values;
    for (const auto& [g, v] : image) values.insert(v);
    surjective = values.size() == data.base.gamma().order();
  }
  push("c-surjective", surjective,
       pi_ok ? "pi image is a proper subgroup of the base group" : "pi unavailable");

  bool c1_ok = pi_ok;
  std::string c1_why;
  if (pi_ok) {
    for (int i = -1; c1_ok && i <= n - 1; ++i) {
      std::vector<Perm> preimage;
      for (const auto& [g, v] : image)
        if (data.base.r(i).contains(v)) preimage.push_back(g);
      std::sort(preimage.begin(), preimage.end());
      if (preimage != rc(i).elements()) {
        c1_ok = false;
        c1_why = "pi^-1(R_" + std::to_string(i) + ") != R'_" + std::to_string(i);
      }
    }
  }
  push("c1-preimages", c1_ok, pi_ok ? c1_why : "pi unavailable");

  bool c2_ok = pi_ok;
  std::string c2_why;
  if (pi_ok) {
    for (int i = -1; c2_ok && i <= n; ++i) {
      std::vector<Perm> upper_gens;
      for (int j = std::max(i, -1); j <= n + 1; ++j) {
        const auto& g = rc(j).generators();
        upper_gens.insert(upper_gens.end(), g.begin(), g.end());
      }
      PermGroup upper_i = PermGroup::generated(degree, std::move(upper_gens));
      std::vector<Perm> lhs;
      for (const Perm& x : upper_i.elements())
        if (lambda_low.contains(x)) lhs.push_back(x);
      std::sort(lhs.begin(), lhs.end());

      const PermGroup& base_upper = data.base.upper(i);
      std::vector<Perm> rhs;
      for (const auto& [g, v] : image)
        if (base_upper.contains(v)) rhs.push_back(g);
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs) {
        c2_ok = false;
        c2_why = "upper-" + std::to_string(i) + " intersection does not match pi preimage";
      }
    }
  }
  push("c2-upper-subgroups", c2_ok, pi_ok ? c2_why : "pi unavailable");

  report.ok = a_ok && b_ok && pi_ok && surjective && c1_ok && c2_ok;
  if (!report.ok) return report;

  // Build the extension and certify its facets.
  SubgroupSystem candidate = SubgroupSystem::create(data.lambda, data.candidate_subgroups);
  GscgReport gscg = is_generalized_string_cgroup(candidate);
  push("candidate-gscg", gscg.holds, "candidate fails the C-group checks");
  if (!gscg.holds) {
    report.ok = false;
    return report;
  }

  BuiltComplex extension = build_complex(candidate);
  const IncidenceComplex& l = extension.complex();
  report.extension_f_vector = l.f_vector();

  BuiltComplex base_built = build_complex(data.base);
  bool facets_ok = true;
  for (int facet : l.faces_of_rank(n)) {
    ++report.facets_checked;
    if (!are_isomorphic(l.section(l.bottom(), facet), base_built.complex())) {
      facets_ok = false;
      break;
    }
  }
  push("facets-isomorphic", facets_ok, "a facet differs from the base complex");
  report.ok = facets_ok;

  bool ridges_ok = true;
  for (int ridge : l.faces_of_rank(n - 1)) {
    int count = 0;
    for (int facet : l.faces_of_rank(n))
      if (l.leq(ridge, facet)) ++count;
    if (count != 2) ridges_ok = false;
  }
  push("ridges-in-two-facets", ridges_ok, "a ridge does not lie in exactly two facets");

  if (check_lattice) {
    // Quantified product-set condition, evaluated literally over element sets.
    bool d_ok = true;
    std::string d_why;
    const auto& low_elems = lambda_low.elements();
    for (int i = 0; d_ok && i <= n; ++i) {
      for (int j = i; d_ok && j <= n; ++j) {
        for (int kk = j + 1; d_ok && kk <= n; ++kk) {
          auto first_excl = product_of_sets(candidate.upper(i + 1).elements(),
                                            candidate.lower(j - 1).elements());
          std::vector<std::vector<Perm>> other_excl;
          for (int l = j + 1; l <= kk - 1; ++l) {
            auto part = product_of_sets(candidate.upper(i + 1).elements(),
                                        candidate.lower(l - 1).elements());
            other_excl.push_back(product_of_sets(
                part, candidate.distinguished(IndexSet::interval(n + 1, j + 1, kk - 1)).elements()));
          }
          auto rhs = product_of_sets(low_elems, candidate.upper(kk + 1).elements());
          const auto& upper_j1 = candidate.upper(j + 1).elements();
          auto base_prod = product_of_sets(low_elems, candidate.upper(i + 1).elements());

          for (const Perm& tau : candidate.lower(kk - 1).elements()) {
            if (in_sorted(first_excl, tau)) continue;
            bool excluded = false;
            for (const auto& s : other_excl)
              if (in_sorted(s, tau)) { excluded = true; break; }
            if (excluded) continue;
            auto shifted = translate(base_prod, tau);
            for (const Perm& y : upper_j1) {
              if (in_sorted(shifted, y) && !in_sorted(rhs, y)) {
                d_ok = false;
                d_why = "inclusion fails at (i,j,k)=(" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(kk) + "), tau=" + tau.cycles();
                break;
              }
            }
            if (!d_ok) break;
          }
        }
      }
    }
    push("lattice-condition", d_ok, d_why);

    // Cross-check: the same condition with the hypothesis stated through
    // suprema in the base complex.
    bool d_sup_ok = true;
    for (int i = 0; d_sup_ok && i <= n; ++i) {
      for (int j = i; d_sup_ok && j <= n; ++j) {
        for (int kk = j + 1; d_sup_ok && kk <= n; ++kk) {
          auto rhs = product_of_sets(low_elems, candidate.upper(kk + 1).elements());
          const auto& upper_j1 = candidate.upper(j + 1).elements();
          auto base_prod = product_of_sets(low_elems, candidate.upper(i + 1).elements());
          const IncidenceComplex& bc = base_built.complex();
          int face_j = base_built.base_flag()[static_cast<std::size_t>(j) + 1];
          int face_k = base_built.base_flag()[static_cast<std::size_t>(kk) + 1];
          for (const Perm& tau : low_elems) {
            int face_i = base_built.face_of(i, image.at(tau));
            std::vector<int> uppers;
            for (const Face& f : bc.faces())
              if (bc.leq(face_j, f.id) && bc.leq(face_i, f.id)) uppers.push_back(f.id);
            int supremum = -1, minimal_count = 0;
            for (int x : uppers) {
              bool is_minimal = true;
              for (int y : uppers)
                if (y != x && bc.leq(y, x)) { is_minimal = false; break; }
              if (is_minimal) { ++minimal_count; supremum = x; }
            }
            if (minimal_count != 1 || supremum != face_k) continue;
            auto shifted = translate(base_prod, tau);
            for (const Perm& y : upper_j1) {
              if (in_sorted(shifted, y) && !in_sorted(rhs, y)) { d_sup_ok = false; break; }
            }
            if (!d_sup_ok) break;
          }
        }
      }
    }
    push("lattice-condition-cross-check", d_sup_ok == d_ok,
         "supremum form disagrees with the product-set form");

    LatticeVerdict poset = is_lattice(l);
    push("lattice-poset", poset.holds, "extension poset is not a lattice");
  }
  return report;
}

int facet_count(const IncidenceComplex& k) {
  return static_cast<int>(k.faces_of_rank(k.rank() - 1).size());
}

} // namespace icx
