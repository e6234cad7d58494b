#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icx/catalog.hpp"
#include "icx/construction.hpp"
#include "icx/derived.hpp"
#include "icx/error.hpp"

using namespace icx;

namespace {

const SubgroupSystem& sys_of(const char* name) { return find_entry(name)->system; }

ExtensionData triangle_to_tetrahedron() {
  ExtensionData data;
  data.base = universal_polytope({3});
  SubgroupSystem tetra = universal_polytope({3, 3});
  data.lambda = tetra.gamma();
  for (int i = -1; i <= 3; ++i) data.candidate_subgroups.push_back(tetra.r(i));
  data.pi = {{Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1)", 3)},
             {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(1 2)", 3)}};
  return data;
}

} // namespace

TEST_CASE("skeleton systems") {
  SUBCASE("edge graph of the 4-simplex") {
    SubgroupSystem skel = skeleton_system(universal_polytope({3, 3, 3}), 2);
    CHECK(skel.rank() == 2);
    CHECK(skel.r(-1).order() == 6);
    CHECK(skel.r(0).order() == 12);
    CHECK(skel.r(1).order() == 24);
    CHECK(is_generalized_string_cgroup(skel).holds);
    BuiltComplex built = build_complex(skel);
    CHECK(built.complex().f_vector() == std::vector<int>{5, 10});
    CHECK(compute_k(skel, 1) == 4);
    CHECK(action_kernel(skel).order() == 1);
  }

  SUBCASE("full skeleton returns the polytope system") {
    SubgroupSystem tetra = universal_polytope({3, 3});
    SubgroupSystem skel = skeleton_system(tetra, 3);
    CHECK(skel.rank() == 3);
    for (int i = -1; i <= 3; ++i) CHECK(skel.r(i).same_group(tetra.r(i)));
  }

  SUBCASE("edge graph of the cube") {
    SubgroupSystem skel = skeleton_system(universal_polytope({4, 3}), 2);
    BuiltComplex built = build_complex(skel);
    CHECK(built.complex().f_vector() == std::vector<int>{8, 12});
    CHECK(compute_k(skel, 1) == 3);
  }

  SUBCASE("edge graph of the tesseract") {
    SubgroupSystem skel = skeleton_system(universal_polytope({4, 3, 3}), 2);
    BuiltComplex built = build_complex(skel);
    CHECK(built.complex().f_vector() == std::vector<int>{16, 32});
    CHECK(k_vector(skel) == std::vector<std::uint64_t>{2, 4});
  }

  SUBCASE("non-polytope systems are rejected") {
    CHECK_THROWS_AS(skeleton_system(sys_of("k33"), 1), Error);
    try {
      skeleton_system(sys_of("k33"), 1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPolytopeSystem);
    }
  }

  SUBCASE("rank bounds") {
    CHECK_THROWS_AS(skeleton_system(universal_polytope({3, 3}), 0), Error);
    CHECK_THROWS_AS(skeleton_system(universal_polytope({3, 3}), 4), Error);
  }
}

TEST_CASE("skeletons are polytope complexes") {
  for (int n = 1; n <= 3; ++n) {
    SubgroupSystem skel = skeleton_system(universal_polytope({3, 3, 3}), n);
    BuiltComplex built = build_complex(skel);
    const IncidenceComplex& k = built.complex();
    for (int facet : k.faces_of_rank(k.rank() - 1))
      CHECK(check_diamond(k.section(k.bottom(), facet)).holds);
  }
}

TEST_CASE("skeleton k parameter counts facets through a ridge") {
  SubgroupSystem poly = universal_polytope({3, 3, 3});
  for (int n = 2; n <= 3; ++n) {
    SubgroupSystem skel = skeleton_system(poly, n);
    BuiltComplex built = build_complex(skel);
    const IncidenceComplex& k = built.complex();
    std::uint64_t expected = compute_k(skel, n - 1);
    for (int ridge : k.faces_of_rank(n - 2)) {
      std::uint64_t count = 0;
      for (int facet : k.faces_of_rank(n - 1))
        if (k.leq(ridge, facet)) ++count;
      CHECK(count == expected);
    }
  }
}

TEST_CASE("co-rank-one skeletons have dihedral ridge stabilizers") {
  // Dropping just the top rank of {p1,...,pn} leaves k = p_n facets around
  // each ridge and R_{n-1} of order 2*p_n.
  for (auto symbol : std::vector<std::vector<int>>{{3, 3}, {4, 3}, {3, 3, 3}, {4, 3, 3}}) {
    SubgroupSystem poly = universal_polytope(symbol);
    int n = poly.rank() - 1;
    SubgroupSystem skel = skeleton_system(poly, n);
    int p = symbol.back();
    CHECK(compute_k(skel, n - 1) == static_cast<std::uint64_t>(p));
    CHECK(skel.r(n - 1).order() == static_cast<std::uint64_t>(2 * p));
  }
}

TEST_CASE("skeleton facet kernel") {
  SUBCASE("edge skeleton of the 4-simplex") {
    SubgroupSystem skel = skeleton_system(universal_polytope({3, 3, 3}), 2);
    SkeletonKernelReport report = verify_skeleton_kernel(skel);
    CHECK(report.holds);
    CHECK(report.kernel_is_flag_stabilizer);
    CHECK(report.facet_stabilizer_order == 12);
    CHECK(report.kernel_order == 6);
    CHECK(report.quotient_order == 2); // the facet is a segment
    CHECK(report.facet_flag_count == 2);
    CHECK(report.quotient_is_string_cgroup);
  }

  SUBCASE("two-skeleton of the 4-simplex") {
    SubgroupSystem skel = skeleton_system(universal_polytope({3, 3, 3}), 3);
    SkeletonKernelReport report = verify_skeleton_kernel(skel);
    CHECK(report.holds);
    CHECK(report.quotient_order == 6); // triangle facets
  }

  SUBCASE("full skeleton has trivial kernel") {
    SubgroupSystem skel = skeleton_system(universal_polytope({3, 3}), 3);
    SkeletonKernelReport report = verify_skeleton_kernel(skel);
    CHECK(report.holds);
    CHECK(report.kernel_order == 1);
    CHECK(report.quotient_order == report.facet_stabilizer_order);
  }

  SUBCASE("k33 has segment facets, so it counts as a polytope complex") {
    SkeletonKernelReport report = verify_skeleton_kernel(sys_of("k33"));
    CHECK(report.holds);
    CHECK(report.kernel_order == 4);
    CHECK(report.quotient_order == 2);
  }

  SUBCASE("non-polytope facets are rejected") {
    // Two edges sharing three vertices: the facet sections have three
    // vertices each and break the diamond condition.
    PermGroup r0 = PermGroup::generated(5, {Perm::from_cycles("(0 1 2)", 5)});
    PermGroup r1 = PermGroup::generated(5, {Perm::from_cycles("(3 4)", 5)});
    SubgroupSystem sys = SubgroupSystem::create(
        join_groups(r0, r1), {PermGroup::trivial(5), r0, r1, PermGroup::trivial(5)});
    BuiltComplex built = build_complex(sys);
    CHECK(built.complex().f_vector() == std::vector<int>{3, 2});
    CHECK_THROWS_AS(verify_skeleton_kernel(sys), Error);
    try {
      verify_skeleton_kernel(sys);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPolytopeComplex);
    }
  }
}

TEST_CASE("extension of the triangle to the tetrahedron") {
  ExtensionData data = triangle_to_tetrahedron();
  ExtensionReport report = verify_extension(data, /*check_lattice=*/true);
  CHECK(report.ok);
  for (const char* name : {"a-structure", "b-commutation", "c-well-defined", "c-surjective",
                           "c1-preimages", "c2-upper-subgroups", "candidate-gscg",
                           "facets-isomorphic", "ridges-in-two-facets", "lattice-condition",
                           "lattice-condition-cross-check", "lattice-poset"}) {
    const auto* item = report.find(name);
    REQUIRE(item != nullptr);
    CHECK(item->holds);
  }
  CHECK(report.extension_f_vector == std::vector<int>{4, 6, 4});
  CHECK(report.facets_checked == 4);

  // The number of base facets matches the symmetric-group degree.
  BuiltComplex base_built = build_complex(data.base);
  CHECK(facet_count(base_built.complex()) == 3);
  CHECK(data.lambda.order() == 24); // |S_{f+1}| with f = 3

  // pi is injective here, so the base group embeds.
  PermGroup lambda_low = PermGroup::generated(
      4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(1 2)", 4)});
  CHECK(lambda_low.order() == data.base.gamma().order());
}

TEST_CASE("extension of the square to the cube") {
  ExtensionData data;
  data.base = universal_polytope({4});
  SubgroupSystem cube = universal_polytope({4, 3});
  data.lambda = cube.gamma();
  for (int i = -1; i <= 3; ++i) data.candidate_subgroups.push_back(cube.r(i));
  data.pi = {{cube.r(0).elements().back(), data.base.r(0).elements().back()},
             {cube.r(1).elements().back(), data.base.r(1).elements().back()}};
  ExtensionReport report = verify_extension(data, /*check_lattice=*/true);
  CHECK(report.ok);
  CHECK(report.extension_f_vector == std::vector<int>{8, 12, 6});
  CHECK(report.facets_checked == 6);
  CHECK(report.find("lattice-condition")->holds);
  CHECK(report.find("lattice-poset")->holds);
}

TEST_CASE("extension negatives") {
  SUBCASE("collapsed top subgroup fails (a)") {
    ExtensionData data = triangle_to_tetrahedron();
    data.candidate_subgroups[3] = data.candidate_subgroups[0]; // R'_2 := R'_-1
    // Lambda must still be generated by the family; shrink it accordingly.
    std::vector<Perm> gens;
    for (const PermGroup& g : data.candidate_subgroups)
      for (const Perm& p : g.generators()) gens.push_back(p);
    data.lambda = PermGroup::generated(4, gens);
    ExtensionReport report = verify_extension(data, false);
    CHECK(!report.ok);
    CHECK(!report.find("a-structure")->holds);
  }

  SUBCASE("non-surjective pi fails (c)") {
    ExtensionData data = triangle_to_tetrahedron();
    // Send both generators to the same transposition: the sign-style map
    // onto a subgroup of order two.
    data.pi = {{Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1)", 3)},
               {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(0 1)", 3)}};
    ExtensionReport report = verify_extension(data, false);
    CHECK(!report.ok);
    CHECK(report.find("c-well-defined")->holds);
    CHECK(!report.find("c-surjective")->holds);
  }

  SUBCASE("inconsistent pi is caught") {
    ExtensionData data = triangle_to_tetrahedron();
    // (0 1) -> (0 1 2) cannot extend to a homomorphism: order 2 -> order 3.
    data.pi = {{Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2)", 3)},
               {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(1 2)", 3)}};
    ExtensionReport report = verify_extension(data, false);
    CHECK(!report.ok);
    CHECK(!report.find("c-well-defined")->holds);
  }

  SUBCASE("non-commuting distant subgroups fail (b)") {
    ExtensionData data = triangle_to_tetrahedron();
    // Replace R'_2 = <(2 3)> with <(1 3)>, which overlaps R'_0 in support.
    data.candidate_subgroups[3] =
        PermGroup::generated(4, {Perm::from_cycles("(1 3)", 4)});
    std::vector<Perm> gens;
    for (const PermGroup& g : data.candidate_subgroups)
      for (const Perm& p : g.generators()) gens.push_back(p);
    data.lambda = PermGroup::generated(4, gens);
    ExtensionReport report = verify_extension(data, false);
    CHECK(!report.ok);
    CHECK(report.find("a-structure")->holds);
    CHECK(!report.find("b-commutation")->holds);
  }

  SUBCASE("preimage mismatch fails (c1)") {
    ExtensionData data = triangle_to_tetrahedron();
    // Swap the images of the two generators; pi is still a surjective
    // homomorphism but pi^-1(R_0) is now R'_1.
    data.pi = {{Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(1 2)", 3)},
               {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(0 1)", 3)}};
    ExtensionReport report = verify_extension(data, false);
    CHECK(!report.ok);
    CHECK(report.find("c-surjective")->holds);
    CHECK(!report.find("c1-preimages")->holds);
  }
}

TEST_CASE("facet counts") {
  BuiltComplex triangle = build_complex(universal_polytope({3}));
  CHECK(facet_count(triangle.complex()) == 3);
  BuiltComplex tetra = build_complex(universal_polytope({3, 3}));
  CHECK(facet_count(tetra.complex()) == 4);
  BuiltComplex c5 = build_complex(sys_of("cyclic-5"));
  CHECK(facet_count(c5.complex()) == 5);
}
