#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icx/catalog.hpp"
#include "icx/construction.hpp"
#include "icx/error.hpp"

using namespace icx;

TEST_CASE("universal polytopes") {
  CHECK(universal_polytope({3}).gamma().order() == 6);
  CHECK(universal_polytope({4}).gamma().order() == 8);
  CHECK(universal_polytope({12}).gamma().order() == 24);
  CHECK(universal_polytope({2}).gamma().order() == 4);
  CHECK(universal_polytope({3, 3}).gamma().order() == 24);
  CHECK(universal_polytope({4, 3}).gamma().order() == 48);
  CHECK(universal_polytope({3, 4}).gamma().order() == 48);
  CHECK(universal_polytope({3, 5}).gamma().order() == 120);
  CHECK(universal_polytope({5, 3}).gamma().order() == 120);
  CHECK(universal_polytope({3, 3, 3}).gamma().order() == 120);
  CHECK(universal_polytope({4, 3, 3}).gamma().order() == 384);
  CHECK(universal_polytope({3, 3, 4}).gamma().order() == 384);

  for (auto symbol : std::vector<std::vector<int>>{{3}, {5}, {3, 3}, {4, 3}, {3, 5}, {3, 3, 4}})
    CHECK(is_string_cgroup(universal_polytope(symbol)));
}

TEST_CASE("schlafli orders of adjacent generator products") {
  for (auto [symbol, orders] :
       std::vector<std::pair<std::vector<int>, std::vector<int>>>{{{4, 3}, {4, 3}},
                                                                  {{3, 4}, {3, 4}},
                                                                  {{3, 5}, {3, 5}},
                                                                  {{5, 3}, {5, 3}},
                                                                  {{4, 3, 3}, {4, 3, 3}}}) {
    SubgroupSystem sys = universal_polytope(symbol);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(sys.rank()); ++i) {
      Perm a = sys.r(static_cast<int>(i)).elements().back();
      Perm b = sys.r(static_cast<int>(i) + 1).elements().back();
      CHECK(perm_order(compose(a, b)) == orders[i]);
    }
  }
}

TEST_CASE("unsupported symbols") {
  for (auto symbol :
       std::vector<std::vector<int>>{{1}, {13}, {6, 3}, {4, 4}, {5, 3, 3}, {3, 3, 3, 3}, {}}) {
    CHECK_THROWS_AS(universal_polytope(symbol), Error);
    try {
      universal_polytope(symbol);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedType);
    }
  }
}

TEST_CASE("expected counts") {
  BuiltComplex cube = build_complex(universal_polytope({4, 3}));
  CHECK(cube.complex().f_vector() == std::vector<int>{8, 12, 6});
  BuiltComplex octa = build_complex(universal_polytope({3, 4}));
  CHECK(octa.complex().f_vector() == std::vector<int>{6, 12, 8});
  BuiltComplex ico = build_complex(universal_polytope({3, 5}));
  CHECK(ico.complex().f_vector() == std::vector<int>{12, 30, 20});
  BuiltComplex dodeca = build_complex(universal_polytope({5, 3}));
  CHECK(dodeca.complex().f_vector() == std::vector<int>{20, 30, 12});
  BuiltComplex simplex = build_complex(universal_polytope({3, 3, 3}));
  CHECK(simplex.complex().f_vector() == std::vector<int>{5, 10, 10, 5});
  BuiltComplex tesseract = build_complex(universal_polytope({4, 3, 3}));
  CHECK(tesseract.complex().f_vector() == std::vector<int>{16, 32, 24, 8});
}

TEST_CASE("nonpolytope entries") {
  auto entries = nonpolytope_examples();
  REQUIRE(entries.size() == 6); // cyclic-3/4/5, k33, the skeleton, the negative

  const CatalogEntry* c3 = find_entry("cyclic-3");
  REQUIRE(c3 != nullptr);
  CHECK(c3->expected_f_vector == std::vector<int>{3});
  CHECK(c3->expected_k == std::vector<std::uint64_t>{3});

  const CatalogEntry* k33 = find_entry("k33");
  REQUIRE(k33 != nullptr);
  CHECK(k33->expected_flags == 18);
  CHECK(k33->expected_k == std::vector<std::uint64_t>{2, 3});
  CHECK(k33->lattice);
  CHECK(!k33->polytope);

  const CatalogEntry* skel = find_entry("skel1({3,3,3})");
  REQUIRE(skel != nullptr);
  CHECK(skel->expected_f_vector == std::vector<int>{5, 10});
  CHECK(skel->expected_k == std::vector<std::uint64_t>{2, 4});

  const CatalogEntry* negative = find_entry("ip-failure-triple");
  REQUIRE(negative != nullptr);
  CHECK(!negative->positive);
  IntersectionReport report = check_intersection_property(negative->system);
  CHECK(!report.holds);
  CHECK(report.witness->first.to_string() == "{0,1}");
  CHECK(report.witness->second.to_string() == "{1,2}");
}

TEST_CASE("every positive entry passes the whole pipeline") {
  for (const CatalogEntry& e : all_entries()) {
    CAPTURE(e.name);
    if (!e.positive) {
      CHECK(!is_generalized_string_cgroup(e.system).holds);
      continue;
    }
    CHECK(is_generalized_string_cgroup(e.system).holds);
    BuiltComplex built = build_complex(e.system);
    SubgroupSystem derived =
        derive_system(built.complex(), built.action_generators(), built.base_flag());
    ReconstructionReport rec = verify_reconstruction(built.complex(), derived, built.base_flag());
    CHECK(rec.isomorphic);
    CHECK(verify_section_theorem(e.system).holds);
    if (e.polytope) CHECK(check_diamond(built.complex()).holds);
    if (e.polytope && e.expected_k == std::vector<std::uint64_t>(e.expected_k.size(), 2))
      CHECK(e.system.r(-1).order() == 1);
  }
}

TEST_CASE("hemi-octahedron is a polytope but no lattice") {
  const CatalogEntry* hemi = find_entry("hemi-octahedron");
  REQUIRE(hemi != nullptr);
  CHECK(hemi->polytope);
  CHECK(!hemi->lattice);
  CHECK(is_string_cgroup(hemi->system));
  BuiltComplex built = build_complex(hemi->system);
  CHECK(built.complex().f_vector() == std::vector<int>{3, 6, 4});
  // Every vertex pair shares two edges.
  const IncidenceComplex& k = built.complex();
  for (int a : k.faces_of_rank(0))
    for (int b : k.faces_of_rank(0)) {
      if (a >= b) continue;
      int shared = 0;
      for (int e : k.faces_of_rank(1))
        if (k.leq(a, e) && k.leq(b, e)) ++shared;
      CHECK(shared == 2);
    }
}
