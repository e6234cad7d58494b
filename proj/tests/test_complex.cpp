#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icx/complex.hpp"
#include "icx/error.hpp"
#include "icx/limits.hpp"

using namespace icx;

namespace {

// Polygon complex with the given number of doubled-up vertices and edges;
// edges[i] = {a, b} joins vertices a and b (vertex face ids start at 1).
IncidenceComplex rank2_complex(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Face> faces;
  faces.push_back({0, -1, "bot"});
  for (int v = 0; v < vertices; ++v) faces.push_back({1 + v, 0, "v" + std::to_string(v)});
  int first_edge = 1 + vertices;
  for (std::size_t e = 0; e < edges.size(); ++e)
    faces.push_back({first_edge + static_cast<int>(e), 1, "e" + std::to_string(e)});
  int top = first_edge + static_cast<int>(edges.size());
  faces.push_back({top, 2, "top"});

  std::vector<std::pair<int, int>> covers;
  for (int v = 0; v < vertices; ++v) covers.push_back({0, 1 + v});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    covers.push_back({1 + edges[e].first, first_edge + static_cast<int>(e)});
    covers.push_back({1 + edges[e].second, first_edge + static_cast<int>(e)});
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    covers.push_back({first_edge + static_cast<int>(e), top});
  return IncidenceComplex::from_covers(2, faces, covers);
}

IncidenceComplex triangle() { return rank2_complex(3, {{0, 1}, {1, 2}, {0, 2}}); }

IncidenceComplex k33() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  return rank2_complex(6, edges);
}

IncidenceComplex tetrahedron() {
  // bottom 0; vertices 1..4; edges 5..10; triangles 11..14; top 15.
  std::vector<Face> faces;
  faces.push_back({0, -1, ""});
  for (int v = 0; v < 4; ++v) faces.push_back({1 + v, 0, "v" + std::to_string(v)});
  std::vector<std::pair<int, int>> edge_list = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int e = 0; e < 6; ++e) faces.push_back({5 + e, 1, "e" + std::to_string(e)});
  std::vector<std::vector<int>> tri_list = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int t = 0; t < 4; ++t) faces.push_back({11 + t, 2, "t" + std::to_string(t)});
  faces.push_back({15, 3, ""});

  std::vector<std::pair<int, int>> covers;
  for (int v = 0; v < 4; ++v) covers.push_back({0, 1 + v});
  for (int e = 0; e < 6; ++e) {
    covers.push_back({1 + edge_list[static_cast<std::size_t>(e)].first, 5 + e});
    covers.push_back({1 + edge_list[static_cast<std::size_t>(e)].second, 5 + e});
  }
  for (int t = 0; t < 4; ++t) {
    const auto& tri = tri_list[static_cast<std::size_t>(t)];
    for (int e = 0; e < 6; ++e) {
      auto [a, b] = edge_list[static_cast<std::size_t>(e)];
      if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b))
        covers.push_back({5 + e, 11 + t});
    }
  }
  for (int t = 0; t < 4; ++t) covers.push_back({11 + t, 15});
  return IncidenceComplex::from_covers(3, faces, covers);
}

std::vector<std::vector<int>> s4_face_action() {
  // Face maps of the vertex transpositions (0 1), (1 2), (2 3) on the
  // tetrahedron complex above.
  auto apply = [](const std::vector<int>& vmap) {
    std::vector<std::pair<int, int>> edge_list = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> tri_list = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::vector<int> out(16);
    out[0] = 0;
    out[15] = 15;
    for (int v = 0; v < 4; ++v) out[static_cast<std::size_t>(1 + v)] = 1 + vmap[static_cast<std::size_t>(v)];
    auto edge_index = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (int e = 0; e < 6; ++e)
        if (edge_list[static_cast<std::size_t>(e)] == std::pair(a, b)) return e;
      return -1;
    };
    for (int e = 0; e < 6; ++e) {
      auto [a, b] = edge_list[static_cast<std::size_t>(e)];
      out[static_cast<std::size_t>(5 + e)] =
          5 + edge_index(vmap[static_cast<std::size_t>(a)], vmap[static_cast<std::size_t>(b)]);
    }
    for (int t = 0; t < 4; ++t) {
      std::vector<int> img;
      for (int v : tri_list[static_cast<std::size_t>(t)]) img.push_back(vmap[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      for (int u = 0; u < 4; ++u)
        if (tri_list[static_cast<std::size_t>(u)] == img) out[static_cast<std::size_t>(11 + t)] = 11 + u;
    }
    return out;
  };
  return {apply({1, 0, 2, 3}), apply({0, 2, 1, 3}), apply({0, 1, 3, 2})};
}

} // namespace

TEST_CASE("from_covers validation") {
  CHECK(triangle().face_count() == 8);

  SUBCASE("two least faces") {
    std::vector<Face> faces{{0, -1, ""}, {1, -1, ""}, {2, 0, ""}, {3, 1, ""}};
    CHECK_THROWS_AS(IncidenceComplex::from_covers(1, faces, {}), Error);
  }

  SUBCASE("rank skipping cover") {
    std::vector<Face> faces{{0, -1, ""}, {1, 0, ""}, {2, 1, ""}, {3, 2, ""}};
    CHECK_THROWS_AS(IncidenceComplex::from_covers(2, faces, {{0, 2}}), Error);
    try {
      IncidenceComplex::from_covers(2, faces, {{0, 2}});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidPoset);
    }
  }

  SUBCASE("k33 builds") {
    IncidenceComplex k = k33();
    CHECK(k.f_vector() == std::vector<int>{6, 9});
  }
}

TEST_CASE("flags and adjacency") {
  SUBCASE("triangle") {
    IncidenceComplex k = triangle();
    auto flags = k.flags();
    CHECK(flags.size() == 6);
    for (const Flag& f : flags)
      for (int i = 0; i <= 1; ++i) CHECK(k.adjacent_flags(f, i).size() == 1);
  }

  SUBCASE("k33") {
    IncidenceComplex k = k33();
    auto flags = k.flags();
    CHECK(flags.size() == 18);
    for (const Flag& f : flags) {
      CHECK(k.adjacent_flags(f, 0).size() == 1);
      CHECK(k.adjacent_flags(f, 1).size() == 2);
    }
  }

  SUBCASE("tetrahedron") { CHECK(tetrahedron().flags().size() == 24); }
}

TEST_CASE("axioms") {
  SUBCASE("tetrahedron") {
    IncidenceComplex k = tetrahedron();
    CHECK(check_I2(k).holds);
    CHECK(check_I4(k).holds);
    CHECK(check_diamond(k).holds);
  }

  SUBCASE("k33 breaks the diamond at rank 1") {
    IncidenceComplex k = k33();
    CHECK(check_I2(k).holds);
    CHECK(check_I4(k).holds);
    CHECK(!check_diamond(k).holds);
  }

  SUBCASE("rank one with three vertices") {
    std::vector<Face> faces{{0, -1, ""}, {1, 0, ""}, {2, 0, ""}, {3, 0, ""}, {4, 1, ""}};
    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    IncidenceComplex k = IncidenceComplex::from_covers(1, faces, covers);
    CHECK(check_I4(k).holds);
    CHECK(!check_diamond(k).holds);
    CHECK(check_strongly_connected(k).holds); // rank 1 counts as connected
    CHECK(check_strongly_flag_connected(k).holds);
  }

  SUBCASE("broken chain fails I2") {
    // A vertex with no edge above it.
    std::vector<Face> faces{{0, -1, ""}, {1, 0, ""}, {2, 0, ""}, {3, 1, ""}, {4, 2, ""}};
    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {3, 4}};
    IncidenceComplex k = IncidenceComplex::from_covers(2, faces, covers);
    CHECK(!check_I2(k).holds);
  }
}

TEST_CASE("connectivity") {
  SUBCASE("catalog style complexes connect") {
    for (const IncidenceComplex& k : {triangle(), k33(), tetrahedron()}) {
      CHECK(check_connected(k).holds);
      CHECK(check_strongly_connected(k).holds);
      CHECK(check_flag_connected(k).holds);
      CHECK(check_strongly_flag_connected(k).holds);
    }
  }

  SUBCASE("two triangles glued only through the improper faces") {
    IncidenceComplex k =
        rank2_complex(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(!check_connected(k).holds);
    CHECK(!check_flag_connected(k).holds);
    CHECK(!check_strongly_connected(k).holds);
    CHECK(!check_strongly_flag_connected(k).holds);
  }
}

TEST_CASE("equivalence of the two strong connectivity definitions") {
  // Randomized small ranked posets satisfying the chain axioms: both
  // formulations must agree.
  std::mt19937 rng(99);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    int vertices = 2 + static_cast<int>(rng() % 3);
    int edge_count = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < edge_count; ++e) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(vertices));
      int b = static_cast<int>(rng() % static_cast<unsigned>(vertices));
      if (a == b) continue;
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    if (edges.empty()) continue;
    // Every vertex must lie under some edge for I2.
    std::vector<bool> used(static_cast<std::size_t>(vertices), false);
    for (auto [a, b] : edges) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    if (std::count(used.begin(), used.end(), true) != vertices) continue;
    IncidenceComplex k = rank2_complex(vertices, edges);
    if (!check_I2(k).holds) continue;
    ++tested;
    CHECK(check_strongly_connected(k).holds == check_strongly_flag_connected(k).holds);
    CHECK(check_connected(k).holds == check_flag_connected(k).holds);
  }
  CHECK(tested >= 30);
}

TEST_CASE("chains") {
  IncidenceComplex tet = tetrahedron();

  SUBCASE("make_chain sorts and validates") {
    Chain c = tet.make_chain({11, 1, 5}); // triangle, vertex, edge
    CHECK(c.faces == std::vector<int>{1, 5, 11});
    CHECK_THROWS_AS(tet.make_chain({1, 2}), Error);  // same rank twice
    CHECK_THROWS_AS(tet.make_chain({1, 10}), Error); // incomparable
  }

  SUBCASE("every subchain of a flag extends back to a flag") {
    for (const IncidenceComplex& k : {triangle(), k33(), tetrahedron()}) {
      auto flags = k.flags();
      const int width = k.rank() + 2;
      for (const Flag& flag : flags) {
        for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
          std::vector<int> sub;
          for (int p = 0; p < width; ++p)
            if ((mask >> p) & 1u) sub.push_back(flag[static_cast<std::size_t>(p)]);
          auto extended = k.extend_to_flag(k.make_chain(sub));
          REQUIRE(extended.has_value());
          for (int id : sub)
            CHECK((*extended)[static_cast<std::size_t>(k.face(id).rank) + 1] == id);
          CHECK(std::binary_search(flags.begin(), flags.end(), *extended));
        }
      }
    }
  }

  SUBCASE("a dead-end chain has no completion") {
    // Vertex 2 has no edge above it.
    std::vector<Face> faces{{0, -1, ""}, {1, 0, ""}, {2, 0, ""}, {3, 1, ""}, {4, 2, ""}};
    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {3, 4}};
    IncidenceComplex k = IncidenceComplex::from_covers(2, faces, covers);
    CHECK(!k.extend_to_flag(k.make_chain({2})).has_value());
    CHECK(k.extend_to_flag(k.make_chain({1})).has_value());
    CHECK(!check_I2(k).holds);
  }
}

TEST_CASE("face cap raises resource limit") {
  auto saved = limits::max_faces();
  limits::set_max_faces(4);
  CHECK_THROWS_AS(triangle(), Error);
  try {
    triangle();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  limits::set_max_faces(saved);
}

TEST_CASE("lattice test") {
  CHECK(is_lattice(tetrahedron()).holds);
  CHECK(is_lattice(k33()).holds);

  SUBCASE("doubled edge breaks the join") {
    IncidenceComplex k = rank2_complex(2, {{0, 1}, {0, 1}});
    LatticeVerdict verdict = is_lattice(k);
    CHECK(!verdict.holds);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->first == 1);
    CHECK(verdict.witness->second == 2);
    CHECK(verdict.which == "join");
  }
}

TEST_CASE("sections") {
  IncidenceComplex tet = tetrahedron();

  SUBCASE("consecutive ranks give the two-face chain") {
    IncidenceComplex s = tet.section(1, 5); // vertex 0 under edge {0,1}
    CHECK(s.rank() == 0);
    CHECK(s.face_count() == 2);
    CHECK(s.flags().size() == 1);
  }

  SUBCASE("vertex figure is a triangle") {
    IncidenceComplex figure = tet.section(1, 15);
    CHECK(figure.rank() == 2);
    CHECK(figure.f_vector() == std::vector<int>{3, 3});
    CHECK(are_isomorphic(figure, triangle()).has_value());
  }

  SUBCASE("k33 vertex co-face is the rank-1 complex on three vertices") {
    IncidenceComplex k = k33();
    IncidenceComplex cofc = k.section(1, k.top());
    CHECK(cofc.rank() == 1);
    CHECK(cofc.f_vector() == std::vector<int>{3});
  }

  SUBCASE("incomparable pair") {
    CHECK_THROWS_AS(tet.section(1, 2), Error);
  }

  SUBCASE("a face against itself gives the one-face complex") {
    IncidenceComplex point = tet.section(1, 1);
    CHECK(point.rank() == -1);
    CHECK(point.face_count() == 1);
    CHECK(point.flags().size() == 1);
    CHECK(are_isomorphic(point, tet.section(7, 7)).has_value());
  }

  SUBCASE("full section is the complex itself") {
    CHECK(are_isomorphic(tet.section(tet.bottom(), tet.top()), tet).has_value());
  }
}

TEST_CASE("isomorphism") {
  IncidenceComplex tet = tetrahedron();
  SUBCASE("identity") {
    auto map = are_isomorphic(tet, tet);
    REQUIRE(map.has_value());
    for (const Face& f : tet.faces())
      CHECK(tet.face((*map)[static_cast<std::size_t>(f.id)]).rank == f.rank);
  }

  SUBCASE("any two vertex figures match") {
    for (int v = 1; v <= 4; ++v)
      CHECK(are_isomorphic(tet.section(v, 15), tet.section(1, 15)).has_value());
  }

  SUBCASE("triangle and square differ") {
    IncidenceComplex square = rank2_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(!are_isomorphic(triangle(), square).has_value());
  }

  SUBCASE("equal counts and degrees do not imply isomorphism") {
    // A hexagon and two disjoint triangles share the f-vector (6,6) and all
    // cover degrees; only the search itself can tell them apart.
    IncidenceComplex hexagon =
        rank2_complex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    IncidenceComplex two_triangles =
        rank2_complex(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(!are_isomorphic(hexagon, two_triangles).has_value());
    CHECK(are_isomorphic(hexagon, hexagon).has_value());
  }
}

TEST_CASE("regular complexes have k-1 adjacent flags per rank") {
  IncidenceComplex k = k33();
  auto flags = k.flags();
  // k-parameters of the complete bipartite complex: (2, 3).
  for (const Flag& f : flags) {
    CHECK(k.adjacent_flags(f, 0).size() == 2 - 1);
    CHECK(k.adjacent_flags(f, 1).size() == 3 - 1);
  }
}

TEST_CASE("group actions") {
  IncidenceComplex tet = tetrahedron();

  SUBCASE("symmetric group acts simply flag-transitively") {
    ActionReport report = verify_group_action(tet, s4_face_action());
    CHECK(report.is_automorphism_set);
    CHECK(report.flag_transitive);
    CHECK(report.simply_flag_transitive);
    CHECK(report.group_order == 24);
    CHECK(report.flag_stabilizer_order == 1);
  }

  SUBCASE("identity only is not flag-transitive") {
    std::vector<int> id(static_cast<std::size_t>(triangle().face_count()));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    ActionReport report = verify_group_action(triangle(), {id});
    CHECK(report.is_automorphism_set);
    CHECK(!report.flag_transitive);
    CHECK(report.flag_orbit_size == 1);
  }

  SUBCASE("non-bijective map raises") {
    std::vector<int> bad(static_cast<std::size_t>(tet.face_count()), 0);
    CHECK_THROWS_AS(verify_group_action(tet, {bad}), Error);
  }

  SUBCASE("rank-breaking map is reported") {
    std::vector<int> swap_ranks(static_cast<std::size_t>(triangle().face_count()));
    for (std::size_t i = 0; i < swap_ranks.size(); ++i) swap_ranks[i] = static_cast<int>(i);
    std::swap(swap_ranks[1], swap_ranks[4]); // vertex <-> edge
    ActionReport report = verify_group_action(triangle(), {swap_ranks});
    CHECK(!report.is_automorphism_set);
  }
}
