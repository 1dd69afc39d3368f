#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "loccert/enumerate.hpp"
#include "loccert/generators.hpp"
#include "loccert/patterns.hpp"
#include "loccert/view.hpp"

using namespace loccert;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), std::domain_error);
  CHECK_THROWS_AS(Graph(2, std::initializer_list<Edge>{}), std::domain_error);

  // duplicate edges collapse
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("distances, diameter, eccentricity") {
  Graph p4 = generate(parse_family_spec("path:4"));
  CHECK(p4.dist(0, 3) == 3);
  CHECK(p4.diameter() == 3);
  CHECK(p4.eccentricity(1) == 2);

  Graph c6 = generate(parse_family_spec("cycle:6"));
  CHECK(c6.dist(0, 3) == 3);
  CHECK(c6.dist(1, 5) == 2);
  CHECK(c6.diameter() == 3);

  Graph k1 = generate(parse_family_spec("complete:1"));
  CHECK(k1.diameter() == 0);
}

TEST_CASE("ball, interval, common neighbors, convexity") {
  Graph c6 = generate(parse_family_spec("cycle:6"));
  CHECK(c6.ball(0, 1) == std::vector<Vertex>{0, 1, 5});
  CHECK(c6.interval(0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(c6.interval(0, 3) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(c6.common_neighbors(0, 2) == std::vector<Vertex>{1});

  std::vector<Vertex> geodesic = {0, 1, 2};
  CHECK(c6.is_convex_set(geodesic));
  std::vector<Vertex> antipodal = {0, 3};
  CHECK_FALSE(c6.is_convex_set(antipodal));
}

TEST_CASE("view extraction: center first, consistent labels and distances") {
  Graph g = generate(parse_family_spec("grid:3,3"));
  std::vector<int> labels(9);
  for (int v = 0; v < 9; ++v) labels[v] = 10 + v;

  for (Vertex v = 0; v < 9; ++v) {
    LabeledView view = extract_view(g, labels, v, 2, 42);
    CHECK(view.center == 0);
    CHECK(view.to_global[0] == v);
    CHECK(view.labels[0] == 10 + v);
    for (size_t i = 0; i < view.to_global.size(); ++i) {
      CHECK(view.labels[i] == labels[view.to_global[i]]);
      // global distance within the ball equals subgraph distance
      CHECK(view.dist_from_center[i] == g.dist(v, view.to_global[i]));
      for (size_t j = 0; j < view.to_global.size(); ++j)
        CHECK(view.subgraph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
              g.adjacent(view.to_global[i], view.to_global[j]));
    }
  }
}

TEST_CASE("view shuffle depends on seed but membership does not") {
  Graph g = generate(parse_family_spec("kinggrid:3,3"));
  std::vector<int> labels(g.vertex_count(), 0);
  LabeledView a = extract_view(g, labels, 4, 1, 1);
  LabeledView b = extract_view(g, labels, 4, 1, 2);
  std::multiset<Vertex> ma(a.to_global.begin(), a.to_global.end());
  std::multiset<Vertex> mb(b.to_global.begin(), b.to_global.end());
  CHECK(ma == mb);
  CHECK(a.to_global != b.to_global);  // 8 neighbors, overwhelmingly reshuffled
}

TEST_CASE("pattern graphs have the expected shapes") {
  CHECK(pattern_graph(PatternId::K23).edge_count() == 6);
  CHECK(pattern_graph(PatternId::K4Minus).edge_count() == 5);
  CHECK(pattern_graph(PatternId::K33Minus).edge_count() == 8);
  CHECK(pattern_graph(PatternId::W4).vertex_count() == 5);
  CHECK(pattern_graph(PatternId::W4Minus).edge_count() == 7);
  CHECK(pattern_graph(PatternId::ExtendedW5).vertex_count() == 7);
  Graph oct = pattern_graph(PatternId::Octahedron, 3);
  CHECK(oct.vertex_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
}

TEST_CASE("induced pattern search") {
  Graph w4 = pattern_graph(PatternId::W4);
  CHECK(contains_induced(w4, PatternId::C4).has_value());
  CHECK(contains_induced(w4, PatternId::K3).has_value());
  CHECK_FALSE(contains_induced(w4, PatternId::C5).has_value());
  // hub plus three consecutive rim vertices form an induced K4-
  CHECK(contains_induced(w4, PatternId::K4Minus).has_value());
  CHECK_FALSE(contains_induced(w4, PatternId::K23).has_value());

  Graph k4m = pattern_graph(PatternId::K4Minus);
  // anchored search: the two degree-2 vertices of K4- sit on no triangle pair
  auto occ = contains_induced(k4m, PatternId::K4Minus, 0);
  REQUIRE(occ.has_value());
  CHECK(std::find(occ->begin(), occ->end(), 0) != occ->end());

  // C4 is induced in K2,3 but K2,3 has no triangle
  Graph k23 = pattern_graph(PatternId::K23);
  CHECK(contains_induced(k23, PatternId::C4).has_value());
  CHECK_FALSE(contains_induced(k23, PatternId::K3).has_value());

  // a valid occurrence maps edges to edges and non-edges to non-edges
  Graph kg = generate(parse_family_spec("kinggrid:3,3"));
  Graph pat = pattern_graph(PatternId::W4);
  auto found = find_induced(kg, pat, std::nullopt);
  REQUIRE(found.has_value());
  for (int a = 0; a < pat.vertex_count(); ++a)
    for (int b = a + 1; b < pat.vertex_count(); ++b)
      CHECK(pat.adjacent(a, b) == kg.adjacent((*found)[a], (*found)[b]));
}

TEST_CASE("induced cycle search respects length bounds and chords") {
  SmallGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  auto cyc = find_induced_cycle(c5, 4);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 5);
  CHECK_FALSE(find_induced_cycle(c5, 6).has_value());
  CHECK_FALSE(find_induced_cycle(c5, 4, 4).has_value());

  // a chorded 6-cycle has no long induced cycle
  SmallGraph c6c(6);
  for (int i = 0; i < 6; ++i) c6c.add_edge(i, (i + 1) % 6);
  c6c.add_edge(0, 3);
  CHECK_FALSE(find_induced_cycle(c6c, 5).has_value());
  auto four = find_induced_cycle(c6c, 4);
  REQUIRE(four.has_value());
  CHECK(four->size() == 4);
}

TEST_CASE("canonical mask is an isomorphism invariant") {
  // same graph under a relabeling
  SmallGraph a(5), b(5);
  int perm[5] = {3, 0, 4, 1, 2};
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}};
  for (auto [u, v] : edges) {
    a.add_edge(u, v);
    b.add_edge(perm[u], perm[v]);
  }
  CHECK(canonical_mask(a) == canonical_mask(b));

  // different graphs differ
  SmallGraph c(5);
  for (auto [u, v] : edges) c.add_edge(u, v);
  c.add_edge(0, 2);
  CHECK(canonical_mask(a) != canonical_mask(c));
}

TEST_CASE("connected graph counts by isomorphism class") {
  const size_t expect[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto gs = enumerate_connected_graphs(n);
    CHECK(gs.size() == expect[n - 1]);
    std::set<std::uint64_t> masks;
    for (const auto& g : gs) {
      CHECK(g.n == n);
      masks.insert(canonical_mask(g));
      // connectivity: Graph construction would throw otherwise
      CHECK_NOTHROW(from_small(g));
    }
    CHECK(masks.size() == gs.size());
  }
}

TEST_CASE("small graph round trip") {
  Graph g = generate(parse_family_spec("trigrid:3"));
  SmallGraph s = to_small(g);
  Graph back = from_small(s);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edge_count() == g.edge_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(back.adjacent(u, v) == g.adjacent(u, v));
}
