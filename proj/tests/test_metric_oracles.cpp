#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "loccert/classes.hpp"
#include "loccert/enumerate.hpp"
#include "loccert/generators.hpp"
#include "loccert/metric.hpp"
#include "loccert/patterns.hpp"

using namespace loccert;

namespace {

// Independent Helly oracle: DFS over pairwise-intersecting ball families,
// where each added ball strictly shrinks the running intersection (any
// minimal violating family has this form in some order).
bool helly_by_family_search(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> balls;
  for (Vertex c = 0; c < n; ++c)
    for (int r = 0; r <= g.diameter(); ++r) {
      std::uint64_t m = 0;
      for (Vertex x = 0; x < n; ++x)
        if (g.dist(c, x) <= r) m |= std::uint64_t{1} << x;
      balls.push_back(m);
    }
  std::sort(balls.begin(), balls.end());
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());

  std::vector<std::uint64_t> chosen;
  auto rec = [&](auto&& self, std::uint64_t inter) -> bool {
    if (inter == 0) return false;  // violating family found
    for (std::uint64_t b : balls) {
      if ((b & inter) == inter) continue;  // would not shrink
      bool pairwise = true;
      for (std::uint64_t c : chosen)
        if ((b & c) == 0) {
          pairwise = false;
          break;
        }
      if (!pairwise) continue;
      chosen.push_back(b);
      if (!self(self, inter & b)) return false;
      chosen.pop_back();
    }
    return true;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, all);
}

}  // namespace

TEST_CASE("metric conditions on hand-checked graphs") {
  Graph c4 = generate(parse_family_spec("cycle:4"));
  CHECK(satisfies_condition(c4, MetricCondition::QCminus).holds);
  CHECK(satisfies_condition(c4, MetricCondition::QC).holds);
  CHECK(satisfies_condition(c4, MetricCondition::TC).holds);  // no triangles

  Graph c5 = generate(parse_family_spec("cycle:5"));
  auto r = satisfies_condition(c5, MetricCondition::QCminus);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.size() == 3);
  // the witness is a genuine violation
  Vertex u = r.witness[0], v = r.witness[1], s = r.witness[2];
  CHECK(c5.dist(u, v) == 2);
  for (Vertex x : c5.common_neighbors(u, v))
    CHECK(2 * c5.dist(s, x) > c5.dist(s, u) + c5.dist(s, v));

  Graph c6 = generate(parse_family_spec("cycle:6"));
  CHECK_FALSE(satisfies_condition(c6, MetricCondition::QC).holds);
  CHECK(satisfies_condition(c6, MetricCondition::TC).holds);

  Graph k4 = generate(parse_family_spec("complete:4"));
  CHECK(satisfies_condition(k4, MetricCondition::TC).holds);
  CHECK(satisfies_condition(k4, MetricCondition::QC).holds);
}

TEST_CASE("rooted conditions check a single apex") {
  Graph c6 = generate(parse_family_spec("cycle:6"));
  // QC fails for the apex opposite a distance-2 pair; rooted checks isolate it
  int holds = 0, fails = 0;
  for (Vertex s = 0; s < 6; ++s)
    (satisfies_condition(c6, MetricCondition::QC, s).holds ? holds : fails)++;
  CHECK(fails == 6);  // symmetry: every root witnesses a failure
}

TEST_CASE("QC- equivalent to QC1- and QC2- on all connected graphs n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& sg : enumerate_connected_graphs(n)) {
      Graph g = from_small(sg);
      bool qcm = satisfies_condition(g, MetricCondition::QCminus).holds;
      bool split = satisfies_condition(g, MetricCondition::QC1minus).holds &&
                   satisfies_condition(g, MetricCondition::QC2minus).holds;
      CHECK(qcm == split);
    }
}

TEST_CASE("median sets") {
  Graph tree = Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(median_set(tree, 0, 2, 4) == std::vector<Vertex>{1});
  CHECK(median_set(tree, 0, 0, 4) == std::vector<Vertex>{0});

  Graph k23 = pattern_graph(PatternId::K23);
  // parts {0,1} and {2,3,4}: the triple of degree-2 vertices has two medians
  CHECK(median_set(k23, 2, 3, 4).size() == 2);

  Graph c6 = generate(parse_family_spec("cycle:6"));
  CHECK(median_set(c6, 0, 2, 4).empty());
}

TEST_CASE("metric triangles") {
  Graph k3 = generate(parse_family_spec("complete:3"));
  auto ts = metric_triangles(k3);
  // 3 degenerate + the triangle itself
  CHECK(ts.size() == 4);
  int size1 = 0;
  for (const auto& t : ts)
    if (t.size() == 1) {
      CHECK(t.equilateral());
      ++size1;
    }
  CHECK(size1 == 1);

  // C6: opposite triple 0,2,4 is an equilateral metric triangle of size 2
  Graph c6 = generate(parse_family_spec("cycle:6"));
  bool found = false;
  for (const auto& t : metric_triangles(c6))
    if (t.size() == 2) {
      CHECK(t.equilateral());
      found = true;
    }
  CHECK(found);

  // trees: no non-degenerate metric triangles (every triple has a median)
  Graph tree = generate(parse_family_spec("randtree:9", 5));
  for (const auto& t : metric_triangles(tree)) CHECK(t.size() == 0);
}

TEST_CASE("weakly modular members have strongly equilateral metric triangles") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& sg : enumerate_connected_graphs(n)) {
      Graph g = from_small(sg);
      if (!is_class(g, ClassId::WeaklyModular).member) continue;
      for (const auto& t : metric_triangles(g)) {
        CHECK(t.equilateral());
        CHECK(is_strongly_equilateral(g, t));
      }
    }
}

TEST_CASE("ball Helly triple criterion vs family search, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& sg : enumerate_connected_graphs(n)) {
      Graph g = from_small(sg);
      CHECK(is_ball_helly(g).helly == helly_by_family_search(g));
    }
}

TEST_CASE("ball Helly failure reports a pairwise-intersecting empty family") {
  Graph c6 = generate(parse_family_spec("cycle:6"));
  auto r = is_ball_helly(c6);
  REQUIRE_FALSE(r.helly);
  REQUIRE(r.family.size() >= 3);
  std::vector<std::vector<Vertex>> sets;
  for (auto [c, rad] : r.family) sets.push_back(c6.ball(c, rad));
  std::vector<Vertex> inter = sets[0];
  for (const auto& s : sets) {
    std::vector<Vertex> next;
    std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                          std::back_inserter(next));
    inter = next;
  }
  CHECK(inter.empty());
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<Vertex> pair_inter;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(pair_inter));
      CHECK_FALSE(pair_inter.empty());
    }
}

TEST_CASE("class oracle spot values") {
  auto member = [](const char* fam, ClassId c) {
    return is_class(generate(parse_family_spec(fam)), c).member;
  };
  CHECK(member("grid:3,3", ClassId::Median));
  CHECK(member("hypercube:3", ClassId::Median));
  CHECK(member("bipartite:2,3", ClassId::Modular));
  CHECK_FALSE(member("bipartite:2,3", ClassId::Median));
  CHECK(member("kinggrid:3,3", ClassId::Helly));
  CHECK_FALSE(member("kinggrid:3,3", ClassId::Bridged));  // isometric C4
  CHECK(member("trigrid:3", ClassId::Bridged));
  CHECK(member("complete:5", ClassId::Chordal));
  CHECK_FALSE(member("cycle:4", ClassId::Chordal));
  CHECK(member("cycle:4", ClassId::Modular));
  CHECK(member("wheel:5", ClassId::WeaklyBridged));
  CHECK_FALSE(member("wheel:5", ClassId::Bridged));  // isometric C5 rim
  CHECK(member("bipartite:3,3", ClassId::DualPolar));
  CHECK(member("grid:3,4", ClassId::Bucolic));
  CHECK(member("grid:3,4", ClassId::CageAmalgamation));
  CHECK_FALSE(member("kinggrid:3,3", ClassId::Bucolic));  // contains W4
  CHECK(member("johnson:5,2", ClassId::MatroidBasis));
  CHECK(member("johnson:5,2", ClassId::EvenDeltaMatroidBasis));
  CHECK(member("octahedron:3", ClassId::EvenDeltaMatroidBasis));
  CHECK_FALSE(member("cycle:5", ClassId::Meshed));
  CHECK(member("cycle:4", ClassId::Meshed));
  CHECK_FALSE(member("cycle:6", ClassId::WeaklyModular));
}

TEST_CASE("basis conditions on generated graphs") {
  Graph oct = generate(parse_family_spec("johnson:4,2"));  // the 3-octahedron
  auto bc = basis_graph_conditions(oct);
  CHECK(bc.pc);
  CHECK(bc.lpc);
  CHECK(bc.ic3);
  CHECK(bc.ic4);
  REQUIRE(bc.blc.has_value());
  CHECK(*bc.blc);
  CHECK(bc.thick);

  Graph q3 = generate(parse_family_spec("hypercube:3"));
  auto bq = basis_graph_conditions(q3);
  CHECK(bq.pc);
  CHECK(bq.ic3);
  REQUIRE(bq.blc.has_value());
  CHECK(*bq.blc);

  Graph c6 = generate(parse_family_spec("cycle:6"));
  auto bc6 = basis_graph_conditions(c6);
  CHECK(bc6.pc);         // vacuous: C6 has no induced squares
  CHECK_FALSE(bc6.ic3);  // distance-2 pairs lie on no square
  CHECK_FALSE(bc6.thick);
}

TEST_CASE("tree exchange graph of K4 is a matroid basis graph") {
  Graph tx = tree_exchange_graph(generate(parse_family_spec("complete:4")));
  CHECK(tx.vertex_count() == 16);  // Cayley: 4^{4-2}
  CHECK(is_class(tx, ClassId::MatroidBasis).member);
}

TEST_CASE("line graph recognition") {
  auto small_of = [](const Graph& g) { return to_small(g); };
  CHECK(is_line_graph(small_of(generate(parse_family_spec("cycle:4"))), true));
  CHECK(is_line_graph(small_of(generate(parse_family_spec("cycle:5"))), false));
  CHECK_FALSE(is_line_graph(small_of(generate(parse_family_spec("cycle:5"))), true));
  CHECK(is_line_graph(small_of(generate(parse_family_spec("complete:3"))), true));
  // the claw K1,3 is the canonical non-line graph
  CHECK_FALSE(is_line_graph(small_of(generate(parse_family_spec("bipartite:1,3"))), false));
  // an independent set is the line graph of a matching
  SmallGraph indep(4);
  CHECK(is_line_graph(indep, true));
}

TEST_CASE("perfect elimination orderings") {
  Graph chordal = generate(parse_family_spec("randchordal:12", 3));
  auto peo = perfect_elimination_ordering(chordal);
  REQUIRE(peo.has_value());
  // verify the ordering directly
  std::vector<char> removed(chordal.vertex_count(), 0);
  for (Vertex v : *peo) {
    const auto& nb = chordal.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!removed[nb[i]] && !removed[nb[j]])
          CHECK(chordal.adjacent(nb[i], nb[j]));
    removed[v] = 1;
  }
  CHECK_FALSE(perfect_elimination_ordering(generate(parse_family_spec("cycle:4"))).has_value());
}

TEST_CASE("isometric cycle search") {
  CHECK(find_long_isometric_cycle(generate(parse_family_spec("cycle:6")), 12).has_value());
  CHECK_FALSE(find_long_isometric_cycle(generate(parse_family_spec("complete:4")), 12).has_value());
  // W4's rim C4 is isometric
  CHECK(find_long_isometric_cycle(pattern_graph(PatternId::W4), 12).has_value());
  // chordal graphs have none
  CHECK_FALSE(find_long_isometric_cycle(generate(parse_family_spec("randchordal:10", 1)), 12).has_value());
  CHECK_THROWS_AS(find_long_isometric_cycle(generate(parse_family_spec("grid:4,4")), 12),
                  GuardExceeded);
}

TEST_CASE("hierarchy containments on all connected graphs n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& sg : enumerate_connected_graphs(n)) {
      Graph g = from_small(sg);
      for (auto [sub, super] : class_containments()) {
        bool in_sub, in_super;
        try {
          in_sub = is_class(g, sub).member;
          in_super = is_class(g, super).member;
        } catch (const GuardExceeded&) {
          continue;
        }
        if (in_sub) CHECK(in_super);
      }
    }
}
