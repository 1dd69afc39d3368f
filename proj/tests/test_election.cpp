#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "loccert/election.hpp"
#include "loccert/enumerate.hpp"
#include "loccert/generators.hpp"
#include "loccert/io.hpp"

using namespace loccert;

TEST_CASE("mod-3 rule unit checks") {
  Graph p4 = generate(parse_family_spec("path:4"));
  std::vector<int> f0 = {0, 1, 2, 0};
  for (Vertex v = 0; v < 4; ++v)
    CHECK(eval_rule(RuleId::MG, extract_view(p4, f0, v, 1, 0)));

  // MG second branch: the root has only 1-labeled neighbors
  CHECK(eval_rule(RuleId::MG, extract_view(p4, f0, 0, 1, 0)));
  // a 0 next to a 0 has neither a 2-neighbor nor all-ones
  std::vector<int> zz = {0, 0, 1, 2};
  CHECK_FALSE(eval_rule(RuleId::MG, extract_view(p4, zz, 0, 1, 0)));
  // out-of-range labels rejected
  std::vector<int> bad = {3, 1, 2, 0};
  CHECK_FALSE(eval_rule(RuleId::MG, extract_view(p4, bad, 0, 1, 0)));

  // MGT: rainbow triangle rejected at each corner
  Graph k3 = generate(parse_family_spec("complete:3"));
  std::vector<int> rainbow = {0, 1, 2};
  for (Vertex v = 0; v < 3; ++v)
    CHECK_FALSE(eval_rule(RuleId::MGT, extract_view(k3, rainbow, v, 1, 0)));
  std::vector<int> mono = {0, 1, 1};
  for (Vertex v = 0; v < 3; ++v)
    CHECK(eval_rule(RuleId::MGT, extract_view(k3, mono, v, 1, 0)));

  // MGS: a rainbow square with adjacent equal labels is rejected
  Graph c4 = generate(parse_family_spec("cycle:4"));
  std::vector<int> adj_equal = {0, 0, 1, 2};  // equal pair 0,1 is an edge
  CHECK_FALSE(eval_rule(RuleId::MGS, extract_view(c4, adj_equal, 0, 2, 0)));
  std::vector<int> opp_equal = {0, 1, 0, 2};  // equal pair 0,2 is a diagonal
  for (Vertex v = 0; v < 4; ++v)
    CHECK(eval_rule(RuleId::MGS, extract_view(c4, opp_equal, v, 2, 0)));

  // MM mirrors DM on the labeled C6
  Graph c6 = generate(parse_family_spec("cycle:6"));
  std::vector<int> m0 = mod3_labeling(c6, 0);
  CHECK_FALSE(eval_rule(RuleId::MM, extract_view(c6, m0, 3, 2, 0)));
}

TEST_CASE("orientation arcs point down the mod-3 gradient") {
  Graph p3 = generate(parse_family_spec("path:3"));
  std::vector<int> labels = {0, 1, 2};
  OrientedGraph og = orient_by_labels(p3, labels);
  CHECK(og.has_arc(1, 0));
  CHECK(og.has_arc(2, 1));
  CHECK_FALSE(og.has_arc(0, 1));
  CHECK_FALSE(og.has_arc(1, 2));

  // wrap-around: 0 points to 2
  std::vector<int> wrap = {2, 0, 1};
  OrientedGraph og2 = orient_by_labels(p3, wrap);
  CHECK(og2.has_arc(1, 0));
  CHECK(og2.has_arc(2, 1));
}

TEST_CASE("acyclicity report finds cycles and sinks") {
  Graph k3 = generate(parse_family_spec("complete:3"));
  std::vector<int> rainbow = {0, 1, 2};
  auto rep = acyclicity_and_sinks(orient_by_labels(k3, rainbow));
  CHECK_FALSE(rep.acyclic);
  CHECK(rep.cycle.size() == 3);
  CHECK(rep.sinks.empty());

  Graph p3 = generate(parse_family_spec("path:3"));
  std::vector<int> up = {0, 1, 2};
  auto rep2 = acyclicity_and_sinks(orient_by_labels(p3, up));
  CHECK(rep2.acyclic);
  CHECK(rep2.sinks == std::vector<Vertex>{0});
}

TEST_CASE("election on canonical labelings, all roots") {
  RuleSet rules = *ruleset_from_name("MESHED_mod3");
  for (const char* fam : {"grid:3,3", "kinggrid:3,3", "trigrid:3", "hypercube:3",
                          "complete:5", "path:6"}) {
    Graph g = generate(parse_family_spec(fam));
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      auto out = elect_leader(g, mod3_labeling(g, s), rules, s + 1);
      REQUIRE(out.status == ElectionStatus::Elected);
      CHECK(out.leader == s);
    }
  }
}

TEST_CASE("election rejects bad labelings") {
  Graph k3 = generate(parse_family_spec("complete:3"));
  auto out = elect_leader(k3, std::vector<int>{0, 1, 2}, *ruleset_from_name("MESHED_mod3"), 0);
  CHECK(out.status == ElectionStatus::RejectedByVerifier);
  CHECK_FALSE(out.rejections.empty());
  CHECK_THROWS_AS(
      elect_leader(k3, std::vector<int>{0, 1, 1}, *ruleset_from_name("MESHED_dist"), 0),
      std::invalid_argument);
}

TEST_CASE("accepted mod-3 labelings on small meshed graphs are canonical") {
  RuleSet rules = *ruleset_from_name("MESHED_mod3");
  for (int n = 1; n <= 6; ++n)
    for (const auto& sg : enumerate_connected_graphs(n)) {
      Graph g = from_small(sg);
      if (!is_class(g, ClassId::Meshed).member) continue;
      auto accepted = enumerate_accepted_labelings(g, rules);
      std::vector<std::vector<int>> canonical;
      for (Vertex s = 0; s < n; ++s) canonical.push_back(mod3_labeling(g, s));
      std::sort(canonical.begin(), canonical.end());
      canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
      CHECK(accepted == canonical);
      for (const auto& labels : accepted) {
        auto rep = acyclicity_and_sinks(orient_by_labels(g, labels));
        CHECK(rep.acyclic);
        REQUIRE(rep.sinks.size() == 1);
        CHECK(labels == mod3_labeling(g, rep.sinks[0]));
        // sink-local recognizability: the sink is the unique vertex with no
        // neighbor labeled prec of its own label
        int no_prec = 0;
        for (Vertex v = 0; v < n; ++v) {
          bool has_prec = false;
          for (Vertex u : g.neighbors(v))
            if (labels[u] == mod3_prec(labels[v])) has_prec = true;
          if (!has_prec) {
            ++no_prec;
            CHECK(v == rep.sinks[0]);
          }
        }
        CHECK(no_prec == 1);
      }
    }
}

TEST_CASE("DOT export shows the orientation") {
  Graph p3 = generate(parse_family_spec("path:3"));
  std::string dot = to_dot(p3, {0, 1, 2});
  CHECK(dot.find("1 -> 0;") != std::string::npos);
  CHECK(dot.find("2 -> 1;") != std::string::npos);
  CHECK(dot.find("dir=none") == std::string::npos);
}

TEST_CASE("JSON outcome shapes") {
  Graph k3 = generate(parse_family_spec("complete:3"));
  auto out = elect_leader(k3, mod3_labeling(k3, 1), *ruleset_from_name("MESHED_mod3"), 0);
  auto j = to_json(out);
  CHECK(j["status"] == "elected");
  CHECK(j["leader"] == 1);
  CHECK(j["rejections"].empty());

  Verdict v = run_local_verifier(k3, std::vector<int>{0, 1, 2},
                                 *ruleset_from_name("MESHED_mod3"), 0);
  auto jv = to_json(v);
  CHECK(jv["accepted"] == false);
  CHECK(jv["rejections"].size() > 0);
}
