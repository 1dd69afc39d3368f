#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loccert/classes.hpp"
#include "loccert/generators.hpp"

using namespace loccert;

TEST_CASE("family spec parsing") {
  FamilySpec s = parse_family_spec("kinggrid:3,4", 9);
  CHECK(s.family == "kinggrid");
  CHECK(s.params == std::vector<int>{3, 4});
  CHECK(s.seed == 9);

  CHECK(parse_family_spec("petersen").params.empty());
  CHECK_THROWS_AS(parse_family_spec(":3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("grid:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("grid:a,b"), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family_spec("nosuchfamily:3")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family_spec("grid:3")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family_spec("cycle:2")), std::invalid_argument);
}

TEST_CASE("deterministic family shapes") {
  CHECK(generate(parse_family_spec("path:7")).edge_count() == 6);
  CHECK(generate(parse_family_spec("cycle:8")).edge_count() == 8);
  CHECK(generate(parse_family_spec("complete:6")).edge_count() == 15);
  CHECK(generate(parse_family_spec("bipartite:3,4")).edge_count() == 12);

  Graph grid = generate(parse_family_spec("grid:3,5"));
  CHECK(grid.vertex_count() == 15);
  CHECK(grid.edge_count() == 3 * 4 + 5 * 2);
  CHECK(grid.diameter() == 2 + 4);

  Graph king = generate(parse_family_spec("kinggrid:3,5"));
  CHECK(king.vertex_count() == 15);
  CHECK(king.edge_count() == 22 + 2 * 2 * 4);
  CHECK(king.diameter() == 4);

  Graph tri = generate(parse_family_spec("trigrid:4"));
  CHECK(tri.vertex_count() == 15);  // (p+1)(p+2)/2
  CHECK(tri.diameter() == 4);

  Graph q4 = generate(parse_family_spec("hypercube:4"));
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 32);
  CHECK(q4.diameter() == 4);

  Graph oct = generate(parse_family_spec("octahedron:4"));
  CHECK(oct.vertex_count() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(oct.degree(v) == 6);

  Graph w6 = generate(parse_family_spec("wheel:6"));
  CHECK(w6.vertex_count() == 7);
  CHECK(w6.degree(6) == 6);
}

TEST_CASE("johnson graphs") {
  Graph j52 = generate(parse_family_spec("johnson:5,2"));
  CHECK(j52.vertex_count() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(j52.degree(v) == 6);  // k(n-k)
  CHECK(j52.diameter() == 2);

  Graph j63 = generate(parse_family_spec("johnson:6,3"));
  CHECK(j63.vertex_count() == 20);
  for (Vertex v = 0; v < 20; ++v) CHECK(j63.degree(v) == 9);
  CHECK(j63.diameter() == 3);
}

TEST_CASE("tree exchange graphs") {
  // K3 has 3 spanning trees, pairwise one exchange apart
  Graph t3 = generate(parse_family_spec("treexchange:3"));
  CHECK(t3.vertex_count() == 3);
  CHECK(t3.edge_count() == 3);

  Graph t4 = generate(parse_family_spec("treexchange:4"));
  CHECK(t4.vertex_count() == 16);

  // exchange graph of a cycle: n spanning trees forming K_n
  Graph tc5 = tree_exchange_graph(generate(parse_family_spec("cycle:5")));
  CHECK(tc5.vertex_count() == 5);
  CHECK(tc5.edge_count() == 10);
}

TEST_CASE("random families are reproducible and well-formed") {
  Graph t1 = generate(parse_family_spec("randtree:30", 7));
  Graph t2 = generate(parse_family_spec("randtree:30", 7));
  CHECK(t1.edges() == t2.edges());
  CHECK(t1.edge_count() == 29);

  Graph t3 = generate(parse_family_spec("randtree:30", 8));
  CHECK(t1.edges() != t3.edges());

  Graph ch = generate(parse_family_spec("randchordal:25", 11));
  CHECK(is_class(ch, ClassId::Chordal).member);

  Graph rg = generate(parse_family_spec("randgraph:12,400", 3));
  CHECK(rg.vertex_count() == 12);  // construction implies connectivity
  CHECK_THROWS_AS(generate(parse_family_spec("randgraph:40,0", 3)), std::invalid_argument);
}

TEST_CASE("class corpora are oracle-verified and large enough") {
  for (ClassId c : {ClassId::Meshed, ClassId::Bridged, ClassId::Helly,
                    ClassId::WeaklyBridged, ClassId::Median}) {
    CorpusResult corpus = sample_class_corpus(c, 30, 60, 1);
    CHECK_FALSE(corpus.shortfall);
    CHECK(corpus.graphs.size() == 30);
    for (const Graph& g : corpus.graphs) {
      CHECK(g.vertex_count() <= 60);
      CHECK(is_class(g, c).member);
    }
  }
  // matroid corpora are smaller but still usable
  CorpusResult mb = sample_class_corpus(ClassId::MatroidBasis, 15, 70, 1);
  CHECK(mb.graphs.size() >= 10);
}
