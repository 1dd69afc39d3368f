#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loccert/classes.hpp"
#include "loccert/graph.hpp"

namespace loccert {

// A graph family instance, e.g. {"kinggrid", {3, 3}}. Parsed from strings of
// the form "name" or "name:p1,p2,...".
struct FamilySpec {
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
};

FamilySpec parse_family_spec(const std::string& text, std::uint64_t seed = 0);

// Known families:
//   path:n  cycle:n  complete:n  grid:p,q  kinggrid:p,q  trigrid:p
//   hypercube:d  octahedron:k  johnson:n,k  treexchange:n
//   randtree:n  randchordal:n  randgraph:n,p  (p in permille)
// Throws std::invalid_argument for unknown families or bad parameters.
Graph generate(const FamilySpec& spec);

// Spanning-tree exchange graph of h: vertices are the spanning trees of h,
// two trees adjacent when they differ in exactly one edge.
Graph tree_exchange_graph(const Graph& h);

struct CorpusResult {
  std::vector<Graph> graphs;
  std::vector<std::string> names;  // family-spec string per graph
  bool shortfall = false;          // fewer than the requested count available
};

// Oracle-verified members of the class, drawn from a per-class candidate pool
// of family instances with at most max_n vertices. Candidates failing the
// membership oracle are dropped (and guarded oracle failures skipped).
CorpusResult sample_class_corpus(ClassId c, int count, int max_n,
                                 std::uint64_t seed,
                                 const OracleOptions& opts = {});

}  // namespace loccert
