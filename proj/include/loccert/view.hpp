#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loccert/graph.hpp"

namespace loccert {

// Anonymized labeled r-ball around a vertex. The center always gets local
// index 0; the remaining local indices are permuted pseudo-randomly from the
// shuffle seed, so a rule reading the view cannot depend on global identities.
//
// `to_global` exists for engine bookkeeping (reporting which vertex rejected);
// rules must never read it.
struct LabeledView {
  Graph subgraph;
  Vertex center = 0;  // local index, always 0
  std::vector<int> labels;
  int radius = 0;
  std::vector<int> dist_from_center;  // BFS inside the subgraph
  std::vector<Vertex> to_global;
};

LabeledView extract_view(const Graph& g, std::span<const int> labels, Vertex v,
                         int radius, std::uint64_t shuffle_seed);

}  // namespace loccert
