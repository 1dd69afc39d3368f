#include "loccert/view.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace loccert {

LabeledView extract_view(const Graph& g, std::span<const int> labels, Vertex v,
                         int radius, std::uint64_t shuffle_seed) {
  if (radius < 0) throw std::invalid_argument("negative view radius");
  if (labels.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("label vector does not cover all vertices");

  std::vector<Vertex> members = g.ball(v, radius);
  std::vector<Vertex> others;
  for (Vertex u : members)
    if (u != v) others.push_back(u);
  std::mt19937_64 rng(mix_seed(shuffle_seed, static_cast<std::uint64_t>(v)));
  std::shuffle(others.begin(), others.end(), rng);

  std::vector<Vertex> to_global;
  to_global.reserve(members.size());
  to_global.push_back(v);
  to_global.insert(to_global.end(), others.begin(), others.end());

  int k = static_cast<int>(to_global.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(to_global[i], to_global[j])) edges.emplace_back(i, j);

  LabeledView view{Graph(k, edges), 0, {}, radius, {}, std::move(to_global)};
  view.labels.resize(k);
  view.dist_from_center.resize(k);
  for (int i = 0; i < k; ++i) {
    view.labels[i] = labels[view.to_global[i]];
    view.dist_from_center[i] = view.subgraph.dist(0, i);
  }
  return view;
}

}  // namespace loccert
