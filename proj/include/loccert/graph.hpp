#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loccert/util.hpp"

namespace loccert {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected connected graph with vertices 0..n-1.
// All-pairs BFS distances are computed at construction; instances are
// safe to share read-only across threads.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.end())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjmat_[u * n_ + v] != 0; }

  int dist(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  int diameter() const { return diameter_; }
  int eccentricity(Vertex v) const;

  // Vertices at distance <= r from v, sorted.
  std::vector<Vertex> ball(Vertex v, int r) const;
  // { x : d(u,x) + d(x,v) = d(u,v) }, sorted.
  std::vector<Vertex> interval(Vertex u, Vertex v) const;
  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;
  bool is_convex_set(std::span<const Vertex> s) const;

  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  int diameter_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> adjmat_;
  std::vector<int> dist_;
};

Graph from_small(const SmallGraph& g);
SmallGraph to_small(const Graph& g);
// Subgraph induced by `s` as a SmallGraph; s must be sorted, |s| <= 64.
SmallGraph induced_small(const Graph& g, std::span<const Vertex> s);

}  // namespace loccert
