#include "loccert/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace loccert {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(n, {});
  adjmat_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjmat_[u * n_ + v]) continue;  // deduplicate
    adjmat_[u * n_ + v] = adjmat_[v * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  // All-pairs BFS; also serves as the connectivity check.
  dist_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<int> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* d = &dist_[static_cast<size_t>(s) * n];
    int head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : adj_[x])
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          queue[tail++] = y;
        }
    }
    if (tail != n) throw std::domain_error("graph is disconnected");
    diameter_ = std::max(diameter_, *std::max_element(d, d + n));
  }
}

int Graph::eccentricity(Vertex v) const {
  int e = 0;
  for (Vertex u = 0; u < n_; ++u) e = std::max(e, dist(v, u));
  return e;
}

std::vector<Vertex> Graph::ball(Vertex v, int r) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (dist(v, u) <= r) out.push_back(u);
  return out;
}

std::vector<Vertex> Graph::interval(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  int duv = dist(u, v);
  for (Vertex x = 0; x < n_; ++x)
    if (dist(u, x) + dist(x, v) == duv) out.push_back(x);
  return out;
}

std::vector<Vertex> Graph::common_neighbors(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex x : adj_[u])
    if (adjacent(x, v)) out.push_back(x);
  return out;
}

bool Graph::is_convex_set(std::span<const Vertex> s) const {
  std::vector<char> in(n_, 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex u : s)
    for (Vertex v : s) {
      if (u >= v) continue;
      int duv = dist(u, v);
      for (Vertex x = 0; x < n_; ++x)
        if (!in[x] && dist(u, x) + dist(x, v) == duv) return false;
    }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph from_small(const SmallGraph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n, edges);
}

SmallGraph to_small(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("graph too large for SmallGraph");
  SmallGraph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

SmallGraph induced_small(const Graph& g, std::span<const Vertex> s) {
  if (s.size() > 64) throw std::invalid_argument("vertex set too large for SmallGraph");
  SmallGraph out(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace loccert
