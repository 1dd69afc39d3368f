#include "loccert/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace loccert {

std::string pattern_name(PatternId p) {
  switch (p) {
    case PatternId::C4: return "C4";
    case PatternId::C5: return "C5";
    case PatternId::K3: return "K3";
    case PatternId::K23: return "K2,3";
    case PatternId::K4Minus: return "K4-";
    case PatternId::K33Minus: return "K3,3-";
    case PatternId::W4: return "W4";
    case PatternId::W4Minus: return "W4-";
    case PatternId::W5: return "W5";
    case PatternId::Wheel: return "Wk";
    case PatternId::ExtendedW5: return "W5^";
    case PatternId::Octahedron: return "k-octahedron";
  }
  return "?";
}

namespace {

Graph cycle_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph(k, e);
}

Graph wheel_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) e.emplace_back(i, k);
  return Graph(k + 1, e);
}

}  // namespace

Graph pattern_graph(PatternId p, int k) {
  switch (p) {
    case PatternId::C4: return cycle_graph(4);
    case PatternId::C5: return cycle_graph(5);
    case PatternId::K3: return cycle_graph(3);
    case PatternId::K23:
      return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case PatternId::K4Minus:
      return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case PatternId::K33Minus:
      // K3,3 with the edge 0-3 removed
      return Graph(6, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    case PatternId::W4: return wheel_graph(4);
    case PatternId::W4Minus:
      // W4 minus one spoke: rim square 0-1-2-3, hub 4 missing the spoke to 3
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    case PatternId::W5: return wheel_graph(5);
    case PatternId::Wheel:
      if (k < 3) throw std::invalid_argument("wheel needs k >= 3");
      return wheel_graph(k);
    case PatternId::ExtendedW5: {
      // rim 0..4, hub 5, extra triangle vertex 6 on rim edge 0-1
      std::vector<Edge> e;
      for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
      for (int i = 0; i < 5; ++i) e.emplace_back(i, 5);
      e.emplace_back(6, 0);
      e.emplace_back(6, 1);
      return Graph(7, e);
    }
    case PatternId::Octahedron: {
      if (k < 1) throw std::invalid_argument("octahedron needs k >= 1");
      std::vector<Edge> e;
      for (int i = 0; i < 2 * k; ++i)
        for (int j = i + 1; j < 2 * k; ++j)
          if (j != i + k) e.emplace_back(i, j);
      return Graph(2 * k, e);
    }
  }
  throw std::invalid_argument("unknown pattern");
}

namespace {

struct InducedSearch {
  const Graph& g;
  const Graph& pat;
  std::vector<int> order;       // pattern vertices, each adjacent to an earlier one
  std::vector<Vertex> map;      // pattern vertex -> g vertex (-1 unset)
  std::vector<char> used;

  InducedSearch(const Graph& g_, const Graph& pat_) : g(g_), pat(pat_) {
    map.assign(pat.vertex_count(), -1);
    used.assign(g.vertex_count(), 0);
  }

  void bfs_order(int root) {
    order.clear();
    std::vector<char> seen(pat.vertex_count(), 0);
    order.push_back(root);
    seen[root] = 1;
    for (size_t i = 0; i < order.size(); ++i)
      for (int w : pat.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }

  bool consistent(int p, Vertex cand) const {
    for (int q = 0; q < pat.vertex_count(); ++q) {
      Vertex mq = map[q];
      if (mq < 0 || q == p) continue;
      if (pat.adjacent(p, q) != g.adjacent(cand, mq)) return false;
    }
    return true;
  }

  bool extend(size_t pos) {
    if (pos == order.size()) return true;
    int p = order[pos];
    // some earlier pattern neighbor is always mapped (pos >= 1)
    Vertex base = -1;
    for (int q : pat.neighbors(p))
      if (map[q] >= 0) {
        base = map[q];
        break;
      }
    for (Vertex cand : g.neighbors(base)) {
      if (used[cand] || g.degree(cand) < pat.degree(p)) continue;
      if (!consistent(p, cand)) continue;
      map[p] = cand;
      used[cand] = 1;
      if (extend(pos + 1)) return true;
      map[p] = -1;
      used[cand] = 0;
    }
    return false;
  }

  bool run_from(int root, Vertex image) {
    if (g.degree(image) < pat.degree(root)) return false;
    bfs_order(root);
    map.assign(pat.vertex_count(), -1);
    std::fill(used.begin(), used.end(), 0);
    map[root] = image;
    used[image] = 1;
    return extend(1);
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced(const Graph& g,
                                                const Graph& pattern,
                                                std::optional<Vertex> anchor) {
  if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
  InducedSearch search(g, pattern);
  if (anchor) {
    for (int root = 0; root < pattern.vertex_count(); ++root)
      if (search.run_from(root, *anchor)) return search.map;
    return std::nullopt;
  }
  for (Vertex image = 0; image < g.vertex_count(); ++image)
    if (search.run_from(0, image)) return search.map;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, PatternId p,
                                                    std::optional<Vertex> anchor,
                                                    int k) {
  return find_induced(g, pattern_graph(p, k), anchor);
}

namespace {

// Paths are extended with vertices larger than the start and non-adjacent to
// all interior path vertices; an edge back to the start closes the cycle.
struct CycleSearch {
  const SmallGraph& g;
  int min_len, max_len;
  std::vector<int> path;

  bool extend(std::uint64_t on_path, std::uint64_t forbidden) {
    int last = path.back();
    int start = path.front();
    std::uint64_t cand = g.adj[last] & ~forbidden & ~on_path;
    while (cand) {
      int x = __builtin_ctzll(cand);
      cand &= cand - 1;
      bool closes = g.has_edge(x, start);
      if (closes && static_cast<int>(path.size()) + 1 >= min_len &&
          (max_len == 0 || static_cast<int>(path.size()) + 1 <= max_len)) {
        path.push_back(x);
        return true;
      }
      if (closes) continue;  // a chord to the start would remain
      if (max_len > 0 && static_cast<int>(path.size()) + 1 >= max_len) continue;
      path.push_back(x);
      // interior vertices of the path become forbidden neighbors
      if (extend(on_path | (std::uint64_t{1} << x),
                 forbidden | (g.adj[last] & ~(std::uint64_t{1} << x))))
        return true;
      path.pop_back();
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g.n; ++s) {
      std::uint64_t higher = ~((std::uint64_t{2} << s) - 1);
      std::uint64_t nbrs = g.adj[s] & higher;
      std::uint64_t second = nbrs;
      while (second) {
        int v = __builtin_ctzll(second);
        second &= second - 1;
        path = {s, v};
        // vertices <= s are excluded; chords to s cannot arise because any
        // candidate adjacent to s either closes the cycle or is skipped
        std::uint64_t forbidden = ~higher;
        if (extend((std::uint64_t{1} << s) | (std::uint64_t{1} << v), forbidden))
          return path;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced_cycle(const SmallGraph& g,
                                                   int min_len, int max_len) {
  if (min_len < 3) min_len = 3;
  CycleSearch search{g, min_len, max_len, {}};
  return search.run();
}

}  // namespace loccert
