#include "loccert/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace loccert {

namespace {

// iterated degree refinement; returns a canonical color per vertex
std::vector<int> refine_colors(const SmallGraph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::uint64_t nb = g.adj[v];
      std::vector<int> ncol;
      while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        ncol.push_back(color[u]);
      }
      std::sort(ncol.begin(), ncol.end());
      sig[v].insert(sig[v].end(), ncol.begin(), ncol.end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < g.n; ++v) ids[sig[v]] = 0;
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
      int nc = ids[sig[v]];
      if (nc != color[v]) changed = true;
      color[v] = nc;
    }
    if (!changed) break;
  }
  return color;
}

struct CanonSearch {
  const SmallGraph& g;
  int n;
  std::vector<std::vector<int>> cells;  // vertices grouped by refined color
  std::vector<int> cell_of_pos;         // position -> cell index
  std::vector<int> placed;              // position -> vertex
  std::vector<char> used;
  std::vector<std::uint64_t> rows;      // rows[p] = adjacency bits to 0..p-1
  std::vector<std::uint64_t> best_rows;
  bool have_best = false;

  explicit CanonSearch(const SmallGraph& g_) : g(g_), n(g_.n), used(g_.n, 0) {
    auto color = refine_colors(g);
    int max_c = 0;
    for (int c : color) max_c = std::max(max_c, c);
    cells.assign(max_c + 1, {});
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    for (size_t c = 0; c < cells.size(); ++c)
      for (size_t i = 0; i < cells[c].size(); ++i)
        cell_of_pos.push_back(static_cast<int>(c));
  }

  // rows are compared lexicographically position by position; `smaller`
  // records that the current branch already beats best_rows strictly
  void rec(int p, bool smaller) {
    if (p == n) {
      if (!have_best || rows < best_rows) best_rows = rows;
      have_best = true;
      return;
    }
    for (int v : cells[cell_of_pos[p]]) {
      if (used[v]) continue;
      std::uint64_t row = 0;
      for (int i = 0; i < p; ++i)
        if (g.has_edge(placed[i], v)) row |= std::uint64_t{1} << i;
      bool next_smaller = smaller;
      if (have_best && !smaller) {
        if (row > best_rows[p]) continue;
        if (row < best_rows[p]) next_smaller = true;
      }
      used[v] = 1;
      placed.push_back(v);
      rows[p] = row;
      rec(p + 1, next_smaller);
      placed.pop_back();
      used[v] = 0;
    }
  }
};

}  // namespace

std::uint64_t canonical_mask(const SmallGraph& g) {
  if (g.n > 11) throw GuardExceeded("canonical_mask supports at most 11 vertices");
  CanonSearch search(g);
  search.rows.assign(g.n, 0);
  search.rec(0, false);
  std::uint64_t packed = 0;
  for (int p = 0; p < g.n; ++p)
    packed |= search.best_rows[p] << (p * (p - 1) / 2);
  return packed |
         (static_cast<std::uint64_t>(g.n) << 56);  // distinguish vertex counts
}

std::vector<SmallGraph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 10) throw GuardExceeded("enumeration supports 1 <= n <= 10");
  if (n == 1) return {SmallGraph(1)};
  auto prev = enumerate_connected_graphs(n - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<SmallGraph> out;
  for (const SmallGraph& base : prev) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
      SmallGraph g(n);
      for (int v = 0; v < n - 1; ++v) g.adj[v] = base.adj[v];
      std::uint64_t nb = s;
      while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        g.add_edge(u, n - 1);
      }
      if (seen.insert(canonical_mask(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace loccert
