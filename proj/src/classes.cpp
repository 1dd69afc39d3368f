#include "loccert/classes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "loccert/patterns.hpp"

namespace loccert {

std::string class_name(ClassId c) {
  switch (c) {
    case ClassId::Meshed: return "meshed";
    case ClassId::WeaklyModular: return "weakly-modular";
    case ClassId::Modular: return "modular";
    case ClassId::Median: return "median";
    case ClassId::PseudoModular: return "pseudo-modular";
    case ClassId::Helly: return "helly";
    case ClassId::Bridged: return "bridged";
    case ClassId::WeaklyBridged: return "weakly-bridged";
    case ClassId::Chordal: return "chordal";
    case ClassId::SweaklyModular: return "sweakly-modular";
    case ClassId::DualPolar: return "dual-polar";
    case ClassId::Bucolic: return "bucolic";
    case ClassId::CageAmalgamation: return "cage-amalgamation";
    case ClassId::MatroidBasis: return "matroid-basis";
    case ClassId::EvenDeltaMatroidBasis: return "even-delta-matroid-basis";
  }
  return "?";
}

std::optional<ClassId> class_from_name(const std::string& name) {
  for (ClassId c : kAllClasses)
    if (class_name(c) == name) return c;
  return std::nullopt;
}

const std::vector<std::pair<ClassId, ClassId>>& class_containments() {
  static const std::vector<std::pair<ClassId, ClassId>> pairs = {
      {ClassId::Median, ClassId::Modular},
      {ClassId::Modular, ClassId::WeaklyModular},
      {ClassId::WeaklyModular, ClassId::Meshed},
      {ClassId::Chordal, ClassId::Bridged},
      {ClassId::Bridged, ClassId::WeaklyBridged},
      {ClassId::WeaklyBridged, ClassId::WeaklyModular},
      {ClassId::Helly, ClassId::WeaklyModular},
      {ClassId::DualPolar, ClassId::SweaklyModular},
      {ClassId::SweaklyModular, ClassId::WeaklyModular},
      {ClassId::CageAmalgamation, ClassId::Bucolic},
      {ClassId::Bucolic, ClassId::WeaklyModular},
      {ClassId::MatroidBasis, ClassId::EvenDeltaMatroidBasis},
      {ClassId::EvenDeltaMatroidBasis, ClassId::Meshed},
  };
  return pairs;
}

std::vector<std::array<Vertex, 4>> induced_squares(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w) {
      if (g.dist(u, w) != 2) continue;
      auto cn = g.common_neighbors(u, w);
      for (size_t i = 0; i < cn.size(); ++i)
        for (size_t j = i + 1; j < cn.size(); ++j) {
          Vertex v = cn[i], x = cn[j];
          if (g.adjacent(v, x)) continue;
          if (u > v) continue;  // u is the smallest vertex of the square
          out.push_back({u, v, w, x});
        }
    }
  return out;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (removed[v]) continue;
      bool simplicial = true;
      const auto& nb = g.neighbors(v);
      for (size_t i = 0; i < nb.size() && simplicial; ++i) {
        if (removed[nb[i]]) continue;
        for (size_t j = i + 1; j < nb.size() && simplicial; ++j)
          if (!removed[nb[j]] && !g.adjacent(nb[i], nb[j])) simplicial = false;
      }
      if (simplicial) pick = v;
    }
    if (pick < 0) return std::nullopt;
    removed[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

namespace {

// Enumerates induced cycles of length >= 4 and stops at the first isometric
// one. Mirrors the induced-cycle search in patterns.cpp but keeps searching
// past non-isometric cycles.
struct IsoCycleSearch {
  const Graph& g;
  SmallGraph sg;
  std::vector<int> path;
  std::optional<std::vector<Vertex>> found;

  bool isometric() const {
    int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        int along = std::min(j - i, len - (j - i));
        if (g.dist(path[i], path[j]) != along) return false;
      }
    return true;
  }

  void extend(std::uint64_t on_path, std::uint64_t forbidden) {
    if (found) return;
    int last = path.back();
    int start = path.front();
    std::uint64_t cand = sg.adj[last] & ~forbidden & ~on_path;
    while (cand && !found) {
      int x = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (sg.has_edge(x, start)) {
        if (static_cast<int>(path.size()) + 1 >= 4) {
          path.push_back(x);
          if (isometric()) found = path;
          path.pop_back();
        }
        continue;
      }
      path.push_back(x);
      extend(on_path | (std::uint64_t{1} << x),
             forbidden | (sg.adj[last] & ~(std::uint64_t{1} << x)));
      path.pop_back();
    }
  }

  void run() {
    for (int s = 0; s < sg.n && !found; ++s) {
      std::uint64_t higher = ~((std::uint64_t{2} << s) - 1);
      std::uint64_t nbrs = sg.adj[s] & higher;
      while (nbrs && !found) {
        int v = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        path = {s, v};
        // vertices <= s are excluded; candidates adjacent to s either close
        // the cycle or are skipped, so no chord to s can arise
        std::uint64_t forbidden = ~higher;
        extend((std::uint64_t{1} << s) | (std::uint64_t{1} << v), forbidden);
      }
    }
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_long_isometric_cycle(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw GuardExceeded("isometric-cycle brute force beyond size cap");
  IsoCycleSearch search{g, to_small(g), {}, std::nullopt};
  search.run();
  return search.found;
}

namespace {

struct KrauszSearch {
  const SmallGraph& h;
  bool bipartite;
  std::vector<std::uint64_t> covered;  // covered[u] bit v: edge uv assigned
  std::vector<std::uint64_t> cliques;
  std::array<std::int8_t, 64> count{};

  explicit KrauszSearch(const SmallGraph& h_, bool bip)
      : h(h_), bipartite(bip), covered(h_.n, 0) {}

  bool root_ok() const {
    if (!bipartite) return true;
    // 2-color the root graph; pendant root vertices never constrain anything,
    // so only edges between two cliques matter.
    int k = static_cast<int>(cliques.size());
    std::vector<std::vector<int>> adj(k);
    for (int v = 0; v < h.n; ++v) {
      int c1 = -1, c2 = -1;
      for (int i = 0; i < k; ++i)
        if ((cliques[i] >> v) & 1u) (c1 < 0 ? c1 : c2) = i;
      if (c2 >= 0) {
        adj[c1].push_back(c2);
        adj[c2].push_back(c1);
      }
    }
    std::vector<int> color(k, -1);
    for (int s = 0; s < k; ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::vector<int> stack = {s};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (color[y] < 0) {
            color[y] = 1 - color[x];
            stack.push_back(y);
          } else if (color[y] == color[x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool place_clique(std::uint64_t q) {
    std::vector<std::pair<int, int>> edges;
    std::uint64_t rest = q;
    while (rest) {
      int a = __builtin_ctzll(rest);
      rest &= rest - 1;
      std::uint64_t rest2 = rest;
      while (rest2) {
        int b = __builtin_ctzll(rest2);
        rest2 &= rest2 - 1;
        edges.emplace_back(a, b);
      }
      ++count[a];
    }
    for (auto [a, b] : edges) {
      covered[a] |= std::uint64_t{1} << b;
      covered[b] |= std::uint64_t{1} << a;
    }
    cliques.push_back(q);
    bool ok = solve();
    cliques.pop_back();
    rest = q;
    while (rest) {
      int a = __builtin_ctzll(rest);
      rest &= rest - 1;
      --count[a];
    }
    for (auto [a, b] : edges) {
      covered[a] &= ~(std::uint64_t{1} << b);
      covered[b] &= ~(std::uint64_t{1} << a);
    }
    return ok;
  }

  // enumerate cliques containing base, extendable by vertices in cand
  bool grow(std::uint64_t base, std::uint64_t cand) {
    if (place_clique(base)) return true;
    while (cand) {
      int w = __builtin_ctzll(cand);
      cand &= cand - 1;
      std::uint64_t next_cand = cand & h.adj[w] & ~covered[w];
      // internal edges of the clique must all be uncovered
      std::uint64_t blocked = base & covered[w];
      if (blocked) continue;
      if (grow(base | (std::uint64_t{1} << w), next_cand)) return true;
    }
    return false;
  }

  bool solve() {
    int eu = -1, ev = -1;
    for (int u = 0; u < h.n && eu < 0; ++u) {
      std::uint64_t open = h.adj[u] & ~covered[u] & ~((std::uint64_t{2} << u) - 1);
      if (open) {
        eu = u;
        ev = __builtin_ctzll(open);
      }
    }
    if (eu < 0) return root_ok();
    if (count[eu] >= 2 || count[ev] >= 2) return false;
    std::uint64_t cand = h.adj[eu] & h.adj[ev] & ~covered[eu] & ~covered[ev];
    std::uint64_t filtered = 0;
    while (cand) {
      int w = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (count[w] < 2) filtered |= std::uint64_t{1} << w;
    }
    return grow((std::uint64_t{1} << eu) | (std::uint64_t{1} << ev), filtered);
  }
};

}  // namespace

bool is_line_graph(const SmallGraph& h, bool bipartite_root) {
  KrauszSearch search(h, bipartite_root);
  return search.solve();
}

namespace {

SmallGraph neighborhood_graph(const Graph& g, Vertex v) {
  return induced_small(g, g.neighbors(v));
}

// nullopt = some neighborhood exceeded the cap with every decided one passing
std::optional<bool> link_condition(const Graph& g, bool bipartite, int cap) {
  bool undecided = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > cap) {
      undecided = true;
      continue;
    }
    if (!is_line_graph(neighborhood_graph(g, v), bipartite)) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

bool embeds_in_octahedron(const Graph& g, const std::vector<Vertex>& set, int k) {
  // induced subgraph of K_{k x 2}: complement is a matching plus isolated
  // vertices, and matched pairs + unmatched vertices fit into k parts
  int sz = static_cast<int>(set.size());
  int comp_edges = 0;
  int isolated = 0;
  for (int i = 0; i < sz; ++i) {
    int nondeg = 0;
    for (int j = 0; j < sz; ++j)
      if (j != i && !g.adjacent(set[i], set[j])) ++nondeg;
    if (nondeg > 1) return false;
    if (nondeg == 0) ++isolated;
  }
  for (int i = 0; i < sz; ++i)
    for (int j = i + 1; j < sz; ++j)
      if (!g.adjacent(set[i], set[j])) ++comp_edges;
  return comp_edges + isolated <= k;
}

bool interval_condition(const Graph& g, int k, std::string* why) {
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.dist(u, v) != 2) continue;
      auto cn = g.common_neighbors(u, v);
      bool square = false;
      for (size_t i = 0; i < cn.size() && !square; ++i)
        for (size_t j = i + 1; j < cn.size() && !square; ++j)
          if (!g.adjacent(cn[i], cn[j])) square = true;
      std::vector<Vertex> set = cn;
      set.push_back(u);
      set.push_back(v);
      if (!square || !embeds_in_octahedron(g, set, k)) {
        if (why) {
          std::ostringstream os;
          os << "IC" << k << " fails at distance-2 pair (" << u << "," << v << ")";
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

bool positioning_condition(const Graph& g, bool local_only, std::string* why) {
  auto squares = induced_squares(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    for (const auto& q : squares) {
      if (local_only &&
          (g.dist(s, q[0]) > 3 || g.dist(s, q[1]) > 3 || g.dist(s, q[2]) > 3 ||
           g.dist(s, q[3]) > 3))
        continue;
      if (g.dist(s, q[0]) + g.dist(s, q[2]) != g.dist(s, q[1]) + g.dist(s, q[3])) {
        if (why) {
          std::ostringstream os;
          os << (local_only ? "LPC" : "PC") << " fails at s=" << s << " square ("
             << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

bool is_thick(const Graph& g, std::string* why) {
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.dist(u, v) != 2) continue;
      auto cn = g.common_neighbors(u, v);
      bool ok = false;
      for (size_t i = 0; i < cn.size() && !ok; ++i)
        for (size_t j = i + 1; j < cn.size() && !ok; ++j)
          if (!g.adjacent(cn[i], cn[j])) ok = true;
      if (!ok) {
        if (why) {
          std::ostringstream os;
          os << "pair (" << u << "," << v << ") has no two non-adjacent common neighbors";
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

}  // namespace

BasisConditions basis_graph_conditions(const Graph& g, const OracleOptions& opts) {
  BasisConditions out;
  out.pc = positioning_condition(g, false, nullptr);
  out.lpc = positioning_condition(g, true, nullptr);
  out.ic3 = interval_condition(g, 3, nullptr);
  out.ic4 = interval_condition(g, 4, nullptr);
  out.lc = link_condition(g, false, opts.neighborhood_cap);
  out.blc = link_condition(g, true, opts.neighborhood_cap);
  out.thick = is_thick(g, nullptr);
  return out;
}

namespace {

ClassResult from_condition(const Graph& g, MetricCondition c) {
  auto r = satisfies_condition(g, c);
  if (r.holds) return {};
  std::ostringstream os;
  os << condition_name(c) << " violated at tuple (";
  for (size_t i = 0; i < r.witness.size(); ++i) os << (i ? "," : "") << r.witness[i];
  os << ")";
  return {false, os.str()};
}

ClassResult no_pattern(const Graph& g, PatternId p, int k = 0) {
  if (auto occ = contains_induced(g, p, std::nullopt, k)) {
    std::ostringstream os;
    os << "contains induced " << pattern_name(p) << " at {";
    for (size_t i = 0; i < occ->size(); ++i) os << (i ? "," : "") << (*occ)[i];
    os << "}";
    return {false, os.str()};
  }
  return {};
}

ClassResult no_big_wheel(const Graph& g, int k_min) {
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    auto cyc = find_induced_cycle(neighborhood_graph(g, c), k_min);
    if (cyc) {
      std::ostringstream os;
      os << "induced W" << cyc->size() << " centered at " << c;
      return {false, os.str()};
    }
  }
  return {};
}

ClassResult conjunction(std::initializer_list<ClassResult> parts) {
  for (const auto& r : parts)
    if (!r.member) return r;
  return {};
}

}  // namespace

ClassResult is_class(const Graph& g, ClassId c, const OracleOptions& opts) {
  switch (c) {
    case ClassId::Meshed:
      return from_condition(g, MetricCondition::QCminus);
    case ClassId::WeaklyModular:
      return conjunction({from_condition(g, MetricCondition::TC),
                          from_condition(g, MetricCondition::QC)});
    case ClassId::Modular:
    case ClassId::Median: {
      int n = g.vertex_count();
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x; y < n; ++y)
          for (Vertex z = y; z < n; ++z) {
            size_t medians = median_set(g, x, y, z).size();
            bool bad = c == ClassId::Modular ? medians == 0 : medians != 1;
            if (bad) {
              std::ostringstream os;
              os << "triple (" << x << "," << y << "," << z << ") has " << medians
                 << " medians";
              return {false, os.str()};
            }
          }
      return {};
    }
    case ClassId::PseudoModular: {
      auto wm = is_class(g, ClassId::WeaklyModular, opts);
      if (!wm.member) return wm;
      for (const auto& t : metric_triangles(g))
        if (t.size() > 1) {
          std::ostringstream os;
          os << "metric triangle (" << t.v1 << "," << t.v2 << "," << t.v3
             << ") of size " << t.size();
          return {false, os.str()};
        }
      return {};
    }
    case ClassId::Helly: {
      auto r = is_ball_helly(g);
      if (r.helly) return {};
      std::ostringstream os;
      os << "ball Helly fails at triple (" << r.triple[0] << "," << r.triple[1] << ","
         << r.triple[2] << ")";
      return {false, os.str()};
    }
    case ClassId::Bridged: {
      if (g.vertex_count() <= opts.isometric_cycle_cap) {
        if (auto cyc = find_long_isometric_cycle(g, opts.isometric_cycle_cap)) {
          std::ostringstream os;
          os << "isometric cycle of length " << cyc->size();
          return {false, os.str()};
        }
        return {};
      }
      return conjunction({is_class(g, ClassId::WeaklyModular, opts),
                          no_pattern(g, PatternId::C4), no_pattern(g, PatternId::C5)});
    }
    case ClassId::WeaklyBridged: {
      auto wm = is_class(g, ClassId::WeaklyModular, opts);
      if (!wm.member) return wm;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int r = 1; r < g.diameter(); ++r) {
          auto b = g.ball(v, r);
          if (!g.is_convex_set(b)) {
            std::ostringstream os;
            os << "ball B" << r << "(" << v << ") is not convex";
            return {false, os.str()};
          }
        }
      return {};
    }
    case ClassId::Chordal: {
      if (perfect_elimination_ordering(g)) return {};
      return {false, "no perfect elimination ordering"};
    }
    case ClassId::SweaklyModular:
      return conjunction({is_class(g, ClassId::WeaklyModular, opts),
                          no_pattern(g, PatternId::K4Minus),
                          no_pattern(g, PatternId::K33Minus)});
    case ClassId::DualPolar: {
      auto sw = is_class(g, ClassId::SweaklyModular, opts);
      if (!sw.member) return sw;
      std::string why;
      if (!is_thick(g, &why)) return {false, "not thick: " + why};
      return {};
    }
    case ClassId::Bucolic:
      return conjunction({is_class(g, ClassId::WeaklyModular, opts),
                          no_pattern(g, PatternId::K23), no_pattern(g, PatternId::W4),
                          no_pattern(g, PatternId::W4Minus)});
    case ClassId::CageAmalgamation:
      return conjunction({is_class(g, ClassId::Bucolic, opts), no_big_wheel(g, 4)});
    case ClassId::MatroidBasis:
    case ClassId::EvenDeltaMatroidBasis: {
      std::string why;
      if (!positioning_condition(g, false, &why)) return {false, why};
      int k = c == ClassId::MatroidBasis ? 3 : 4;
      if (!interval_condition(g, k, &why)) return {false, why};
      bool bipartite = c == ClassId::MatroidBasis;
      auto lc = link_condition(g, bipartite, opts.neighborhood_cap);
      if (!lc.has_value())
        throw GuardExceeded("link-condition root reconstruction beyond neighborhood cap");
      if (!*lc)
        return {false, bipartite ? "some neighborhood is not a line graph of a bipartite graph"
                                 : "some neighborhood is not a line graph"};
      return {};
    }
  }
  return {false, "unknown class"};
}

}  // namespace loccert
