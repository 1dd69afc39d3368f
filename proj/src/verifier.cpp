#include "loccert/verifier.hpp"

#include <algorithm>

namespace loccert {

Verdict run_local_verifier(const Graph& g, std::span<const int> labels,
                           const RuleSet& rules, std::uint64_t seed) {
  if (labels.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("label vector does not cover all vertices");
  Verdict verdict;
  int r = rules.radius();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    LabeledView view = extract_view(g, labels, v, r, seed);
    for (RuleId rule : rules.rules)
      if (!eval_rule(rule, view)) {
        verdict.accepted = false;
        verdict.rejections.push_back({v, rule});
      }
  }
  return verdict;
}

std::vector<int> distance_labeling(const Graph& g, Vertex s) {
  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.dist(s, v);
  return out;
}

std::vector<int> mod3_labeling(const Graph& g, Vertex s) {
  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.dist(s, v) % 3;
  return out;
}

namespace {

struct LabelingSearch {
  const Graph& g;
  const RuleSet& rules;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  int n;
  int max_label;
  bool dist_mode;
  std::vector<Vertex> order;            // BFS assignment order from vertex 0
  std::vector<int> labels;              // -1 = unassigned
  std::vector<LabeledView> views;       // cached r-ball view per vertex
  std::vector<std::vector<Vertex>> containers;  // u -> centers whose ball has u
  std::vector<int> ball_remaining;      // unassigned count per center's ball
  std::vector<std::vector<int>> results;

  LabelingSearch(const Graph& g_, const RuleSet& rules_, std::uint64_t seed,
                 std::uint64_t budget_, int max_label_)
      : g(g_), rules(rules_), budget(budget_), n(g_.vertex_count()) {
    dist_mode = rules.mode == LabelMode::Distance;
    max_label = max_label_ >= 0 ? max_label_ : (dist_mode ? g.diameter() : 2);
    labels.assign(n, -1);
    order.push_back(0);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
      for (Vertex u : g.neighbors(order[i]))
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
    int r = rules.radius();
    containers.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      views.push_back(extract_view(g, labels, v, r, seed));
      for (Vertex u : views.back().to_global) containers[u].push_back(v);
      ball_remaining.push_back(static_cast<int>(views.back().to_global.size()));
    }
  }

  bool check_center(Vertex c) {
    LabeledView& view = views[c];
    for (size_t i = 0; i < view.to_global.size(); ++i)
      view.labels[i] = labels[view.to_global[i]];
    for (RuleId rule : rules.rules)
      if (!eval_rule(rule, view)) return false;
    return true;
  }

  bool edge_ok(int a, int b) const {
    if (dist_mode)
      return std::abs(a - b) <= 1 && (a != 0 || b == 1) && (b != 0 || a == 1);
    return true;
  }

  bool triangle_ok(Vertex v, int value) const {
    if (dist_mode) return true;
    // no rainbow triangle through v among assigned neighbors (rule MGT)
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      int a = labels[nb[i]];
      if (a < 0 || a == value) continue;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int b = labels[nb[j]];
        if (b < 0 || b == value || b == a) continue;
        if (g.adjacent(nb[i], nb[j])) return false;
      }
    }
    return true;
  }

  void rec(size_t pos) {
    if (pos == order.size()) {
      results.push_back(labels);
      return;
    }
    Vertex v = order[pos];
    for (int value = 0; value <= max_label; ++value) {
      if (++nodes > budget)
        throw GuardExceeded("labeling enumeration exceeded its node budget");
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (labels[u] >= 0 && !edge_ok(value, labels[u])) {
          ok = false;
          break;
        }
      if (!ok || !triangle_ok(v, value)) continue;
      labels[v] = value;
      int completed_upto = -1;
      for (size_t ci = 0; ci < containers[v].size() && ok; ++ci) {
        Vertex c = containers[v][ci];
        --ball_remaining[c];
        completed_upto = static_cast<int>(ci);
        if (ball_remaining[c] == 0 && !check_center(c)) ok = false;
      }
      if (ok) rec(pos + 1);
      for (int ci = 0; ci <= completed_upto; ++ci)
        ++ball_remaining[containers[v][ci]];
      labels[v] = -1;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_accepted_labelings(
    const Graph& g, const RuleSet& rules, std::uint64_t seed,
    std::uint64_t node_budget, int max_label) {
  LabelingSearch search(g, rules, seed, node_budget, max_label);
  search.rec(0);
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

}  // namespace loccert
