#include "loccert/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace loccert {

bool OrientedGraph::has_arc(Vertex v, Vertex u) const {
  return std::find(out[v].begin(), out[v].end(), u) != out[v].end();
}

OrientedGraph orient_by_labels(const Graph& g, std::span<const int> labels) {
  if (labels.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("label vector does not cover all vertices");
  OrientedGraph og;
  og.n = g.vertex_count();
  og.out.assign(og.n, {});
  for (Vertex v = 0; v < og.n; ++v)
    for (Vertex u : g.neighbors(v))
      if (labels[v] == mod3_next(labels[u])) og.out[v].push_back(u);
  return og;
}

AcyclicityReport acyclicity_and_sinks(const OrientedGraph& og) {
  AcyclicityReport rep;
  for (Vertex v = 0; v < og.n; ++v)
    if (og.out[v].empty()) rep.sinks.push_back(v);

  // iterative DFS with colors; on a back arc, recover the cycle from the stack
  std::vector<int> color(og.n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<Vertex> path;
  for (Vertex s = 0; s < og.n && rep.acyclic; ++s) {
    if (color[s]) continue;
    std::vector<std::pair<Vertex, size_t>> stack = {{s, 0}};
    color[s] = 1;
    path = {s};
    while (!stack.empty() && rep.acyclic) {
      auto& [v, idx] = stack.back();
      if (idx == og.out[v].size()) {
        color[v] = 2;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      Vertex u = og.out[v][idx++];
      if (color[u] == 1) {
        rep.acyclic = false;
        auto it = std::find(path.begin(), path.end(), u);
        rep.cycle.assign(it, path.end());
      } else if (color[u] == 0) {
        color[u] = 1;
        stack.emplace_back(u, 0);
        path.push_back(u);
      }
    }
  }
  return rep;
}

std::string election_status_name(ElectionStatus s) {
  switch (s) {
    case ElectionStatus::Elected: return "elected";
    case ElectionStatus::RejectedByVerifier: return "rejected-by-verifier";
    case ElectionStatus::NoUniqueSink: return "no-unique-sink";
  }
  return "?";
}

ElectionOutcome elect_leader(const Graph& g, std::span<const int> labels,
                             const RuleSet& rules, std::uint64_t seed) {
  if (rules.mode != LabelMode::Mod3)
    throw std::invalid_argument("leader election needs a mod-3 rule set");
  ElectionOutcome out;
  Verdict verdict = run_local_verifier(g, labels, rules, seed);
  if (!verdict.accepted) {
    out.status = ElectionStatus::RejectedByVerifier;
    out.rejections = std::move(verdict.rejections);
    return out;
  }
  auto rep = acyclicity_and_sinks(orient_by_labels(g, labels));
  out.sinks = rep.sinks;
  if (!rep.acyclic || rep.sinks.size() != 1) {
    out.status = ElectionStatus::NoUniqueSink;
    return out;
  }
  out.status = ElectionStatus::Elected;
  out.leader = rep.sinks[0];
  return out;
}

int certificate_bits(const RuleSet& rules, const Graph& g) {
  if (rules.mode == LabelMode::Mod3) return 2;
  int d = g.diameter();
  int bits = 0;
  while ((1 << bits) < d + 1) ++bits;
  return bits;
}

}  // namespace loccert
