#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loccert/verifier.hpp"

namespace loccert {

// Orientation induced by a mod-3 labeling: arc v -> u iff v ~ u and
// L(v) = next(L(u)) (v points one step down the gradient).
struct OrientedGraph {
  int n = 0;
  std::vector<std::vector<Vertex>> out;  // out[v] = heads of arcs v -> u
  bool has_arc(Vertex v, Vertex u) const;
};

OrientedGraph orient_by_labels(const Graph& g, std::span<const int> labels);

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<Vertex> cycle;  // a directed cycle when not acyclic
  std::vector<Vertex> sinks;  // vertices with no outgoing arc
};

AcyclicityReport acyclicity_and_sinks(const OrientedGraph& og);

enum class ElectionStatus { Elected, RejectedByVerifier, NoUniqueSink };

struct ElectionOutcome {
  ElectionStatus status = ElectionStatus::Elected;
  Vertex leader = -1;  // valid only when status is Elected
  std::vector<Rejection> rejections;
  std::vector<Vertex> sinks;
};

std::string election_status_name(ElectionStatus s);

// Verifies the labeling with the given mod-3 rule set, then orients the graph
// and requires a unique sink, which becomes the leader.
ElectionOutcome elect_leader(const Graph& g, std::span<const int> labels,
                             const RuleSet& rules, std::uint64_t seed = 0);

// Bits needed per vertex: exactly 2 for mod-3 labels, ceil(log2(D+1)) for
// distance labels on a graph of diameter D.
int certificate_bits(const RuleSet& rules, const Graph& g);

}  // namespace loccert
