#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loccert/graph.hpp"

namespace loccert {

// Global distance conditions quantified over vertex tuples.
enum class MetricCondition { TC, QC, QCminus, QC1minus, QC2minus };

std::string condition_name(MetricCondition c);

struct ConditionResult {
  bool holds = true;
  // violating tuple (u, v, s) or (u, v, w, s) when holds is false
  std::vector<Vertex> witness;
};

// Exhaustive check of the condition over all vertex tuples; when `root` is
// given the condition is only checked for s = root (the rooted variants
// TC(s), QC(s), QC^-(s)).
ConditionResult satisfies_condition(const Graph& g, MetricCondition c,
                                    std::optional<Vertex> root = std::nullopt);

// I(x,y) n I(x,z) n I(y,z), sorted.
std::vector<Vertex> median_set(const Graph& g, Vertex x, Vertex y, Vertex z);

struct MetricTriangle {
  Vertex v1, v2, v3;
  int d12, d23, d31;
  bool equilateral() const { return d12 == d23 && d23 == d31; }
  int size() const { return std::max(d12, std::max(d23, d31)); }
};

// All metric triangles (triples whose pairwise intervals meet only in the
// shared corners), including the degenerate single-vertex ones of size 0.
std::vector<MetricTriangle> metric_triangles(const Graph& g);

bool is_strongly_equilateral(const Graph& g, const MetricTriangle& t);

struct BallHellyResult {
  bool helly = true;
  std::vector<Vertex> triple;                          // violating triple
  std::vector<std::pair<Vertex, int>> family;          // (center, radius) balls
};

// Helly property of the hypergraph of all balls B_r(c), 0 <= r <= diameter,
// decided by the triple criterion: for every vertex triple, the balls
// containing at least two of its members must share a common vertex. On
// failure the pairwise-intersecting family with empty intersection is the
// set of such balls for the violating triple.
BallHellyResult is_ball_helly(const Graph& g);

}  // namespace loccert
