#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loccert/rules.hpp"

namespace loccert {

struct Rejection {
  Vertex vertex;
  RuleId rule;
};

struct Verdict {
  bool accepted = true;
  std::vector<Rejection> rejections;  // every failing (vertex, rule) pair
};

// Runs every rule of the set at every vertex on its anonymized r-ball view.
// View shuffles are derived per-vertex from the seed.
Verdict run_local_verifier(const Graph& g, std::span<const int> labels,
                           const RuleSet& rules, std::uint64_t seed = 0);

// Distance labeling from root s: labels[v] = d(s, v).
std::vector<int> distance_labeling(const Graph& g, Vertex s);
// Mod-3 labeling from root s: labels[v] = d(s, v) mod 3.
std::vector<int> mod3_labeling(const Graph& g, Vertex s);

// All labelings accepted by the verifier, in lexicographic order. Distance
// mode searches values 0..diameter per vertex (a superset of what any
// accepted distance labeling can use); mod-3 mode searches {0,1,2}^V.
// Throws GuardExceeded when the backtracking search exceeds node_budget.
// max_label overrides the per-vertex value cap when nonnegative.
std::vector<std::vector<int>> enumerate_accepted_labelings(
    const Graph& g, const RuleSet& rules, std::uint64_t seed = 0,
    std::uint64_t node_budget = 200'000'000, int max_label = -1);

}  // namespace loccert
