#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loccert/graph.hpp"

namespace loccert {

// Fixed forbidden/required patterns. Wheel and Octahedron take a size
// parameter k; all others are a single fixed graph.
enum class PatternId {
  C4,
  C5,
  K3,
  K23,
  K4Minus,
  K33Minus,
  W4,
  W4Minus,
  W5,
  Wheel,       // W_k, k >= 3 (cycle C_k plus a universal center)
  ExtendedW5,  // W_5 plus a triangle sharing exactly one rim edge
  Octahedron,  // cocktail-party graph K_{k x 2}
};

std::string pattern_name(PatternId p);

// Canonical vertex/edge list of the pattern. k is required for Wheel and
// Octahedron and ignored otherwise.
Graph pattern_graph(PatternId p, int k = 0);

// Induced occurrence of the pattern in g as a map pattern-vertex -> g-vertex,
// optionally required to contain `anchor`. Returns nullopt if none exists.
std::optional<std::vector<Vertex>> contains_induced(
    const Graph& g, PatternId p, std::optional<Vertex> anchor = std::nullopt,
    int k = 0);

// Same search against an arbitrary connected pattern.
std::optional<std::vector<Vertex>> find_induced(
    const Graph& g, const Graph& pattern,
    std::optional<Vertex> anchor = std::nullopt);

// An induced cycle of length >= min_len (and <= max_len if positive) in a
// SmallGraph, as a vertex sequence. Used for wheel detection in open
// neighborhoods and for isometric-cycle oracles.
std::optional<std::vector<int>> find_induced_cycle(const SmallGraph& g,
                                                   int min_len,
                                                   int max_len = 0);

}  // namespace loccert
