#pragma once

#include <cstdint>
#include <vector>

#include "loccert/util.hpp"

namespace loccert {

// Canonical form of g: the lexicographically smallest upper-triangle
// adjacency bitmask over vertex permutations compatible with iterated
// degree refinement. Equal masks iff isomorphic.
std::uint64_t canonical_mask(const SmallGraph& g);

// All connected simple graphs on exactly n vertices, one per isomorphism
// class, built by augmenting the (n-1)-vertex list. Practical for n <= 8
// (counts 1, 1, 2, 6, 21, 112, 853, 11117).
std::vector<SmallGraph> enumerate_connected_graphs(int n);

}  // namespace loccert
