#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace loccert {

// Raised when a brute-force sub-oracle would run past its configured size cap.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Adjacency-mask graph on at most 64 vertices, used for neighborhood
// subgraphs and exhaustive enumeration. Unlike Graph it may be disconnected.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] = neighbor mask

  explicit SmallGraph(int vertices = 0) : n(vertices), adj(vertices, 0) {}

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  int degree(int v) const { return __builtin_popcountll(adj[v]); }
  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
  }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace loccert
