#include "loccert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace loccert {

FamilySpec parse_family_spec(const std::string& text, std::uint64_t seed) {
  FamilySpec spec;
  spec.seed = seed;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw std::invalid_argument("empty family name");
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t used = 0;
      int value;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter: " + tok);
      }
      if (used != tok.size())
        throw std::invalid_argument("bad family parameter: " + tok);
      spec.params.push_back(value);
    }
    if (spec.params.empty())
      throw std::invalid_argument("missing parameters after ':' in " + text);
  }
  return spec;
}

namespace {

int param(const FamilySpec& s, size_t i, int lo) {
  if (i >= s.params.size())
    throw std::invalid_argument("family " + s.family + " needs more parameters");
  if (s.params[i] < lo)
    throw std::invalid_argument("family " + s.family + ": parameter too small");
  return s.params[i];
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_gen(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int p, int q) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
  return Graph(p + q, e);
}

Graph grid_graph(int p, int q, bool king) {
  auto id = [q](int i, int j) { return i * q + j; };
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      if (i + 1 < p) e.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < q) e.emplace_back(id(i, j), id(i, j + 1));
      if (king && i + 1 < p && j + 1 < q) {
        e.emplace_back(id(i, j), id(i + 1, j + 1));
        e.emplace_back(id(i + 1, j), id(i, j + 1));
      }
    }
  return Graph(p * q, e);
}

Graph triangular_grid(int p) {
  // triangular patch {(i, j) : i, j >= 0, i + j <= p}
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; i + j <= p; ++j) pts.emplace_back(i, j);
  auto id = [&](int i, int j) {
    return static_cast<int>(std::find(pts.begin(), pts.end(), std::pair{i, j}) - pts.begin());
  };
  std::vector<Edge> e;
  for (auto [i, j] : pts) {
    if (i + j < p) {
      e.emplace_back(id(i, j), id(i + 1, j));
      e.emplace_back(id(i, j), id(i, j + 1));
      e.emplace_back(id(i + 1, j), id(i, j + 1));
    }
  }
  return Graph(static_cast<int>(pts.size()), e);
}

Graph hypercube(int d) {
  int n = 1 << d;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
  return Graph(n, e);
}

Graph octahedron(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < 2 * k; ++i)
    for (int j = i + 1; j < 2 * k; ++j)
      if (j != i + k) e.emplace_back(i, j);
  return Graph(2 * k, e);
}

Graph johnson(int n, int k) {
  if (k > n) throw std::invalid_argument("johnson needs k <= n");
  std::vector<unsigned> sets;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) sets.push_back(m);
  std::vector<Edge> e;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (__builtin_popcount(sets[i] & sets[j]) == k - 1)
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(sets.size()), e);
}

Graph wheel_gen(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k);
  }
  return Graph(k + 1, e);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(mix_seed(seed, 0x7265));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  std::vector<Edge> e;
  std::vector<char> leafed(n, 0);
  for (int x : prufer) {
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1 && !leafed[v]) {
        e.emplace_back(v, x);
        leafed[v] = 1;
        --deg[x];
        break;
      }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1 && !leafed[v]) (a < 0 ? a : b) = v;
  e.emplace_back(a, b);
  return Graph(n, e);
}

Graph random_chordal(int n, std::uint64_t seed) {
  // build in reverse elimination order: each new vertex attaches to a clique
  std::mt19937_64 rng(mix_seed(seed, 0x6368));
  std::vector<Edge> e;
  std::vector<std::vector<int>> adj(n);
  auto connect = [&](int u, int v) {
    e.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    std::vector<int> clique = {pick(rng)};
    // grow the attachment clique by common neighbors, geometrically
    while (std::uniform_int_distribution<int>(0, 99)(rng) < 60) {
      std::vector<int> cands;
      for (int w : adj[clique[0]]) {
        if (w >= v || std::find(clique.begin(), clique.end(), w) != clique.end())
          continue;
        bool all = true;
        for (int c : clique)
          if (c != clique[0] &&
              std::find(adj[c].begin(), adj[c].end(), w) == adj[c].end())
            all = false;
        if (all) cands.push_back(w);
      }
      if (cands.empty()) break;
      clique.push_back(cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)]);
    }
    for (int c : clique) connect(v, c);
  }
  return Graph(n, e);
}

Graph random_connected(int n, int permille, std::uint64_t seed) {
  if (permille < 0 || permille > 1000)
    throw std::invalid_argument("randgraph edge probability must be 0..1000 permille");
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, 0x6772 + attempt));
    std::uniform_int_distribution<int> coin(0, 999);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < permille) e.emplace_back(i, j);
    try {
      return Graph(n, e);
    } catch (const std::domain_error&) {
      continue;  // disconnected; resample
    }
  }
  throw std::invalid_argument("randgraph: no connected sample found (probability too low?)");
}

}  // namespace

Graph tree_exchange_graph(const Graph& h) {
  int n = h.vertex_count();
  auto he = h.edges();
  int m = static_cast<int>(he.size());
  std::vector<std::vector<int>> trees;  // sorted edge-index lists

  // enumerate spanning trees: choose n-1 acyclic edges by index order
  std::vector<int> parent(n);
  std::vector<int> chosen;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> snapshot;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      trees.push_back(chosen);
      return;
    }
    int need = n - 1 - static_cast<int>(chosen.size());
    for (int i = next; i + need <= m; ++i) {
      int a = find(he[i].first), b = find(he[i].second);
      if (a == b) continue;
      std::vector<int> save = parent;
      parent[a] = b;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      parent = std::move(save);
    }
  };
  std::iota(parent.begin(), parent.end(), 0);
  rec(rec, 0);

  std::vector<Edge> e;
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = i + 1; j < trees.size(); ++j) {
      int diff = 0;
      for (size_t a = 0, b = 0; a < trees[i].size() || b < trees[j].size();) {
        if (a < trees[i].size() && b < trees[j].size() && trees[i][a] == trees[j][b]) {
          ++a, ++b;
        } else if (b == trees[j].size() ||
                   (a < trees[i].size() && trees[i][a] < trees[j][b])) {
          ++diff, ++a;
        } else {
          ++b;
        }
      }
      if (diff == 1) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(trees.size()), e);
}

Graph generate(const FamilySpec& s) {
  const std::string& f = s.family;
  if (f == "path") return path_graph(param(s, 0, 1));
  if (f == "cycle") return cycle_gen(param(s, 0, 3));
  if (f == "complete") return complete_graph(param(s, 0, 1));
  if (f == "bipartite") return complete_bipartite(param(s, 0, 1), param(s, 1, 1));
  if (f == "grid") return grid_graph(param(s, 0, 1), param(s, 1, 1), false);
  if (f == "kinggrid") return grid_graph(param(s, 0, 1), param(s, 1, 1), true);
  if (f == "trigrid") return triangular_grid(param(s, 0, 1));
  if (f == "hypercube") return hypercube(param(s, 0, 0));
  if (f == "octahedron") return octahedron(param(s, 0, 1));
  if (f == "johnson") return johnson(param(s, 0, 1), param(s, 1, 1));
  if (f == "treexchange") return tree_exchange_graph(complete_graph(param(s, 0, 2)));
  if (f == "wheel") return wheel_gen(param(s, 0, 3));
  if (f == "randtree") return random_tree(param(s, 0, 1), s.seed);
  if (f == "randchordal") return random_chordal(param(s, 0, 1), s.seed);
  if (f == "randgraph") return random_connected(param(s, 0, 1), param(s, 1, 0), s.seed);
  throw std::invalid_argument("unknown family: " + f);
}

namespace {

std::vector<std::string> corpus_pool(ClassId c) {
  std::vector<std::string> pool;
  auto add = [&](std::initializer_list<const char*> xs) {
    for (const char* x : xs) pool.push_back(x);
  };
  auto add_range = [&](const std::string& fam, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) pool.push_back(fam + ":" + std::to_string(i));
  };
  auto add_rand = [&](const std::string& fam, std::initializer_list<int> sizes, int reps) {
    for (int r = 0; r < reps; ++r)
      for (int n : sizes) pool.push_back(fam + ":" + std::to_string(n));
  };

  switch (c) {
    case ClassId::Meshed:
      add({"grid:2,2", "grid:2,3", "grid:3,3", "grid:3,4", "grid:4,4", "grid:4,5",
           "grid:5,5", "grid:5,6", "grid:6,6", "grid:6,7", "grid:7,7", "grid:7,8",
           "hypercube:2", "hypercube:3", "hypercube:4", "hypercube:5",
           "kinggrid:2,3", "kinggrid:3,3", "kinggrid:3,4", "kinggrid:4,4",
           "kinggrid:4,6", "kinggrid:5,5", "kinggrid:5,7", "kinggrid:6,6",
           "octahedron:2", "octahedron:3", "octahedron:4", "johnson:5,2",
           "johnson:6,2", "johnson:7,2", "bipartite:2,3", "bipartite:3,3",
           "bipartite:3,4"});
      add_range("trigrid", 2, 8);
      add_range("complete", 3, 8);
      add_rand("randtree", {20, 35, 50, 60}, 2);
      add_rand("randchordal", {12, 20, 30, 40}, 2);
      break;
    case ClassId::WeaklyModular:
    case ClassId::PseudoModular:
      add({"grid:3,3", "grid:4,5", "hypercube:3", "hypercube:4", "kinggrid:3,4",
           "kinggrid:4,4", "kinggrid:5,5", "octahedron:2", "octahedron:3",
           "bipartite:2,3", "bipartite:3,3", "bipartite:3,5", "wheel:5"});
      add_range("trigrid", 2, 7);
      add_range("complete", 3, 8);
      add_rand("randtree", {15, 25, 40}, 3);
      add_rand("randchordal", {12, 20, 30, 45}, 3);
      break;
    case ClassId::Modular:
      add({"bipartite:2,2", "bipartite:2,3", "bipartite:2,4", "bipartite:3,3",
           "bipartite:3,4", "bipartite:3,5", "bipartite:4,4", "bipartite:4,5",
           "grid:2,2", "grid:2,4", "grid:3,3", "grid:3,5", "grid:4,4", "grid:4,6",
           "grid:5,5", "grid:5,7", "grid:6,6", "hypercube:2", "hypercube:3",
           "hypercube:4", "hypercube:5", "path:10", "path:25"});
      add_rand("randtree", {15, 25, 35, 50}, 3);
      break;
    case ClassId::Median:
      add({"grid:2,2", "grid:2,4", "grid:2,7", "grid:3,3", "grid:3,5", "grid:3,8",
           "grid:4,4", "grid:4,6", "grid:5,5", "grid:5,7", "grid:6,6", "grid:6,8",
           "grid:7,7", "hypercube:2", "hypercube:3", "hypercube:4", "hypercube:5",
           "path:5", "path:12", "path:30", "path:55", "complete:1", "complete:2"});
      add_rand("randtree", {10, 20, 30, 40, 55}, 3);
      break;
    case ClassId::Helly:
      add({"kinggrid:1,5", "kinggrid:2,2", "kinggrid:2,4", "kinggrid:2,8",
           "kinggrid:3,3", "kinggrid:3,5", "kinggrid:3,9", "kinggrid:4,4",
           "kinggrid:4,6", "kinggrid:4,10", "kinggrid:5,5", "kinggrid:5,8",
           "kinggrid:6,6", "kinggrid:6,9", "kinggrid:7,7", "kinggrid:7,8",
           "octahedron:2", "octahedron:3", "octahedron:4", "wheel:4"});
      add_range("complete", 2, 9);
      add_rand("randtree", {12, 20, 30, 42, 55}, 3);
      break;
    case ClassId::Bridged:
    case ClassId::WeaklyBridged:
      add_range("trigrid", 2, 9);
      add_range("complete", 3, 9);
      add({"path:8", "path:20", "wheel:3"});
      if (c == ClassId::WeaklyBridged) add({"wheel:5"});
      add_rand("randchordal", {10, 15, 22, 30, 40, 52}, 4);
      add_rand("randtree", {15, 30, 45}, 2);
      break;
    case ClassId::Chordal:
      add_range("complete", 1, 9);
      add({"path:6", "path:18", "path:40", "wheel:3"});
      add_rand("randchordal", {8, 14, 22, 30, 40, 55}, 4);
      add_rand("randtree", {12, 25, 45}, 3);
      break;
    case ClassId::SweaklyModular:
    case ClassId::DualPolar:
      add({"bipartite:2,2", "bipartite:2,3", "bipartite:3,3", "bipartite:3,4",
           "bipartite:4,4", "bipartite:4,5", "bipartite:5,5", "bipartite:5,6",
           "bipartite:6,6", "hypercube:2", "hypercube:3", "hypercube:4",
           "hypercube:5", "grid:2,2", "grid:3,3", "grid:4,4", "grid:5,5",
           "complete:1", "complete:2", "path:10", "path:30", "cycle:4"});
      add_rand("randtree", {10, 20, 35, 50}, 3);
      break;
    case ClassId::Bucolic:
    case ClassId::CageAmalgamation:
      add({"grid:2,2", "grid:2,5", "grid:3,3", "grid:3,6", "grid:4,4", "grid:4,7",
           "grid:5,5", "grid:5,8", "grid:6,6", "hypercube:2", "hypercube:3",
           "hypercube:4", "hypercube:5", "path:9", "path:24", "path:48",
           "complete:3", "complete:4", "complete:5", "complete:6", "complete:7",
           "wheel:3"});
      add_rand("randtree", {12, 22, 32, 45, 58}, 3);
      break;
    case ClassId::MatroidBasis:
      add({"johnson:4,2", "johnson:5,2", "johnson:6,2", "johnson:7,2",
           "treexchange:3", "treexchange:4", "hypercube:1", "hypercube:2",
           "hypercube:3", "hypercube:4", "hypercube:5", "hypercube:6",
           "complete:1", "complete:2", "complete:3", "path:2", "path:3",
           "grid:2,2", "grid:2,3", "grid:2,4", "grid:2,5", "grid:3,3",
           "grid:3,4", "grid:4,4", "grid:4,5", "grid:5,5", "grid:5,6",
           "grid:6,6", "grid:2,8", "grid:3,7", "cycle:4"});
      break;
    case ClassId::EvenDeltaMatroidBasis:
      add({"johnson:4,2", "johnson:5,2", "johnson:6,2", "johnson:7,2",
           "treexchange:3", "treexchange:4", "hypercube:1", "hypercube:2",
           "hypercube:3", "hypercube:4", "hypercube:5", "hypercube:6",
           "octahedron:2", "octahedron:3", "octahedron:4", "octahedron:5",
           "complete:1", "complete:2", "complete:3", "path:2", "path:3",
           "grid:2,2", "grid:2,4", "grid:3,3", "grid:3,5", "grid:4,4",
           "grid:4,6", "grid:5,5", "grid:5,7", "grid:6,6", "cycle:4"});
      break;
  }
  return pool;
}

}  // namespace

CorpusResult sample_class_corpus(ClassId c, int count, int max_n,
                                 std::uint64_t seed, const OracleOptions& opts) {
  CorpusResult out;
  auto pool = corpus_pool(c);
  int rand_index = 0;
  for (const auto& text : pool) {
    if (static_cast<int>(out.graphs.size()) >= count) break;
    FamilySpec spec = parse_family_spec(text, mix_seed(seed, ++rand_index));
    Graph g = generate(spec);
    if (g.vertex_count() > max_n) continue;
    try {
      if (!is_class(g, c, opts).member) continue;
    } catch (const GuardExceeded&) {
      continue;
    }
    out.graphs.push_back(std::move(g));
    out.names.push_back(text);
  }
  out.shortfall = static_cast<int>(out.graphs.size()) < count;
  return out;
}

}  // namespace loccert
