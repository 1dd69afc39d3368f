#include "loccert/predicates.hpp"

#include <algorithm>
#include <stdexcept>

#include "loccert/classes.hpp"
#include "loccert/patterns.hpp"

namespace loccert {

std::string StructuralPredicate::name() const {
  switch (id) {
    case PredicateId::NoWheel: return "NoWheel(" + std::to_string(param) + ")";
    case PredicateId::NoSingleWheel: return "NoW" + std::to_string(param);
    case PredicateId::NoW4W5: return "NoW4W5";
    case PredicateId::NoInducedC4: return "NoInducedC4";
    case PredicateId::ExtendedW5Apex: return "ExtendedW5Apex";
    case PredicateId::CliqueHellyLocal: return "CliqueHellyLocal";
    case PredicateId::LTC: return "LTC";
    case PredicateId::LQC: return "LQC";
    case PredicateId::TriangleFree: return "TriangleFree";
    case PredicateId::NoK23: return "NoK2,3";
    case PredicateId::NoK4Minus: return "NoK4-";
    case PredicateId::NoK33Minus: return "NoK3,3-";
    case PredicateId::NoW4Minus: return "NoW4-";
    case PredicateId::Thick: return "Thick";
    case PredicateId::NoSize2MetricTriangleLocal: return "NoSize2MetricTriangle";
    case PredicateId::LPC: return "LPC";
    case PredicateId::IC3: return "IC3";
    case PredicateId::IC4: return "IC4";
    case PredicateId::LC: return "LC";
    case PredicateId::BLC: return "BLC";
  }
  return "?";
}

int predicate_radius(const StructuralPredicate& p) {
  switch (p.id) {
    case PredicateId::NoWheel:
    case PredicateId::NoSingleWheel:
    case PredicateId::NoW4W5:
    case PredicateId::TriangleFree:
    case PredicateId::LC:
    case PredicateId::BLC:
      return 1;
    case PredicateId::LQC:
    case PredicateId::NoSize2MetricTriangleLocal:
    case PredicateId::LPC:
      return 3;
    default:
      return 2;
  }
}

namespace {

SmallGraph center_neighborhood(const Graph& h) {
  std::vector<Vertex> nb = h.neighbors(0);
  std::sort(nb.begin(), nb.end());
  return induced_small(h, nb);
}

bool forms_c5(const Graph& h, const std::vector<Vertex>& vs) {
  for (Vertex a : vs) {
    int deg = 0;
    for (Vertex b : vs)
      if (b != a && h.adjacent(a, b)) ++deg;
    if (deg != 2) return false;
  }
  // 5 vertices, all of degree 2: either C5 or C3 + C2 (impossible, simple
  // graph has no 2-cycle), so C5
  return true;
}

std::vector<Vertex> cycle_order(const Graph& h, std::vector<Vertex> vs) {
  std::vector<Vertex> order = {vs[0]};
  Vertex prev = -1;
  while (order.size() < vs.size()) {
    for (Vertex b : vs)
      if (b != prev && b != order.back() && h.adjacent(order.back(), b) &&
          std::find(order.begin(), order.end(), b) == order.end()) {
        prev = order.back();
        order.push_back(b);
        break;
      }
  }
  return order;
}

bool extended_w5_apex(const LabeledView& view) {
  const Graph& h = view.subgraph;
  const auto& nb = h.neighbors(0);
  if (nb.size() < 5) return true;
  std::vector<size_t> idx(5);
  // choose induced C5 rims inside N(center)
  std::vector<Vertex> comb;
  auto choose = [&](auto&& self, size_t start, int need) -> bool {
    if (need == 0) {
      if (!forms_c5(h, comb)) return true;
      std::vector<Vertex> rim = cycle_order(h, comb);
      for (Vertex t = 0; t < h.vertex_count(); ++t) {
        if (t == 0 || h.adjacent(t, 0) ||
            std::find(rim.begin(), rim.end(), t) != rim.end())
          continue;
        int hits = 0;
        bool consecutive = false;
        for (int i = 0; i < 5; ++i) {
          if (!h.adjacent(t, rim[i])) continue;
          ++hits;
          if (h.adjacent(t, rim[(i + 1) % 5])) consecutive = true;
        }
        if (hits != 2 || !consecutive) continue;
        // induced W5^ hubbed at the center found; look for an apex
        std::vector<Vertex> body = rim;
        body.push_back(0);
        body.push_back(t);
        bool apex = false;
        for (Vertex a = 0; a < h.vertex_count() && !apex; ++a) {
          if (std::find(body.begin(), body.end(), a) != body.end()) continue;
          apex = std::all_of(body.begin(), body.end(),
                             [&](Vertex b) { return h.adjacent(a, b); });
        }
        if (!apex) return false;
      }
      return true;
    }
    for (size_t i = start; i + need <= nb.size(); ++i) {
      comb.push_back(nb[i]);
      if (!self(self, i + 1, need - 1)) return false;
      comb.pop_back();
    }
    return true;
  };
  return choose(choose, 0, 5);
}

bool clique_helly_local(const LabeledView& view) {
  const Graph& h = view.subgraph;
  const auto& nb = h.neighbors(0);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (!h.adjacent(nb[i], nb[j])) continue;
      Vertex t[3] = {0, nb[i], nb[j]};
      std::vector<Vertex> star;
      for (Vertex x = 0; x < h.vertex_count(); ++x) {
        int hits = 0;
        for (Vertex c : t)
          if (x == c || h.adjacent(x, c)) ++hits;
        if (hits >= 2) star.push_back(x);
      }
      bool universal = false;
      for (Vertex x : star) {
        bool all = true;
        for (Vertex y : star)
          if (y != x && !h.adjacent(x, y)) {
            all = false;
            break;
          }
        if (all) {
          universal = true;
          break;
        }
      }
      if (!universal) return false;
    }
  return true;
}

bool local_tc(const LabeledView& view) {
  const Graph& h = view.subgraph;
  int n = h.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (view.dist_from_center[v] != 2) continue;
    for (Vertex w : h.neighbors(v)) {
      if (w <= v || view.dist_from_center[w] != 2) continue;
      bool ok = false;
      for (Vertex x : h.neighbors(0))
        if (h.adjacent(x, v) && h.adjacent(x, w)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  }
  return true;
}

bool local_qc(const LabeledView& view) {
  const Graph& h = view.subgraph;
  int n = h.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (view.dist_from_center[v] != 2) continue;
    for (Vertex w = v + 1; w < n; ++w) {
      if (view.dist_from_center[w] != 2 || h.adjacent(v, w)) continue;
      bool dvw2 = false;
      for (Vertex y : h.neighbors(v))
        if (h.adjacent(y, w)) {
          dvw2 = true;
          break;
        }
      if (!dvw2) continue;
      for (Vertex z : h.neighbors(v)) {
        if (!h.adjacent(z, w) || view.dist_from_center[z] != 3) continue;
        bool ok = false;
        for (Vertex x : h.neighbors(0))
          if (h.adjacent(x, v) && h.adjacent(x, w)) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool thick_local(const LabeledView& view) {
  const Graph& h = view.subgraph;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (view.dist_from_center[v] != 2) continue;
    auto cn = h.common_neighbors(0, v);
    bool ok = false;
    for (size_t i = 0; i < cn.size() && !ok; ++i)
      for (size_t j = i + 1; j < cn.size() && !ok; ++j)
        if (!h.adjacent(cn[i], cn[j])) ok = true;
    if (!ok) return false;
  }
  return true;
}

bool no_size2_metric_triangle(const LabeledView& view) {
  const Graph& h = view.subgraph;
  int n = h.vertex_count();
  auto corner = [&](Vertex a, Vertex b, Vertex c) {
    // I(a,b) n I(a,c) == {a} within the view
    int dab = h.dist(a, b), dac = h.dist(a, c);
    for (Vertex x = 0; x < n; ++x)
      if (x != a && h.dist(a, x) + h.dist(x, b) == dab &&
          h.dist(a, x) + h.dist(x, c) == dac)
        return false;
    return true;
  };
  for (Vertex b = 1; b < n; ++b)
    for (Vertex c = b + 1; c < n; ++c) {
      int d0b = h.dist(0, b), d0c = h.dist(0, c), dbc = h.dist(b, c);
      int mx = std::max({d0b, d0c, dbc});
      if (mx != 2 || d0b > 2 || d0c > 2 || dbc > 2) continue;
      if (corner(0, b, c) && corner(b, 0, c) && corner(c, 0, b)) return false;
    }
  return true;
}

bool local_pc(const LabeledView& view) {
  const Graph& h = view.subgraph;
  for (const auto& q : induced_squares(h)) {
    bool inside = true;
    for (Vertex x : q)
      if (view.dist_from_center[x] > 3) inside = false;
    if (!inside) continue;
    if (h.dist(0, q[0]) + h.dist(0, q[2]) != h.dist(0, q[1]) + h.dist(0, q[3]))
      return false;
  }
  return true;
}

bool local_ic(const LabeledView& view, int k) {
  const Graph& h = view.subgraph;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (view.dist_from_center[v] != 2) continue;
    auto cn = h.common_neighbors(0, v);
    bool square = false;
    for (size_t i = 0; i < cn.size() && !square; ++i)
      for (size_t j = i + 1; j < cn.size() && !square; ++j)
        if (!h.adjacent(cn[i], cn[j])) square = true;
    if (!square) return false;
    std::vector<Vertex> set = cn;
    set.push_back(0);
    set.push_back(v);
    int sz = static_cast<int>(set.size());
    int comp_edges = 0, isolated = 0;
    bool ok = true;
    for (int i = 0; i < sz && ok; ++i) {
      int nondeg = 0;
      for (int j = 0; j < sz; ++j)
        if (j != i && !h.adjacent(set[i], set[j])) ++nondeg;
      if (nondeg > 1) ok = false;
      if (nondeg == 0) ++isolated;
    }
    if (!ok) return false;
    for (int i = 0; i < sz; ++i)
      for (int j = i + 1; j < sz; ++j)
        if (!h.adjacent(set[i], set[j])) ++comp_edges;
    if (comp_edges + isolated > k) return false;
  }
  return true;
}

}  // namespace

PredicateResult eval_predicate(const StructuralPredicate& p,
                               const LabeledView& view, int neighborhood_cap) {
  if (view.radius < predicate_radius(p))
    throw std::invalid_argument("view radius too small for predicate " + p.name());
  const Graph& h = view.subgraph;
  auto pass = [](bool b) { return b ? PredicateResult::Pass : PredicateResult::Fail; };
  switch (p.id) {
    case PredicateId::NoWheel:
      return pass(!find_induced_cycle(center_neighborhood(h), p.param));
    case PredicateId::NoSingleWheel:
      return pass(!find_induced_cycle(center_neighborhood(h), p.param, p.param));
    case PredicateId::NoW4W5:
      return pass(!find_induced_cycle(center_neighborhood(h), 4, 5));
    case PredicateId::NoInducedC4:
      return pass(!contains_induced(h, PatternId::C4, 0));
    case PredicateId::ExtendedW5Apex:
      return pass(extended_w5_apex(view));
    case PredicateId::CliqueHellyLocal:
      return pass(clique_helly_local(view));
    case PredicateId::LTC:
      return pass(local_tc(view));
    case PredicateId::LQC:
      return pass(local_qc(view));
    case PredicateId::TriangleFree: {
      const auto& nb = h.neighbors(0);
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (h.adjacent(nb[i], nb[j])) return PredicateResult::Fail;
      return PredicateResult::Pass;
    }
    case PredicateId::NoK23:
      return pass(!contains_induced(h, PatternId::K23, 0));
    case PredicateId::NoK4Minus:
      return pass(!contains_induced(h, PatternId::K4Minus, 0));
    case PredicateId::NoK33Minus:
      return pass(!contains_induced(h, PatternId::K33Minus, 0));
    case PredicateId::NoW4Minus:
      return pass(!contains_induced(h, PatternId::W4Minus, 0));
    case PredicateId::Thick:
      return pass(thick_local(view));
    case PredicateId::NoSize2MetricTriangleLocal:
      return pass(no_size2_metric_triangle(view));
    case PredicateId::LPC:
      return pass(local_pc(view));
    case PredicateId::IC3:
      return pass(local_ic(view, 3));
    case PredicateId::IC4:
      return pass(local_ic(view, 4));
    case PredicateId::LC:
    case PredicateId::BLC: {
      if (h.degree(0) > neighborhood_cap) return PredicateResult::Undecided;
      bool bip = p.id == PredicateId::BLC;
      return pass(is_line_graph(center_neighborhood(h), bip));
    }
  }
  return PredicateResult::Fail;
}

}  // namespace loccert
