#include "loccert/metric.hpp"

#include <algorithm>

namespace loccert {

std::string condition_name(MetricCondition c) {
  switch (c) {
    case MetricCondition::TC: return "TC";
    case MetricCondition::QC: return "QC";
    case MetricCondition::QCminus: return "QC-";
    case MetricCondition::QC1minus: return "QC1-";
    case MetricCondition::QC2minus: return "QC2-";
  }
  return "?";
}

namespace {

bool common_neighbor_with(const Graph& g, Vertex u, Vertex v, auto&& pred) {
  for (Vertex x : g.neighbors(u))
    if (g.adjacent(x, v) && pred(x)) return true;
  return false;
}

}  // namespace

ConditionResult satisfies_condition(const Graph& g, MetricCondition c,
                                    std::optional<Vertex> root) {
  int n = g.vertex_count();
  Vertex s_lo = root.value_or(0), s_hi = root.value_or(n - 1);
  for (Vertex s = s_lo; s <= s_hi; ++s) {
    switch (c) {
      case MetricCondition::TC:
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v : g.neighbors(u)) {
            if (v < u || g.dist(s, u) != g.dist(s, v)) continue;
            int want = g.dist(s, u) - 1;
            if (!common_neighbor_with(g, u, v, [&](Vertex x) { return g.dist(s, x) == want; }))
              return {false, {u, v, s}};
          }
        break;
      case MetricCondition::QCminus:
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            if (g.dist(u, v) != 2) continue;
            int bound = g.dist(s, u) + g.dist(s, v);
            if (!common_neighbor_with(g, u, v, [&](Vertex x) { return 2 * g.dist(s, x) <= bound; }))
              return {false, {u, v, s}};
          }
        break;
      case MetricCondition::QC:
      case MetricCondition::QC1minus:
      case MetricCondition::QC2minus:
        for (Vertex w = 0; w < n; ++w)
          for (Vertex u : g.neighbors(w))
            for (Vertex v : g.neighbors(w)) {
              if (v <= u || g.dist(u, v) != 2) continue;
              int du = g.dist(s, u), dv = g.dist(s, v), dw = g.dist(s, w);
              if (c == MetricCondition::QC1minus) {
                // the hypothesis is symmetric in u,v only when du == dv,
                // so check both orientations of the descent
                for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                  int da = g.dist(s, a), db = g.dist(s, b);
                  if (da != dw || da != db + 1) continue;
                  if (!common_neighbor_with(g, a, b, [&](Vertex x) { return g.dist(s, x) == db; }))
                    return {false, {a, b, w, s}};
                }
              } else {
                if (du != dv || du != dw - 1) continue;
                bool ok = c == MetricCondition::QC
                              ? common_neighbor_with(g, u, v, [&](Vertex x) { return g.dist(s, x) == du - 1; })
                              : common_neighbor_with(g, u, v, [&](Vertex x) {
                                  return du - 1 <= g.dist(s, x) && g.dist(s, x) <= du;
                                });
                if (!ok) return {false, {u, v, w, s}};
              }
            }
        break;
    }
  }
  return {};
}

std::vector<Vertex> median_set(const Graph& g, Vertex x, Vertex y, Vertex z) {
  std::vector<Vertex> out;
  int dxy = g.dist(x, y), dxz = g.dist(x, z), dyz = g.dist(y, z);
  for (Vertex m = 0; m < g.vertex_count(); ++m)
    if (g.dist(x, m) + g.dist(m, y) == dxy && g.dist(x, m) + g.dist(m, z) == dxz &&
        g.dist(y, m) + g.dist(m, z) == dyz)
      out.push_back(m);
  return out;
}

namespace {

// dynamic bitset helpers over vector<uint64_t>
using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool get_bit(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }

bool intersection_is(const Mask& a, const Mask& b, int only) {
  for (size_t w = 0; w < a.size(); ++w) {
    std::uint64_t x = a[w] & b[w];
    if (static_cast<int>(w) == (only >> 6)) x &= ~(std::uint64_t{1} << (only & 63));
    if (x) return false;
  }
  return get_bit(a, only) && get_bit(b, only);
}

}  // namespace

std::vector<MetricTriangle> metric_triangles(const Graph& g) {
  int n = g.vertex_count();
  int words = (n + 63) / 64;
  std::vector<Mask> interval(static_cast<size_t>(n) * n, Mask(words, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) {
      Mask m(words, 0);
      int duv = g.dist(u, v);
      for (Vertex x = 0; x < n; ++x)
        if (g.dist(u, x) + g.dist(x, v) == duv) set_bit(m, x);
      interval[u * n + v] = m;
      interval[v * n + u] = std::move(m);
    }

  std::vector<MetricTriangle> out;
  for (Vertex v = 0; v < n; ++v) out.push_back({v, v, v, 0, 0, 0});
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        if (!intersection_is(interval[a * n + b], interval[a * n + c], a)) continue;
        if (!intersection_is(interval[b * n + a], interval[b * n + c], b)) continue;
        if (!intersection_is(interval[c * n + a], interval[c * n + b], c)) continue;
        out.push_back({a, b, c, g.dist(a, b), g.dist(b, c), g.dist(c, a)});
      }
  return out;
}

bool is_strongly_equilateral(const Graph& g, const MetricTriangle& t) {
  if (!t.equilateral()) return false;
  int k = t.d12;
  auto check = [&](Vertex corner, Vertex p, Vertex q) {
    int dpq = g.dist(p, q);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (g.dist(p, x) + g.dist(x, q) == dpq && g.dist(corner, x) != k) return false;
    return true;
  };
  return check(t.v1, t.v2, t.v3) && check(t.v2, t.v1, t.v3) && check(t.v3, t.v1, t.v2);
}

BallHellyResult is_ball_helly(const Graph& g) {
  int n = g.vertex_count();
  int words = (n + 63) / 64;
  int diam = g.diameter();

  struct Ball {
    Vertex c;
    int r;
    Mask mask;
  };
  std::vector<Ball> balls;
  for (Vertex c = 0; c < n; ++c)
    for (int r = 0; r <= diam; ++r) {
      Mask m(words, 0);
      for (Vertex x = 0; x < n; ++x)
        if (g.dist(c, x) <= r) set_bit(m, x);
      balls.push_back({c, r, std::move(m)});
    }

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        Mask acc(words, ~std::uint64_t{0});
        bool any = false;
        for (const Ball& ball : balls) {
          int hits = get_bit(ball.mask, a) + get_bit(ball.mask, b) + get_bit(ball.mask, c);
          if (hits < 2) continue;
          any = true;
          for (int w = 0; w < words; ++w) acc[w] &= ball.mask[w];
        }
        if (!any) continue;
        bool empty = true;
        for (int w = 0; w < words && empty; ++w)
          if (w + 1 < words)
            empty = acc[w] == 0;
          else
            empty = (acc[w] & ((n & 63) ? ((std::uint64_t{1} << (n & 63)) - 1) : ~std::uint64_t{0})) == 0;
        if (empty) {
          BallHellyResult res;
          res.helly = false;
          res.triple = {a, b, c};
          for (const Ball& ball : balls) {
            int hits = get_bit(ball.mask, a) + get_bit(ball.mask, b) + get_bit(ball.mask, c);
            if (hits >= 2) res.family.emplace_back(ball.c, ball.r);
          }
          return res;
        }
      }
  return {};
}

}  // namespace loccert
