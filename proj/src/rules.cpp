#include "loccert/rules.hpp"

#include <algorithm>

namespace loccert {

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::DG0: return "DG0";
    case RuleId::DG: return "DG";
    case RuleId::DM: return "DM";
    case RuleId::DTC: return "DTC";
    case RuleId::DB: return "DB";
    case RuleId::DH: return "DH";
    case RuleId::MG: return "MG";
    case RuleId::MGT: return "MGT";
    case RuleId::MGS: return "MGS";
    case RuleId::MM: return "MM";
    case RuleId::MTC: return "MTC";
    case RuleId::MB: return "MB";
    case RuleId::MH: return "MH";
  }
  return "?";
}

int rule_radius(RuleId r) {
  switch (r) {
    case RuleId::DM:
    case RuleId::MGS:
    case RuleId::MM:
      return 2;
    default:
      return 1;
  }
}

int RuleSet::radius() const {
  int r = 1;
  for (RuleId x : rules) r = std::max(r, rule_radius(x));
  return r;
}

namespace {

bool rule_dg0(const LabeledView& v) {
  int dc = v.labels[0];
  if (dc < 0) return false;
  if (dc != 0) return true;
  for (Vertex u : v.subgraph.neighbors(0))
    if (v.labels[u] != 1) return false;
  return true;
}

bool rule_dg(const LabeledView& v) {
  int dc = v.labels[0];
  if (dc <= 0) return true;
  bool down = false;
  for (Vertex u : v.subgraph.neighbors(0)) {
    if (v.labels[u] == dc - 1) down = true;
    if (v.labels[u] < dc - 1 || v.labels[u] > dc + 1) return false;
  }
  return down;
}

bool rule_dm(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int dc = v.labels[0];
  const auto& nb = h.neighbors(0);
  for (Vertex u : nb)
    for (Vertex up : nb) {
      if (u == up || h.adjacent(u, up)) continue;
      int du = v.labels[u], dup = v.labels[up];
      bool tri = du == dc && du == dup + 1;
      bool sq = du == dup && du == dc - 1;
      if (!tri && !sq) continue;
      bool ok = false;
      for (Vertex x : h.neighbors(u))
        if (h.adjacent(x, up) && v.labels[x] <= dup) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool rule_dtc(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int dc = v.labels[0];
  for (Vertex u : h.neighbors(0)) {
    if (v.labels[u] != dc) continue;
    bool ok = false;
    for (Vertex x : h.neighbors(0))
      if (h.adjacent(x, u) && v.labels[x] == dc - 1) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool rule_db(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int dc = v.labels[0];
  const auto& nb = h.neighbors(0);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (v.labels[nb[i]] == dc - 1 && v.labels[nb[j]] == dc - 1 &&
          !h.adjacent(nb[i], nb[j]))
        return false;
  return true;
}

bool rule_dh(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int dc = v.labels[0];
  if (dc <= 0) return true;
  for (Vertex x : h.neighbors(0)) {
    if (v.labels[x] != dc - 1) continue;
    bool dominates = true;
    for (Vertex u : h.neighbors(0))
      if (v.labels[u] <= dc && u != x && !h.adjacent(u, x)) {
        dominates = false;
        break;
      }
    if (dominates) return true;
  }
  return false;
}

bool rule_mg(const LabeledView& v) {
  int lc = v.labels[0];
  if (lc < 0 || lc > 2) return false;
  bool all_one = lc == 0;
  for (Vertex u : v.subgraph.neighbors(0)) {
    if (v.labels[u] == mod3_prec(lc)) return true;
    if (v.labels[u] != 1) all_one = false;
  }
  return all_one;
}

bool rule_mgt(const LabeledView& v) {
  const Graph& h = v.subgraph;
  const auto& nb = h.neighbors(0);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (!h.adjacent(nb[i], nb[j])) continue;
      int a = v.labels[0], b = v.labels[nb[i]], c = v.labels[nb[j]];
      if (a != b && b != c && a != c) return false;
    }
  return true;
}

bool rule_mgs(const LabeledView& v) {
  const Graph& h = v.subgraph;
  const auto& nb = h.neighbors(0);
  // induced squares through the center: 0 ~ u ~ w ~ x ~ 0, 0 !~ w, u !~ x
  for (Vertex u : nb)
    for (Vertex x : nb) {
      if (u >= x || h.adjacent(u, x)) continue;
      for (Vertex w : h.neighbors(u)) {
        if (w == 0 || h.adjacent(w, 0) || !h.adjacent(w, x)) continue;
        int lc = v.labels[0], lu = v.labels[u], lw = v.labels[w], lx = v.labels[x];
        bool has[3] = {false, false, false};
        for (int l : {lc, lu, lw, lx})
          if (0 <= l && l <= 2) has[l] = true;
        if (!(has[0] && has[1] && has[2])) continue;
        // the equal-labeled pair must be an opposite pair of the square
        if (lc == lu || lu == lw || lw == lx || lx == lc) return false;
      }
    }
  return true;
}

bool rule_mm(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int lc = v.labels[0];
  const auto& nb = h.neighbors(0);
  for (Vertex u : nb)
    for (Vertex up : nb) {
      if (u == up || h.adjacent(u, up)) continue;
      int lu = v.labels[u], lup = v.labels[up];
      bool tri = lu == lc && lu == mod3_next(lup);
      bool sq = lu == lup && lu == mod3_prec(lc);
      if (!tri && !sq) continue;
      bool ok = false;
      for (Vertex x : h.neighbors(u))
        if (h.adjacent(x, up) &&
            (v.labels[x] == lup || v.labels[x] == mod3_prec(lup))) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool rule_mtc(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int lc = v.labels[0];
  for (Vertex u : h.neighbors(0)) {
    if (v.labels[u] != lc) continue;
    bool ok = false;
    for (Vertex x : h.neighbors(0))
      if (h.adjacent(x, u) && v.labels[x] == mod3_prec(lc)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool rule_mb(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int lc = v.labels[0];
  const auto& nb = h.neighbors(0);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (v.labels[nb[i]] == mod3_prec(lc) && v.labels[nb[j]] == mod3_prec(lc) &&
          !h.adjacent(nb[i], nb[j]))
        return false;
  return true;
}

bool rule_mh(const LabeledView& v) {
  const Graph& h = v.subgraph;
  int lc = v.labels[0];
  bool any_prec = false;
  for (Vertex y : h.neighbors(0))
    if (v.labels[y] == mod3_prec(lc)) any_prec = true;
  if (!any_prec) return true;
  for (Vertex x : h.neighbors(0)) {
    if (v.labels[x] != mod3_prec(lc)) continue;
    bool dominates = true;
    for (Vertex u : h.neighbors(0)) {
      int lu = v.labels[u];
      if ((lu == lc || lu == mod3_prec(lc)) && u != x && !h.adjacent(u, x)) {
        dominates = false;
        break;
      }
    }
    if (dominates) return true;
  }
  return false;
}

}  // namespace

bool eval_rule(RuleId r, const LabeledView& view) {
  switch (r) {
    case RuleId::DG0: return rule_dg0(view);
    case RuleId::DG: return rule_dg(view);
    case RuleId::DM: return rule_dm(view);
    case RuleId::DTC: return rule_dtc(view);
    case RuleId::DB: return rule_db(view);
    case RuleId::DH: return rule_dh(view);
    case RuleId::MG: return rule_mg(view);
    case RuleId::MGT: return rule_mgt(view);
    case RuleId::MGS: return rule_mgs(view);
    case RuleId::MM: return rule_mm(view);
    case RuleId::MTC: return rule_mtc(view);
    case RuleId::MB: return rule_mb(view);
    case RuleId::MH: return rule_mh(view);
  }
  return false;
}

const std::vector<RuleSet>& all_rulesets() {
  using R = RuleId;
  static const std::vector<RuleSet> sets = {
      {"A_M_dist", LabelMode::Distance, {R::DG0, R::DG, R::DTC, R::DM}},
      {"A_B_dist", LabelMode::Distance, {R::DG0, R::DG, R::DTC, R::DB}},
      {"A_H_dist", LabelMode::Distance, {R::DG0, R::DG, R::DTC, R::DH}},
      {"MESHED_dist", LabelMode::Distance, {R::DG0, R::DG, R::DM}},
      {"BRIDGED_dist", LabelMode::Distance, {R::DG0, R::DG, R::DTC, R::DB}},
      {"HELLY_dist", LabelMode::Distance, {R::DG0, R::DG, R::DH}},
      {"MESHED_mod3", LabelMode::Mod3, {R::MG, R::MGT, R::MGS, R::MM}},
      {"BRIDGED_mod3", LabelMode::Mod3, {R::MG, R::MGT, R::MTC, R::MB}},
      {"HELLY_mod3", LabelMode::Mod3, {R::MG, R::MGT, R::MH}},
  };
  return sets;
}

std::optional<RuleSet> ruleset_from_name(const std::string& name) {
  for (const RuleSet& s : all_rulesets())
    if (s.name == name) return s;
  return std::nullopt;
}

}  // namespace loccert
