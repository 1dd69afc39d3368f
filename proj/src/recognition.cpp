#include "loccert/recognition.hpp"

#include <algorithm>

namespace loccert {

int ClassProtocol::radius() const {
  int r = base_rules.radius();
  for (const auto& p : predicates) r = std::max(r, predicate_radius(p));
  return r;
}

std::optional<ClassProtocol> protocol_for(ClassId c) {
  using P = PredicateId;
  auto base = [](const char* name) { return *ruleset_from_name(name); };
  auto weakly_modular = [&](std::vector<StructuralPredicate> extra) {
    ClassProtocol p{ClassId::WeaklyModular, base("A_M_dist"),
                    {{P::LTC}, {P::LQC}}};
    for (auto& x : extra) p.predicates.push_back(x);
    return p;
  };
  switch (c) {
    case ClassId::Chordal:
      return ClassProtocol{c, base("A_B_dist"), {{P::NoWheel, 4}}};
    case ClassId::Bridged:
      return ClassProtocol{c, base("A_B_dist"), {{P::NoW4W5}}};
    case ClassId::WeaklyBridged:
      return ClassProtocol{c, base("A_B_dist"),
                           {{P::NoInducedC4}, {P::ExtendedW5Apex}}};
    case ClassId::Helly:
      return ClassProtocol{c, base("A_H_dist"), {{P::CliqueHellyLocal}}};
    case ClassId::WeaklyModular:
      return weakly_modular({});
    case ClassId::Modular: {
      auto p = weakly_modular({{P::TriangleFree}});
      p.cls = c;
      return p;
    }
    case ClassId::Median: {
      auto p = weakly_modular({{P::TriangleFree}, {P::NoK23}});
      p.cls = c;
      return p;
    }
    case ClassId::PseudoModular: {
      auto p = weakly_modular({{P::NoSize2MetricTriangleLocal}});
      p.cls = c;
      return p;
    }
    case ClassId::SweaklyModular: {
      auto p = weakly_modular({{P::NoK4Minus}, {P::NoK33Minus}});
      p.cls = c;
      return p;
    }
    case ClassId::DualPolar: {
      auto p = weakly_modular({{P::NoK4Minus}, {P::NoK33Minus}, {P::Thick}});
      p.cls = c;
      return p;
    }
    case ClassId::Bucolic: {
      auto p = weakly_modular({{P::NoK23}, {P::NoW4Minus}, {P::NoSingleWheel, 4}});
      p.cls = c;
      return p;
    }
    case ClassId::CageAmalgamation: {
      auto p = weakly_modular(
          {{P::NoK23}, {P::NoW4Minus}, {P::NoSingleWheel, 4}, {P::NoWheel, 4}});
      p.cls = c;
      return p;
    }
    case ClassId::MatroidBasis:
      return ClassProtocol{c, base("A_M_dist"), {{P::LPC}, {P::IC3}, {P::BLC}}};
    case ClassId::EvenDeltaMatroidBasis:
      return ClassProtocol{c, base("A_M_dist"), {{P::LPC}, {P::IC4}, {P::LC}}};
    case ClassId::Meshed:
      return std::nullopt;  // conjectured not locally recognizable
  }
  return std::nullopt;
}

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::Accepted: return "accepted";
    case Decision::Rejected: return "rejected";
    case Decision::Undecided: return "undecided";
  }
  return "?";
}

RecognitionOutcome recognize(const Graph& g, ClassId c,
                             const RecognizeOptions& opts) {
  auto proto = protocol_for(c);
  if (!proto) throw std::invalid_argument("no recognition protocol for class " +
                                          class_name(c));
  RecognitionOutcome out;
  out.cls = c;
  out.radius = proto->radius();
  out.certificate = distance_labeling(g, opts.root);

  bool undecided = false;
  int view_radius = out.radius + opts.extra_radius;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    LabeledView view = extract_view(g, out.certificate, v, view_radius, opts.seed);
    for (RuleId rule : proto->base_rules.rules)
      if (!eval_rule(rule, view)) out.witnesses.push_back({v, rule_name(rule)});
    for (const auto& p : proto->predicates) {
      PredicateResult r = eval_predicate(p, view, opts.neighborhood_cap);
      if (r == PredicateResult::Fail) out.witnesses.push_back({v, p.name()});
      if (r == PredicateResult::Undecided) undecided = true;
    }
  }
  if (!out.witnesses.empty())
    out.decision = Decision::Rejected;
  else if (undecided)
    out.decision = Decision::Undecided;
  return out;
}

std::optional<std::vector<int>> soundness_search(const Graph& g, ClassId c,
                                                 int max_label,
                                                 std::uint64_t seed,
                                                 std::uint64_t node_budget) {
  auto proto = protocol_for(c);
  if (!proto) throw std::invalid_argument("no recognition protocol for class " +
                                          class_name(c));
  // the predicates ignore labels: evaluate them once on unlabeled views
  std::vector<int> zeros(g.vertex_count(), 0);
  int r = proto->radius();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    LabeledView view = extract_view(g, zeros, v, r, seed);
    for (const auto& p : proto->predicates)
      if (eval_predicate(p, view) == PredicateResult::Fail) return std::nullopt;
  }
  auto accepted = enumerate_accepted_labelings(g, proto->base_rules, seed,
                                               node_budget, max_label);
  if (accepted.empty()) return std::nullopt;
  return accepted.front();
}

}  // namespace loccert
