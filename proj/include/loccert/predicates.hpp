#pragma once

#include <string>
#include <vector>

#include "loccert/view.hpp"

namespace loccert {

// Label-independent structural predicates evaluated on an r-ball view.
// All of them read only the view's subgraph and center distances, never the
// certificate labels.
enum class PredicateId {
  NoWheel,        // no induced Wk, k >= param, hubbed at the center (r=1)
  NoSingleWheel,  // no induced W_param hubbed at the center (r=1)
  NoW4W5,         // no induced W4 or W5 hubbed at the center (r=1)
  NoInducedC4,    // no induced C4 through the center (r=2)
  ExtendedW5Apex, // every induced W5^ hubbed at the center has an apex (r=2)
  CliqueHellyLocal,  // triangles through the center: T* has a universal vertex (r=2)
  LTC,            // local triangle condition anchored at the center (r=2)
  LQC,            // local quadrangle condition anchored at the center (r=3)
  TriangleFree,   // no edge inside N(center) (r=1)
  NoK23,          // no induced K2,3 through the center (r=2)
  NoK4Minus,      // no induced K4- through the center (r=2)
  NoK33Minus,     // no induced K3,3- through the center (r=2)
  NoW4Minus,      // no induced W4- through the center (r=2)
  Thick,          // center has two non-adjacent common neighbors with every
                  // vertex at distance 2 (r=2)
  NoSize2MetricTriangleLocal,  // no size-2 metric triangle cornered at the
                               // center, intervals inside the view (r=3)
  LPC,            // positioning condition for squares inside B3(center) (r=3)
  IC3,            // interval condition, 3-octahedron, anchored (r=2)
  IC4,            // interval condition, 4-octahedron, anchored (r=2)
  LC,             // N(center) is a line graph (r=1, guarded)
  BLC,            // N(center) is a line graph of a bipartite graph (r=1, guarded)
};

struct StructuralPredicate {
  PredicateId id;
  int param = 0;  // k for NoWheel / NoSingleWheel

  std::string name() const;
};

int predicate_radius(const StructuralPredicate& p);

enum class PredicateResult { Pass, Fail, Undecided };

// Exact evaluation on the view; the view radius must be at least the
// predicate's stated radius (larger views give identical verdicts). LC/BLC
// return Undecided when the center degree exceeds neighborhood_cap.
PredicateResult eval_predicate(const StructuralPredicate& p,
                               const LabeledView& view,
                               int neighborhood_cap = 10);

}  // namespace loccert
