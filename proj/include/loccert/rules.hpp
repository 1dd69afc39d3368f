#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loccert/view.hpp"

namespace loccert {

// Local predicates evaluated on the labeled r-ball of one vertex.
// D-rules read nonnegative distance labels, M-rules labels in {0,1,2}.
enum class RuleId { DG0, DG, DM, DTC, DB, DH, MG, MGT, MGS, MM, MTC, MB, MH };

std::string rule_name(RuleId r);
int rule_radius(RuleId r);

// True iff the rule accepts at the view's center. Rules only read the view's
// subgraph, labels, and center-distance data.
bool eval_rule(RuleId r, const LabeledView& view);

enum class LabelMode { Distance, Mod3 };

struct RuleSet {
  std::string name;
  LabelMode mode = LabelMode::Distance;
  std::vector<RuleId> rules;
  int radius() const;
};

// Presets: A_M_dist, A_B_dist, A_H_dist, MESHED_dist, BRIDGED_dist,
// HELLY_dist, MESHED_mod3, BRIDGED_mod3, HELLY_mod3.
std::optional<RuleSet> ruleset_from_name(const std::string& name);
const std::vector<RuleSet>& all_rulesets();

inline int mod3_prec(int k) { return (k + 2) % 3; }
inline int mod3_next(int k) { return (k + 1) % 3; }

}  // namespace loccert
