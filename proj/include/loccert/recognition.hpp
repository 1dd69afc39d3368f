#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loccert/classes.hpp"
#include "loccert/predicates.hpp"
#include "loccert/verifier.hpp"

namespace loccert {

// Distance-rule verifier plus label-independent structural predicates; one
// preset per recognizable class.
struct ClassProtocol {
  ClassId cls;
  RuleSet base_rules;
  std::vector<StructuralPredicate> predicates;
  int radius() const;
};

std::optional<ClassProtocol> protocol_for(ClassId c);

enum class Decision { Accepted, Rejected, Undecided };
std::string decision_name(Decision d);

struct RecognitionWitness {
  Vertex vertex;
  std::string what;  // rule or predicate name that failed
};

struct RecognitionOutcome {
  ClassId cls;
  Decision decision = Decision::Accepted;
  int radius = 0;
  std::vector<int> certificate;  // the distance labeling used
  std::vector<RecognitionWitness> witnesses;
};

struct RecognizeOptions {
  Vertex root = 0;
  std::uint64_t seed = 0;
  int neighborhood_cap = 10;  // LC/BLC guard; beyond it the outcome may be
                              // Undecided
  int extra_radius = 0;       // evaluate on views of radius + extra_radius
};

// Runs the protocol on the canonical certificate d(root, .): base rules and
// every predicate at every vertex; accepts iff everything passes. Undecided
// only when a guarded predicate could not be evaluated and nothing failed.
RecognitionOutcome recognize(const Graph& g, ClassId c,
                             const RecognizeOptions& opts = {});

// Exhaustive search for a labeling the protocol would accept (the structural
// predicates are label-independent, so they are checked once up front).
// Returns an accepted labeling if any exists.
std::optional<std::vector<int>> soundness_search(
    const Graph& g, ClassId c, int max_label, std::uint64_t seed = 0,
    std::uint64_t node_budget = 200'000'000);

}  // namespace loccert
