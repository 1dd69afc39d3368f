#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loccert/graph.hpp"
#include "loccert/metric.hpp"

namespace loccert {

enum class ClassId {
  Meshed,
  WeaklyModular,
  Modular,
  Median,
  PseudoModular,
  Helly,
  Bridged,
  WeaklyBridged,
  Chordal,
  SweaklyModular,
  DualPolar,
  Bucolic,
  CageAmalgamation,
  MatroidBasis,
  EvenDeltaMatroidBasis,
};

inline constexpr ClassId kAllClasses[] = {
    ClassId::Meshed,        ClassId::WeaklyModular, ClassId::Modular,
    ClassId::Median,        ClassId::PseudoModular, ClassId::Helly,
    ClassId::Bridged,       ClassId::WeaklyBridged, ClassId::Chordal,
    ClassId::SweaklyModular, ClassId::DualPolar,    ClassId::Bucolic,
    ClassId::CageAmalgamation, ClassId::MatroidBasis,
    ClassId::EvenDeltaMatroidBasis,
};

std::string class_name(ClassId c);
std::optional<ClassId> class_from_name(const std::string& name);

// Containment pairs (sub, super) of the class hierarchy; every tested graph
// in `sub` must also be in `super`.
const std::vector<std::pair<ClassId, ClassId>>& class_containments();

struct OracleOptions {
  // Cap on |N(v)| for the line-graph root reconstruction (LC/BLC).
  int neighborhood_cap = 10;
  // Largest n for the direct isometric-cycle test; beyond it the bridged
  // oracle falls back to the weakly-modular + no-C4/C5 characterization.
  int isometric_cycle_cap = 12;
};

struct ClassResult {
  bool member = true;
  std::string witness;  // human-readable reason when member is false
};

// Definitional membership oracle for the class.
ClassResult is_class(const Graph& g, ClassId c, const OracleOptions& opts = {});

struct BasisConditions {
  bool pc = true;
  bool lpc = true;
  bool ic3 = true;
  bool ic4 = true;
  std::optional<bool> lc;   // nullopt = undecided (cap exceeded)
  std::optional<bool> blc;  // nullopt = undecided (cap exceeded)
  bool thick = true;
};

BasisConditions basis_graph_conditions(const Graph& g, const OracleOptions& opts = {});

// Induced squares as cyclic quadruples (u, v, w, x): u~v~w~x~u, u!~w, v!~x.
std::vector<std::array<Vertex, 4>> induced_squares(const Graph& g);

// Whether h is the line graph of some simple graph; with bipartite_root the
// root graph is additionally required to be bipartite. Decided by searching
// for a Krausz partition (edge partition into cliques, every vertex in at
// most two cliques, no two vertices sharing the same clique pair).
bool is_line_graph(const SmallGraph& h, bool bipartite_root);

// Perfect elimination ordering if one exists (greedy simplicial removal).
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

// Isometric cycle of length > 3, if any (brute force; throws GuardExceeded
// beyond the cap).
std::optional<std::vector<Vertex>> find_long_isometric_cycle(const Graph& g, int cap);

}  // namespace loccert
