#pragma once

#include <optional>
#include <vector>

#include "ppsat/graph.hpp"
#include "ppsat/sat.hpp"

namespace ppsat {

/// Spanning subgraph of maximum degree 2 covering every vertex.
struct TwoMatching {
  std::vector<std::pair<int, int>> edges;
};

/// Throws LiftViolation when the edge set is not a spanning 2-matching of g.
void validate_two_matching(const Graph& g, const TwoMatching& tm);

struct ReductionResult {
  SatInstance instance;                        // NAE, positive
  std::vector<std::pair<int, int>> var_edge;   // variable v <-> edge of g
};

/// Subdivision reduction: one clause per vertex of the connected planar
/// cubic graph, one variable per edge.
ReductionResult reduce_2matching_to_nae(const Graph& g);

/// Edges whose variables are true; asserts the spanning and degree-2
/// conditions (LiftViolation).
TwoMatching lift_nae_to_2matching(const Graph& g, const ReductionResult& red, const Assignment& a);

/// Assignment setting exactly the variables of the 2-matching's edges;
/// asserts that it satisfies the reduced NAE instance.
Assignment lift_2matching_to_nae(const Graph& g, const ReductionResult& red, const TwoMatching& tm);

/// First spanning 2-matching in deterministic edge-subset order (edge 0
/// least significant, absent before present); nullopt if none. Guarded at
/// 24 edges (TooLarge).
std::optional<TwoMatching> brute_force_2matching(const Graph& g);

}  // namespace ppsat
