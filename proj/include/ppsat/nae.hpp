#pragma once

#include <array>
#include <set>
#include <unordered_map>
#include <vector>

#include "ppsat/cycles.hpp"
#include "ppsat/embedding.hpp"
#include "ppsat/sat.hpp"

namespace ppsat {

enum class EdgeOrigin { QuadEdge, Spoke, DummyCycle };

/// The cubic graph obtained from an embedded SAT graph by adding one edge per
/// quadrangular face, saturating the longer faces with dummy cycles, and
/// deleting the variable vertices. Vertices 0..m-1 are the clause vertices,
/// the rest are dummies.
struct SaturatedClauseGraph {
  Embedding emb;
  FaceSet faces;
  int num_clauses = 0;
  std::unordered_map<uint64_t, EdgeOrigin> origin;  // edge_key -> origin
  std::vector<int> variable_face;                   // original variable -> face of C_s

  bool is_dummy(int v) const { return v >= num_clauses; }
};

struct SaturationResult {
  std::vector<int> dummies;
  std::vector<std::pair<int, int>> spokes;       // (dummy, clause)
  std::vector<std::pair<int, int>> cycle_edges;  // dummy cycle
};

/// The saturation operation on one face: a cycle of p/2 dummy vertices is
/// placed inside the face walk (length p > 4, clause/other vertices strictly
/// alternating) with a spoke to each clause corner. `clause_parity` gives the
/// walk positions (0 or 1 mod 2) holding the clause vertices. The embedding
/// grows by the dummy vertices; planarity is preserved.
SaturationResult saturate_face(Embedding& e, const std::vector<int>& walk, int clause_parity);

/// Builds C_s from a planar 3-connected SAT graph with degree-3 clause
/// vertices, tracking per-edge origins and the face of C_s that ends up
/// holding each deleted variable.
SaturatedClauseGraph build_saturated_clause_graph(const SatGraph& sg);

/// A perfect matching of the (cubic, bridgeless) saturated clause graph.
/// Backed by a general maximum-cardinality matching; NoPerfectMatching is a
/// falsification signal on valid inputs.
std::vector<std::pair<int, int>> perfect_matching(const SaturatedClauseGraph& csg);

struct NaeSolution {
  Assignment assignment;
  SaturatedClauseGraph csg;
  std::vector<std::pair<int, int>> matching;
  CycleCollection cycles;
  GenealogicalTree tree;
  // per clause: variables of the clause strictly inside / outside the cycle
  // through the clause vertex (always 2/1 or 1/2)
  std::vector<std::array<int, 2>> clause_split;
};

struct NaeOptions {
  const std::vector<std::vector<int>>* rotation = nullptr;
  std::optional<int> outer_face;
  bool compute_splits = true;
};

/// Theorem-1 pipeline: always returns a verified NAE-satisfying assignment
/// for a positive planar 3-connected NAE instance with all clauses of size 3.
NaeSolution solve_nae(const SatInstance& inst, const NaeOptions& opts = {});

/// Re-derives the assignment for a different choice of root region (outer
/// face); used by the outer-face-independence checks.
Assignment assignment_for_root(const NaeSolution& sol, int root_region);

}  // namespace ppsat
