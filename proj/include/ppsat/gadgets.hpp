#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppsat/sat.hpp"

namespace ppsat {

/// A k-ring: a positive planar 1-in-3 fragment of 6k clauses and 3k outer
/// variables whose satisfying assignments restrict to the three rotations of
/// T,F,F,... on the outer cycle. Built from k groups of 6 clauses; group j
/// carries outer variables o_{3j},o_{3j+1},o_{3j+2} and inner rail variables
/// n_{3j},n_{3j+1},n_{3j+2} with clauses
///   A_t = {o_t, o_{t+1}, n_t}   and   C_t = {n_t, n_{t+1}, o_{t+1}}.
struct Ring {
  int k = 0;
  SatInstance fragment;
  std::vector<int> outer;  // the 3k outer variables, cyclic order (0-based ids)
  std::vector<int> inner;  // the 3k rail variables
};

Ring build_ring(int k);  // KTooSmall for k < 3

struct OuterRingSpec {
  int cap_start = 0;   // first of six consecutive belt positions it covers
  bool modified = false;  // same-residue attachments (all-false belt allowed)
};

/// A variable gadget: q belt blocks (3 clauses each) around an inner ring,
/// plus outer rings capping six-position belt arcs. Belt truth values are
/// forced to strict alternation, or to all-false when every outer ring is
/// modified or absent. Slot positions are belt vertices left at degree 2
/// for external clause edges.
struct VariableGadget {
  int q = 0;
  SatInstance fragment;
  std::vector<int> belt;        // 2q belt variables in cyclic order
  std::vector<int> block_vars;  // q block variables m_i
  std::vector<int> slots;       // belt positions (indices into belt) left at degree 2
  std::vector<Ring> outer_rings;
  Ring inner_ring;
};

VariableGadget build_variable_gadget(int q, const std::vector<OuterRingSpec>& rings,
                                     const std::vector<int>& slot_positions = {});

/// Clause gadget over three signed literals: three 1-in-3 clauses
///   c1 = (~l1, p, r), c2 = (l2, p, q), c3 = (~l3, s, q)
/// over four fresh variables; jointly satisfiable iff l1 | l2 | l3.
struct ClauseGadget {
  std::array<std::vector<int>, 3> clauses;  // signed literal triples
  int p, q, r, s;                           // 0-based fresh variable ids
};

ClauseGadget build_clause_gadget(std::array<int, 3> lits, int fresh_base);

struct GadgetProvenance {
  // original variable -> belt variables (cyclic), slot belt vars per incidence
  std::map<int, std::vector<int>> variable_belt;
  std::map<int, std::vector<int>> variable_slots;
  // original clause -> the three gadget clause indices and the p,q,r,s vars
  std::map<int, std::array<int, 3>> clause_clauses;
  std::map<int, std::array<int, 4>> clause_fresh;  // p,q,r,s
};

struct GadgetInstance {
  SatInstance instance;  // positive planar 3-connected 1-in-3, degree <= 4
  GadgetProvenance provenance;
  std::string stage = "G''";
};

/// The full hardness construction: planar 3-connected 3-SAT with variables in
/// at most 4 clauses (negations allowed) to an equisatisfiable positive
/// planar 3-connected 1-in-3 instance with variable degree at most 4.
GadgetInstance transform(const SatInstance& inst3sat,
                         const std::vector<std::vector<int>>* rotation = nullptr);

/// Reads the original assignment back off a satisfying assignment of the
/// transformed instance (belt phase of each variable gadget).
Assignment extract_original_assignment(const GadgetInstance& gi, const SatInstance& original,
                                       const Assignment& transformed);

}  // namespace ppsat
