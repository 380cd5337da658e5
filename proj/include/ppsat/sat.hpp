#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ppsat/embedding.hpp"
#include "ppsat/graph.hpp"

namespace ppsat {

enum class Variant { Sat3, Nae, OneInThree };

const char* variant_name(Variant v);

/// Positive 3-SAT instance (clauses of 1..3 distinct variables). Literals are
/// DIMACS-style: +(v+1) / -(v+1); negative literals exist only for the Sat3
/// variant consumed by the hardness construction.
struct SatInstance {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;
  Variant variant = Variant::Nae;

  int nclauses() const { return (int)clauses.size(); }
};

using Assignment = std::vector<uint8_t>;

/// Structural invariants: literal ranges, distinct variables per clause,
/// clause sizes 1..3, positivity for NAE / 1-in-3, every variable used.
void validate_instance(const SatInstance& inst);

std::vector<int> variable_frequencies(const SatInstance& inst);

bool evaluate_clause(const std::vector<int>& clause, const Assignment& a, Variant variant);
bool evaluate(const SatInstance& inst, const Assignment& a);

/// First satisfying assignment in the order "variable 0 least significant,
/// false before true"; nullopt if unsatisfiable. Guarded at 30 variables
/// (TooLarge).
std::optional<Assignment> brute_force(const SatInstance& inst);

/// Pruned exhaustive enumeration in the same order, without the variable
/// guard; stops early when the callback returns false or the node budget is
/// exhausted (TooLarge in that case). Used by the gadget certificates, whose
/// heavily constrained fragments prune well beyond 30 variables.
void enumerate_solutions(const SatInstance& inst, const std::function<bool(const Assignment&)>& cb,
                         long long node_budget = 200'000'000);

/// SAT graph: variables are vertices 0..n-1, clauses n..n+m-1.
struct SatGraph {
  SatInstance inst;
  Embedding emb;

  int nvars() const { return inst.nvars; }
  int nclauses() const { return inst.nclauses(); }
  int clause_vertex(int c) const { return inst.nvars + c; }
};

/// Incidence graph plus planar embedding (NonPlanar if none). A rotation
/// system supplied with the instance is validated and used when present.
SatGraph build_sat_graph(const SatInstance& inst,
                         const std::vector<std::vector<int>>* rotation = nullptr,
                         std::optional<int> outer = std::nullopt);

bool is_quadrangulated(const SatGraph& sg);

}  // namespace ppsat
