#include "ppsat/sat.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ppsat/errors.hpp"
#include "ppsat/planarity.hpp"

namespace ppsat {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Sat3: return "sat3";
    case Variant::Nae: return "nae";
    case Variant::OneInThree: return "1in3";
  }
  return "?";
}

void validate_instance(const SatInstance& inst) {
  if (inst.nvars <= 0) fail(ErrorKind::InvalidArgument, "instance has no variables");
  std::vector<char> used(inst.nvars, 0);
  for (size_t c = 0; c < inst.clauses.size(); c++) {
    const auto& cl = inst.clauses[c];
    if (cl.empty() || cl.size() > 3)
      fail(ErrorKind::InvalidArgument,
           "clause " + std::to_string(c + 1) + " has " + std::to_string(cl.size()) + " literals");
    std::set<int> vars;
    for (int lit : cl) {
      if (lit == 0 || std::abs(lit) > inst.nvars)
        fail(ErrorKind::InvalidArgument,
             "clause " + std::to_string(c + 1) + " has out-of-range literal " + std::to_string(lit));
      if (lit < 0 && inst.variant != Variant::Sat3)
        fail(ErrorKind::InvalidArgument, "negative literal in a positive " +
                                             std::string(variant_name(inst.variant)) + " instance");
      if (!vars.insert(std::abs(lit)).second)
        fail(ErrorKind::InvalidArgument, "clause " + std::to_string(c + 1) +
                                             " repeats variable " + std::to_string(std::abs(lit)));
      used[std::abs(lit) - 1] = 1;
    }
  }
  for (int v = 0; v < inst.nvars; v++)
    if (!used[v])
      fail(ErrorKind::InvalidArgument, "variable " + std::to_string(v + 1) + " appears in no clause");
}

std::vector<int> variable_frequencies(const SatInstance& inst) {
  std::vector<int> freq(inst.nvars, 0);
  for (const auto& cl : inst.clauses)
    for (int lit : cl) freq[std::abs(lit) - 1]++;
  return freq;
}

bool evaluate_clause(const std::vector<int>& clause, const Assignment& a, Variant variant) {
  int true_count = 0;
  for (int lit : clause) {
    bool val = a[std::abs(lit) - 1];
    if (lit < 0) val = !val;
    if (val) true_count++;
  }
  switch (variant) {
    case Variant::Sat3: return true_count >= 1;
    case Variant::Nae: return true_count >= 1 && true_count < (int)clause.size();
    case Variant::OneInThree: return true_count == 1;
  }
  return false;
}

bool evaluate(const SatInstance& inst, const Assignment& a) {
  if ((int)a.size() != inst.nvars)
    fail(ErrorKind::InvalidArgument, "assignment is not total");
  for (const auto& cl : inst.clauses)
    if (!evaluate_clause(cl, a, inst.variant)) return false;
  return true;
}

namespace {

// DFS over variables (highest index outermost, false branch first) visits
// assignments exactly in the order "variable 0 least significant, false
// before true". Pruning only ever skips subtrees with no satisfying leaf,
// so the first reported solution is order-minimal.
struct SolutionDfs {
  const SatInstance& inst;
  std::vector<std::vector<std::pair<int, bool>>> clauses_of;  // var -> (clause, negated)
  std::vector<int> unassigned;   // per clause
  std::vector<int> true_count;   // per clause (literal truth)
  Assignment values;
  long long nodes = 0;
  long long node_budget;

  SolutionDfs(const SatInstance& i, long long budget)
      : inst(i), clauses_of(i.nvars), values(i.nvars, 0), node_budget(budget) {
    for (int c = 0; c < inst.nclauses(); c++) {
      unassigned.push_back((int)inst.clauses[c].size());
      true_count.push_back(0);
      for (int lit : inst.clauses[c]) clauses_of[std::abs(lit) - 1].push_back({c, lit < 0});
    }
  }

  // returns false if some clause is already unsatisfiable
  bool assign(int var, bool value) {
    values[var] = value;
    bool ok = true;
    for (auto [c, neg] : clauses_of[var]) {
      unassigned[c]--;
      bool lit_true = neg ? !value : value;
      if (lit_true) true_count[c]++;
      ok = ok && clause_viable(c);
    }
    return ok;
  }

  void unassign(int var, bool value) {
    for (auto [c, neg] : clauses_of[var]) {
      unassigned[c]++;
      bool lit_true = neg ? !value : value;
      if (lit_true) true_count[c]--;
    }
  }

  bool clause_viable(int c) const {
    int size = (int)inst.clauses[c].size();
    int assigned_true = true_count[c];
    int open = unassigned[c];
    switch (inst.variant) {
      case Variant::Sat3:
        return assigned_true >= 1 || open >= 1;
      case Variant::Nae:
        if (open > 0) return true;
        return assigned_true >= 1 && assigned_true < size;
      case Variant::OneInThree:
        if (assigned_true > 1) return false;
        if (open == 0) return assigned_true == 1;
        return true;
    }
    return true;
  }

  // var counts down; leaves are full assignments
  bool run(int var, const std::function<bool(const Assignment&)>& cb) {
    if (++nodes > node_budget)
      fail(ErrorKind::TooLarge, "solution enumeration exceeded its node budget");
    if (var < 0) return cb(values);
    for (int value = 0; value < 2; value++) {
      if (assign(var, value != 0)) {
        if (!run(var - 1, cb)) {
          unassign(var, value != 0);
          return false;
        }
      }
      unassign(var, value != 0);
    }
    return true;
  }
};

}  // namespace

std::optional<Assignment> brute_force(const SatInstance& inst) {
  validate_instance(inst);
  if (inst.nvars > 30)
    fail(ErrorKind::TooLarge,
         "brute_force is guarded at 30 variables, instance has " + std::to_string(inst.nvars));
  std::optional<Assignment> witness;
  SolutionDfs dfs(inst, (1LL << 62));
  dfs.run(inst.nvars - 1, [&](const Assignment& a) {
    witness = a;
    return false;  // stop at the first (order-minimal) solution
  });
  return witness;
}

void enumerate_solutions(const SatInstance& inst, const std::function<bool(const Assignment&)>& cb,
                         long long node_budget) {
  validate_instance(inst);
  SolutionDfs dfs(inst, node_budget);
  dfs.run(inst.nvars - 1, cb);
}

SatGraph build_sat_graph(const SatInstance& inst, const std::vector<std::vector<int>>* rotation,
                         std::optional<int> outer) {
  validate_instance(inst);
  Graph g(inst.nvars + inst.nclauses());
  for (int c = 0; c < inst.nclauses(); c++)
    for (int lit : inst.clauses[c]) g.add_edge(inst.nvars + c, std::abs(lit) - 1);
  SatGraph sg;
  sg.inst = inst;
  if (rotation) {
    sg.emb = embedding_from_rotation(g, *rotation, outer);
  } else {
    if (!is_planar(g)) fail(ErrorKind::NonPlanar, "the SAT graph is not planar");
    sg.emb = compute_embedding(g);
  }
  return sg;
}

bool is_quadrangulated(const SatGraph& sg) {
  FaceSet faces = trace_faces(sg.emb);
  for (const auto& w : faces.walks)
    if (w.size() != 4) return false;
  return true;
}

}  // namespace ppsat
