#include "ppsat/reduction.hpp"

#include <algorithm>

#include "ppsat/errors.hpp"
#include "ppsat/planarity.hpp"

namespace ppsat {

void validate_two_matching(const Graph& g, const TwoMatching& tm) {
  std::vector<int> deg(g.n, 0);
  std::set<uint64_t> edge_set;
  for (const auto& [u, v] : g.edges) edge_set.insert(edge_key(u, v));
  std::set<uint64_t> used;
  for (const auto& [u, v] : tm.edges) {
    if (!edge_set.count(edge_key(u, v)))
      fail(ErrorKind::LiftViolation,
           "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
    if (!used.insert(edge_key(u, v)).second)
      fail(ErrorKind::LiftViolation, "edge repeated in the 2-matching");
    deg[u]++;
    deg[v]++;
  }
  for (int v = 0; v < g.n; v++) {
    if (deg[v] == 0)
      fail(ErrorKind::LiftViolation, "vertex " + std::to_string(v) + " is uncovered");
    if (deg[v] > 2)
      fail(ErrorKind::LiftViolation,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
  }
}

ReductionResult reduce_2matching_to_nae(const Graph& g) {
  validate_graph(g);
  if (!is_connected(g)) fail(ErrorKind::NotConnected, "input graph is not connected");
  auto deg = degrees(g);
  for (int v = 0; v < g.n; v++)
    if (deg[v] != 3)
      fail(ErrorKind::NotCubic,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
  if (!is_planar(g)) fail(ErrorKind::NonPlanar, "input graph is not planar");

  ReductionResult res;
  res.instance.variant = Variant::Nae;
  res.instance.nvars = g.edge_count();
  res.var_edge = g.edges;
  std::vector<std::vector<int>> clause_of(g.n);
  for (int e = 0; e < g.edge_count(); e++) {
    auto [u, v] = g.edges[e];
    clause_of[u].push_back(e + 1);
    clause_of[v].push_back(e + 1);
  }
  for (int v = 0; v < g.n; v++) res.instance.clauses.push_back(clause_of[v]);
  validate_instance(res.instance);
  return res;
}

TwoMatching lift_nae_to_2matching(const Graph& g, const ReductionResult& red, const Assignment& a) {
  if ((int)a.size() != red.instance.nvars)
    fail(ErrorKind::InvalidArgument, "assignment size mismatch");
  if (!evaluate(red.instance, a))
    fail(ErrorKind::InvalidArgument, "assignment does not satisfy the reduced NAE instance");
  TwoMatching tm;
  for (int v = 0; v < red.instance.nvars; v++)
    if (a[v]) tm.edges.push_back(red.var_edge[v]);
  validate_two_matching(g, tm);
  return tm;
}

Assignment lift_2matching_to_nae(const Graph& g, const ReductionResult& red, const TwoMatching& tm) {
  validate_two_matching(g, tm);
  std::set<uint64_t> chosen;
  for (const auto& [u, v] : tm.edges) chosen.insert(edge_key(u, v));
  Assignment a(red.instance.nvars, 0);
  for (int v = 0; v < red.instance.nvars; v++)
    a[v] = chosen.count(edge_key(red.var_edge[v].first, red.var_edge[v].second)) > 0;
  if (!evaluate(red.instance, a))
    fail(ErrorKind::LiftViolation, "lifted assignment does not satisfy the reduced instance");
  return a;
}

std::optional<TwoMatching> brute_force_2matching(const Graph& g) {
  validate_graph(g);
  const int m = g.edge_count();
  if (m > 24)
    fail(ErrorKind::TooLarge,
         "brute_force_2matching is guarded at 24 edges, graph has " + std::to_string(m));

  // DFS over edges, highest index outermost and "absent" first, visits edge
  // subsets in increasing bitmask order (edge 0 least significant); pruning
  // only skips subtrees without valid completions.
  auto adj = adjacency(g);
  std::vector<int> deg_chosen(g.n, 0);
  std::vector<int> undecided(g.n, 0);
  for (int v = 0; v < g.n; v++) undecided[v] = (int)adj[v].size();
  std::vector<char> chosen(m, 0);
  std::optional<TwoMatching> result;

  auto viable = [&](int v) {
    if (deg_chosen[v] > 2) return false;
    if (deg_chosen[v] == 0 && undecided[v] == 0) return false;
    return true;
  };

  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e < 0) {
      TwoMatching tm;
      for (int i = 0; i < m; i++)
        if (chosen[i]) tm.edges.push_back(g.edges[i]);
      for (int v = 0; v < g.n; v++)
        if (deg_chosen[v] == 0) return true;  // keep searching
      result = std::move(tm);
      return false;
    }
    auto [u, v] = g.edges[e];
    for (int take = 0; take < 2; take++) {
      undecided[u]--;
      undecided[v]--;
      if (take) {
        chosen[e] = 1;
        deg_chosen[u]++;
        deg_chosen[v]++;
      }
      bool ok = viable(u) && viable(v);
      if (ok && !rec(e - 1)) return false;
      if (take) {
        chosen[e] = 0;
        deg_chosen[u]--;
        deg_chosen[v]--;
      }
      undecided[u]++;
      undecided[v]++;
    }
    return true;
  };
  rec(m - 1);
  if (result) validate_two_matching(g, *result);
  return result;
}

}  // namespace ppsat
