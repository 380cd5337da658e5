#include "ppsat/one_in_three.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ppsat/connectivity.hpp"
#include "ppsat/errors.hpp"

namespace ppsat {

EvenTriangulation build_even_triangulation(const SatInstance& inst,
                                           const std::vector<std::vector<int>>* rotation) {
  validate_instance(inst);
  if (inst.variant != Variant::OneInThree)
    fail(ErrorKind::InvalidArgument, "expected a 1-in-3 instance");
  for (size_t c = 0; c < inst.clauses.size(); c++)
    if (inst.clauses[c].size() != 3)
      fail(ErrorKind::ClauseDegreeNot3,
           "clause " + std::to_string(c + 1) + " does not have exactly 3 variables");
  {
    auto freq = variable_frequencies(inst);
    std::string offenders;
    for (int v = 0; v < inst.nvars; v++)
      if (freq[v] % 2 != 0) offenders += (offenders.empty() ? "" : ", ") + std::to_string(v + 1);
    if (!offenders.empty())
      fail(ErrorKind::OddFrequencyVariable, "variables with odd frequency: " + offenders);
  }

  SatGraph sg = build_sat_graph(inst, rotation);
  EvenTriangulation t;
  t.csg = build_saturated_clause_graph(sg);

  if (!is_three_connected_plane(t.csg.emb, t.csg.faces))
    fail(ErrorKind::CsNotThreeConnected, "saturated clause graph is not 3-connected");

  DualResult d = dual_graph(t.csg.emb, t.csg.faces);
  t.dual = d.dual;

  t.variable_of.assign(t.dual.n, -1);
  for (int v = 0; v < inst.nvars; v++) {
    int f = t.csg.variable_face[v];
    if (t.variable_of[f] != -1)
      fail(ErrorKind::CsNotThreeConnected,
           "two variables map to the same face of C_s");
    t.variable_of[f] = v;
  }

  auto deg = degrees(t.dual);
  for (int f = 0; f < t.dual.n; f++) {
    if (deg[f] % 2 != 0) {
      std::string what = "dual vertex " + std::to_string(f) + " (face of length " +
                         std::to_string(deg[f]) + ") has odd degree";
      if (t.variable_of[f] >= 0)
        what += "; it is the face of variable " + std::to_string(t.variable_of[f] + 1);
      else
        what += "; it is a saturation face";
      fail(ErrorKind::DualNotEven, what);
    }
  }
  return t;
}

FaceColoring three_color(const EvenTriangulation& t) {
  const Graph& dual = t.dual;
  if (dual.n < 3) fail(ErrorKind::InvalidArgument, "dual too small to 3-color");
  auto adj = adjacency(dual);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  FaceColoring color(dual.n, -1);
  color[0] = 0;
  color[adj[0][0]] = 1;

  // Around any vertex the colors of consecutive neighbors are forced: in a
  // triangulation each edge lies on two triangles, so colored pairs
  // propagate. A conflict falsifies 3-colorability.
  std::vector<std::vector<char>> nb(dual.n);
  std::queue<std::pair<int, int>> q;  // colored edges
  q.push({0, adj[0][0]});
  std::set<uint64_t> edge_set;
  for (const auto& [u, v] : dual.edges) edge_set.insert(edge_key(u, v));
  while (!q.empty()) {
    auto [u, v] = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!edge_set.count(edge_key(w, v))) continue;  // want triangles u,v,w
      int forced = 3 - color[u] - color[v];
      if (color[w] == -1) {
        color[w] = forced;
        q.push({u, w});
        q.push({v, w});
      } else if (color[w] != forced) {
        fail(ErrorKind::NoColoring, "triangle propagation reached a conflict at dual vertex " +
                                        std::to_string(w));
      }
    }
  }
  for (int f = 0; f < dual.n; f++)
    if (color[f] == -1)
      fail(ErrorKind::NoColoring, "dual vertex " + std::to_string(f) + " left uncolored");
  for (const auto& [u, v] : dual.edges)
    if (color[u] == color[v])
      fail(ErrorKind::NoColoring, "adjacent faces share a color");
  return color;
}

OneInThreeSolution solve_1in3_even(const SatInstance& inst,
                                   const std::vector<std::vector<int>>* rotation, int true_class) {
  if (true_class < 0 || true_class > 2)
    fail(ErrorKind::InvalidArgument, "true_class must be 0, 1 or 2");
  OneInThreeSolution sol;
  sol.triangulation = build_even_triangulation(inst, rotation);
  sol.coloring = three_color(sol.triangulation);

  sol.assignment.assign(inst.nvars, 0);
  for (int f = 0; f < sol.triangulation.dual.n; f++) {
    int v = sol.triangulation.variable_of[f];
    if (v >= 0) sol.assignment[v] = sol.coloring[f] == true_class;
  }

  // the three faces around each clause vertex must carry three colors
  const auto& csg = sol.triangulation.csg;
  for (int c = 0; c < csg.num_clauses; c++) {
    std::set<int> colors;
    for (int w : csg.emb.rot[c]) colors.insert(sol.coloring[csg.faces.face_of(c, w)]);
    if (colors.size() != 3)
      fail(ErrorKind::Not1in3,
           "faces around clause " + std::to_string(c + 1) + " use " +
               std::to_string(colors.size()) + " colors");
  }
  if (!evaluate(inst, sol.assignment))
    fail(ErrorKind::Not1in3, "pipeline produced a non-satisfying assignment");
  return sol;
}

}  // namespace ppsat
