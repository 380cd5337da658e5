#include "ppsat/nae.hpp"

#include <algorithm>

#include "ppsat/connectivity.hpp"
#include "ppsat/errors.hpp"
#include "ppsat/matching.hpp"

namespace ppsat {

SaturationResult saturate_face(Embedding& e, const std::vector<int>& walk, int clause_parity) {
  const int L = (int)walk.size();
  if (L % 2 != 0) fail(ErrorKind::OddFace, "face of odd length " + std::to_string(L));
  if (L <= 4)
    fail(ErrorKind::InvalidArgument,
         "saturation applies to faces longer than 4, got " + std::to_string(L));
  if (clause_parity != 0 && clause_parity != 1)
    fail(ErrorKind::InvalidArgument, "clause_parity must be 0 or 1");
  const int k = L / 2;
  SaturationResult res;
  res.dummies.reserve(k);
  for (int i = 0; i < k; i++) res.dummies.push_back(e.g.add_vertex());
  e.rot.resize(e.g.n);

  for (int i = 0; i < k; i++) {
    int t = 2 * i + clause_parity;
    int clause = walk[t];
    int prev = walk[(t - 1 + L) % L];
    int w = res.dummies[i];
    int w_next = res.dummies[(i + 1) % k];
    int w_prev = res.dummies[(i - 1 + k) % k];
    // face orbit inside: (clause -> w) is followed by (w -> w_prev), and
    // (w_next -> w) by (w -> clause); rot[w] = (w_next, clause, w_prev).
    e.rot[w] = {w_next, clause, w_prev};
    rotation_insert_after(e, clause, prev, w);
    e.g.add_edge(w, clause);
    res.spokes.emplace_back(w, clause);
  }
  // k >= 3 since L >= 6, so the wrap-around edge never duplicates
  for (int i = 0; i < k; i++) {
    int a = res.dummies[i], b = res.dummies[(i + 1) % k];
    e.g.add_edge(a, b);
    res.cycle_edges.emplace_back(a, b);
  }
  return res;
}

namespace {

// Validates that a face walk of a bipartite SAT graph alternates clause and
// variable vertices; returns the parity of the clause positions.
int clause_parity_of_walk(const std::vector<int>& walk, int nvars) {
  const int L = (int)walk.size();
  if (L % 2 != 0) fail(ErrorKind::OddFace, "face walk of odd length");
  int parity = walk[0] >= nvars ? 0 : 1;
  for (int i = 0; i < L; i++) {
    bool is_clause = walk[i] >= nvars;
    if (is_clause != ((i % 2) == parity))
      fail(ErrorKind::NonAlternatingFace, "face walk does not alternate clause/variable vertices");
  }
  return parity;
}

}  // namespace

SaturatedClauseGraph build_saturated_clause_graph(const SatGraph& sg) {
  const int nvars = sg.nvars();
  const int m = sg.nclauses();
  {
    auto deg = degrees(sg.emb.g);
    for (int c = 0; c < m; c++)
      if (deg[nvars + c] != 3)
        fail(ErrorKind::ClauseDegreeNot3, "clause " + std::to_string(c + 1) + " has degree " +
                                              std::to_string(deg[nvars + c]));
  }
  {
    FaceSet faces = trace_faces(sg.emb);
    if (!is_three_connected_plane(sg.emb, faces))
      fail(ErrorKind::NotThreeConnected, "the SAT graph is not 3-connected");
  }

  Embedding work = sg.emb;
  FaceSet gamma_faces = trace_faces(work);

  // tags and witnesses recorded in work ids, remapped after deletion
  std::vector<std::pair<uint64_t, EdgeOrigin>> tags;
  std::vector<std::vector<std::pair<int, int>>> witness(nvars);  // directed edges

  for (const auto& walk : gamma_faces.walks) {
    const int L = (int)walk.size();
    int parity = clause_parity_of_walk(walk, nvars);
    if (L == 4) {
      int t1 = parity, t2 = parity + 2;
      int c1 = walk[t1], c2 = walk[t2];
      int prev1 = walk[(t1 + 3) % 4], prev2 = walk[t2 - 1];
      rotation_insert_after(work, c1, prev1, c2);
      rotation_insert_after(work, c2, prev2, c1);
      work.g.add_edge(c1, c2);
      tags.emplace_back(edge_key(c1, c2), EdgeOrigin::QuadEdge);
      // the face piece keeping variable walk[t+1] contains the directed
      // chord (next clause around the walk -> previous clause)
      witness[walk[(t1 + 1) % 4]].push_back({c2, c1});
      witness[walk[(t2 + 1) % 4]].push_back({c1, c2});
    } else {
      SaturationResult sat = saturate_face(work, walk, parity);
      for (auto [w, c] : sat.spokes) tags.emplace_back(edge_key(w, c), EdgeOrigin::Spoke);
      for (auto [a, b] : sat.cycle_edges) tags.emplace_back(edge_key(a, b), EdgeOrigin::DummyCycle);
      const int k = L / 2;
      for (int i = 0; i < k; i++) {
        int var = walk[(2 * i + parity + 1) % L];
        witness[var].push_back({sat.dummies[(i + 1) % k], sat.dummies[i]});
      }
    }
  }

  // delete the variable vertices and compact ids: clause c -> c - nvars,
  // dummy d -> d - nvars
  const int total = work.g.n;
  auto remap = [&](int v) { return v - nvars; };
  SaturatedClauseGraph csg;
  csg.num_clauses = m;
  csg.emb.g.n = total - nvars;
  csg.emb.rot.assign(total - nvars, {});
  for (int v = nvars; v < total; v++) {
    for (int w : work.rot[v]) {
      if (w < nvars) continue;
      csg.emb.rot[remap(v)].push_back(remap(w));
    }
  }
  for (const auto& [u, v] : work.g.edges) {
    if (u < nvars || v < nvars) continue;
    csg.emb.g.add_edge(remap(u), remap(v));
  }
  for (auto& [key, orig] : tags) {
    int u = (int)(key >> 32), v = (int)(key & 0xffffffffu);
    csg.origin[edge_key(remap(u), remap(v))] = orig;
  }

  csg.emb.outer_face = 0;
  validate_embedding(csg.emb);
  {
    auto deg = degrees(csg.emb.g);
    for (int v = 0; v < csg.emb.g.n; v++)
      if (deg[v] != 3)
        fail(ErrorKind::InternalNonCubic, "saturated clause graph vertex " + std::to_string(v) +
                                              " has degree " + std::to_string(deg[v]));
  }
  if (!bridges(csg.emb.g).empty())
    fail(ErrorKind::BridgeFound, "saturated clause graph contains a bridge");

  csg.faces = trace_faces(csg.emb);
  csg.emb.outer_face = choose_outer_face(csg.faces);

  csg.variable_face.assign(nvars, -1);
  for (int v = 0; v < nvars; v++) {
    for (auto [a, b] : witness[v]) {
      int f = csg.faces.face_of(remap(a), remap(b));
      if (csg.variable_face[v] < 0) csg.variable_face[v] = f;
      else if (csg.variable_face[v] != f)
        fail(ErrorKind::InternalNonCubic,
             "variable " + std::to_string(v + 1) + " maps to two distinct faces of C_s");
    }
    if (csg.variable_face[v] < 0)
      fail(ErrorKind::InternalNonCubic, "variable " + std::to_string(v + 1) + " has no face witness");
  }
  return csg;
}

std::vector<std::pair<int, int>> perfect_matching(const SaturatedClauseGraph& csg) {
  const Graph& g = csg.emb.g;
  {
    auto deg = degrees(g);
    for (int v = 0; v < g.n; v++)
      if (deg[v] != 3) fail(ErrorKind::NotCubic, "perfect_matching requires a cubic graph");
  }
  if (!bridges(g).empty())
    fail(ErrorKind::InvalidArgument, "perfect_matching requires a bridgeless graph");
  auto mate = maximum_matching(g);
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n; v++) {
    if (mate[v] < 0)
      fail(ErrorKind::NoPerfectMatching,
           "no perfect matching found; vertex " + std::to_string(v) + " unmatched");
    if (v < mate[v]) out.emplace_back(v, mate[v]);
  }
  return out;
}

namespace {

bool region_inside_cycle(const GenealogicalTree& tree, int region, int cycle) {
  for (int r = region; tree.parent[r] != -1; r = tree.parent[r])
    if (tree.parent_cycle[r] == cycle) return true;
  return false;
}

}  // namespace

NaeSolution solve_nae(const SatInstance& inst, const NaeOptions& opts) {
  validate_instance(inst);
  if (inst.variant != Variant::Nae)
    fail(ErrorKind::InvalidArgument, "solve_nae expects an NAE instance");
  for (size_t c = 0; c < inst.clauses.size(); c++)
    if (inst.clauses[c].size() != 3)
      fail(ErrorKind::ClauseDegreeNot3,
           "clause " + std::to_string(c + 1) + " does not have exactly 3 variables");

  SatGraph sg = build_sat_graph(inst, opts.rotation, opts.outer_face);
  NaeSolution sol;
  sol.csg = build_saturated_clause_graph(sg);
  sol.matching = perfect_matching(sol.csg);

  std::set<uint64_t> removed;
  for (auto [u, v] : sol.matching) removed.insert(edge_key(u, v));
  sol.cycles = cycle_collection(sol.csg.emb, sol.csg.faces, removed);
  sol.tree = genealogical_tree(sol.cycles);

  sol.assignment.assign(inst.nvars, 0);
  for (int v = 0; v < inst.nvars; v++) {
    int region = sol.cycles.region_of_face[sol.csg.variable_face[v]];
    sol.assignment[v] = sol.tree.depth[region] % 2 == 1;
  }

  if (opts.compute_splits) {
    // cycle through each clause vertex = the component holding it
    std::vector<int> cycle_of(sol.csg.emb.g.n, -1);
    for (int c = 0; c < (int)sol.cycles.cycles.size(); c++)
      for (int v : sol.cycles.cycles[c]) cycle_of[v] = c;
    sol.clause_split.resize(inst.nclauses());
    for (int c = 0; c < inst.nclauses(); c++) {
      int cyc = cycle_of[c];
      int inside = 0, outside = 0;
      for (int lit : inst.clauses[c]) {
        int region = sol.cycles.region_of_face[sol.csg.variable_face[std::abs(lit) - 1]];
        if (region_inside_cycle(sol.tree, region, cyc)) inside++;
        else outside++;
      }
      sol.clause_split[c] = {inside, outside};
      if (inside == 0 || outside == 0)
        fail(ErrorKind::NotNAE, "clause " + std::to_string(c + 1) +
                                    " has a 3/0 split across its cycle in C'");
    }
  }

  if (!evaluate(inst, sol.assignment))
    fail(ErrorKind::NotNAE, "pipeline produced a non-satisfying assignment");
  return sol;
}

Assignment assignment_for_root(const NaeSolution& sol, int root_region) {
  // recompute depths from the alternate root over the region tree
  const int R = sol.cycles.region_count;
  std::vector<std::vector<int>> adj(R);
  for (int c = 0; c < (int)sol.cycles.cycles.size(); c++) {
    auto [a, b] = sol.cycles.cycle_sides[c];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> depth(R, -1);
  depth[root_region] = 0;
  std::vector<int> stack{root_region};
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int w : adj[r])
      if (depth[w] < 0) {
        depth[w] = depth[r] + 1;
        stack.push_back(w);
      }
  }
  Assignment a(sol.csg.variable_face.size(), 0);
  for (size_t v = 0; v < a.size(); v++) {
    int region = sol.cycles.region_of_face[sol.csg.variable_face[v]];
    a[v] = depth[region] % 2 == 1;
  }
  return a;
}

}  // namespace ppsat
