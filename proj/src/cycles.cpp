#include "ppsat/cycles.hpp"

#include <algorithm>
#include <numeric>

#include "ppsat/errors.hpp"

namespace ppsat {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

CycleCollection cycle_collection(const Embedding& host, const FaceSet& host_faces,
                                 const std::set<uint64_t>& removed_edges) {
  const Graph& g = host.g;
  std::vector<std::vector<int>> kept(g.n);
  for (const auto& [u, v] : g.edges) {
    if (removed_edges.count(edge_key(u, v))) continue;
    kept[u].push_back(v);
    kept[v].push_back(u);
  }
  for (int v = 0; v < g.n; v++)
    if (kept[v].size() != 2)
      fail(ErrorKind::NotCycleCollection,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(kept[v].size()) +
               " in the kept subgraph");

  CycleCollection cc;
  // regions: merge host faces across removed edges
  UnionFind uf(host_faces.face_count());
  for (const auto& [u, v] : g.edges)
    if (removed_edges.count(edge_key(u, v)))
      uf.unite(host_faces.face_of(u, v), host_faces.face_of(v, u));

  std::vector<int> region_id(host_faces.face_count(), -1);
  cc.region_of_face.assign(host_faces.face_count(), -1);
  for (int f = 0; f < host_faces.face_count(); f++) {
    int r = uf.find(f);
    if (region_id[r] < 0) region_id[r] = cc.region_count++;
    cc.region_of_face[f] = region_id[r];
  }
  cc.outer_region = cc.region_of_face[host.outer_face];

  // cycles: components of the kept subgraph
  std::vector<char> vis(g.n, 0);
  for (int s = 0; s < g.n; s++) {
    if (vis[s]) continue;
    std::vector<int> cyc;
    int prev = -1, cur = s;
    do {
      vis[cur] = 1;
      cyc.push_back(cur);
      int next = kept[cur][0] == prev ? kept[cur][1] : kept[cur][0];
      prev = cur;
      cur = next;
    } while (cur != s);
    int u = cyc[0], v = cyc[1];
    int side_a = cc.region_of_face[host_faces.face_of(u, v)];
    int side_b = cc.region_of_face[host_faces.face_of(v, u)];
    if (side_a == side_b)
      fail(ErrorKind::NotCycleCollection, "cycle has the same region on both sides");
    cc.cycles.push_back(std::move(cyc));
    cc.cycle_sides.push_back({side_a, side_b});
  }
  return cc;
}

GenealogicalTree genealogical_tree(const CycleCollection& cc) {
  const int k = (int)cc.cycles.size();
  if (cc.region_count != k + 1)
    fail(ErrorKind::NotCycleCollection,
         "region/cycle count mismatch: " + std::to_string(cc.region_count) + " regions, " +
             std::to_string(k) + " cycles");
  std::vector<std::vector<std::pair<int, int>>> adj(cc.region_count);  // (region, cycle)
  for (int c = 0; c < k; c++) {
    auto [a, b] = cc.cycle_sides[c];
    adj[a].push_back({b, c});
    adj[b].push_back({a, c});
  }
  GenealogicalTree t;
  t.root = cc.outer_region;
  t.parent.assign(cc.region_count, -2);
  t.depth.assign(cc.region_count, 0);
  t.parent_cycle.assign(cc.region_count, -1);
  std::vector<int> stack{t.root};
  t.parent[t.root] = -1;
  int seen = 1;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (auto [w, c] : adj[r]) {
      if (t.parent[w] != -2) continue;
      t.parent[w] = r;
      t.parent_cycle[w] = c;
      t.depth[w] = t.depth[r] + 1;
      seen++;
      stack.push_back(w);
    }
  }
  if (seen != cc.region_count)
    fail(ErrorKind::NotCycleCollection, "region adjacency over cycles is not connected");
  return t;
}

int enclosing_cycle_count(const Embedding& host, const FaceSet& host_faces,
                          const CycleCollection& cc, int region) {
  int rep_face = -1;
  for (int f = 0; f < host_faces.face_count(); f++)
    if (cc.region_of_face[f] == region) {
      rep_face = f;
      break;
    }
  if (rep_face < 0) fail(ErrorKind::InvalidArgument, "unknown region");
  int count = 0;
  for (const auto& cyc : cc.cycles) {
    std::set<uint64_t> cyc_edges;
    const int L = (int)cyc.size();
    for (int i = 0; i < L; i++) cyc_edges.insert(edge_key(cyc[i], cyc[(i + 1) % L]));
    // merge all faces except across this cycle's edges
    UnionFind uf(host_faces.face_count());
    for (const auto& [u, v] : host.g.edges)
      if (!cyc_edges.count(edge_key(u, v)))
        uf.unite(host_faces.face_of(u, v), host_faces.face_of(v, u));
    if (uf.find(rep_face) != uf.find(host.outer_face)) count++;
  }
  return count;
}

}  // namespace ppsat
