#include "ppsat/connectivity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ppsat/errors.hpp"

namespace ppsat {

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) fail(ErrorKind::InvalidArgument, "is_k_connected supports k in {1,2,3}");
  if (g.n <= k) return false;
  if (!is_connected(g)) return false;
  if (k >= 2)
    for (int v = 0; v < g.n; v++)
      if (!connected_after_deleting(g, {v})) return false;
  if (k >= 3)
    for (int u = 0; u < g.n; u++)
      for (int v = u + 1; v < g.n; v++)
        if (!connected_after_deleting(g, {u, v})) return false;
  return true;
}

namespace {

struct ArtDfs {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> tin, low;
  std::vector<char> cut;
  std::vector<std::pair<int, int>> bridge_list;
  int timer = 0;

  explicit ArtDfs(const std::vector<std::vector<int>>& a)
      : adj(a), tin(a.size(), -1), low(a.size(), 0), cut(a.size(), 0) {}

  void run(int root) {
    struct Frame {
      int v;
      int parent;
      size_t i;
      int children;
      bool skipped_parent;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1, 0, 0, false});
    tin[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.i < adj[f.v].size()) {
        int w = adj[f.v][f.i++];
        if (w == f.parent && !f.skipped_parent) {
          f.skipped_parent = true;
          continue;
        }
        if (tin[w] >= 0) {
          low[f.v] = std::min(low[f.v], tin[w]);
        } else {
          tin[w] = low[w] = timer++;
          f.children++;
          stack.push_back({w, f.v, 0, 0, false});
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& pf = stack.back();
          low[pf.v] = std::min(low[pf.v], low[done.v]);
          if (pf.parent != -1 && low[done.v] >= tin[pf.v]) cut[pf.v] = 1;
          if (low[done.v] > tin[pf.v]) bridge_list.emplace_back(pf.v, done.v);
        } else {
          if (done.children > 1) cut[done.v] = 1;
        }
      }
    }
  }
};

}  // namespace

std::vector<int> articulation_points(const Graph& g) {
  auto adj = adjacency(g);
  ArtDfs dfs(adj);
  for (int v = 0; v < g.n; v++)
    if (dfs.tin[v] < 0) dfs.run(v);
  std::vector<int> out;
  for (int v = 0; v < g.n; v++)
    if (dfs.cut[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
  auto adj = adjacency(g);
  ArtDfs dfs(adj);
  for (int v = 0; v < g.n; v++)
    if (dfs.tin[v] < 0) dfs.run(v);
  return dfs.bridge_list;
}

bool is_biconnected(const Graph& g) {
  if (g.n < 3) return false;
  return is_connected(g) && articulation_points(g).empty();
}

std::vector<std::pair<int, int>> separation_pairs_plane(const Embedding& e, const FaceSet& faces) {
  const Graph& g = e.g;
  std::map<uint64_t, int> shared;
  for (const auto& w : faces.walks) {
    for (size_t i = 0; i < w.size(); i++)
      for (size_t j = i + 1; j < w.size(); j++) shared[edge_key(w[i], w[j])]++;
  }
  std::set<uint64_t> edge_set;
  for (const auto& [u, v] : g.edges) edge_set.insert(edge_key(u, v));
  std::vector<std::pair<int, int>> result;
  for (const auto& [key, cnt] : shared) {
    int u = (int)(key >> 32), v = (int)(key & 0xffffffffu);
    int threshold = edge_set.count(key) ? 3 : 2;
    if (cnt < threshold) continue;
    if (!connected_after_deleting(g, {u, v})) result.emplace_back(u, v);
  }
  return result;
}

bool is_three_connected_plane(const Embedding& e, const FaceSet& faces) {
  const Graph& g = e.g;
  if (g.n < 4) return false;
  if (!is_biconnected(g)) return false;
  return separation_pairs_plane(e, faces).empty();
}

namespace {

// Unit-capacity max flow via BFS augmentation; sized for path counts <= 3.
struct UnitFlow {
  int n;
  std::vector<std::vector<int>> out_arcs;
  std::vector<int> head;
  std::vector<char> cap;

  explicit UnitFlow(int nodes) : n(nodes), out_arcs(nodes) {}

  void arc(int u, int v) {
    out_arcs[u].push_back((int)head.size());
    head.push_back(v);
    cap.push_back(1);
    out_arcs[v].push_back((int)head.size());
    head.push_back(u);
    cap.push_back(0);
  }

  bool augment(int s, int t) {
    std::vector<int> pre(n, -1);
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == t) break;
      for (int a : out_arcs[u]) {
        if (!cap[a] || vis[head[a]]) continue;
        vis[head[a]] = 1;
        pre[head[a]] = a;
        q.push(head[a]);
      }
    }
    if (!vis[t]) return false;
    for (int w = t; w != s;) {
      int a = pre[w];
      cap[a] = 0;
      cap[a ^ 1] = 1;
      w = head[a ^ 1];
    }
    return true;
  }

  int maxflow(int s, int t, int bound) {
    int f = 0;
    while (f < bound && augment(s, t)) f++;
    return f;
  }
};

}  // namespace

int vertex_disjoint_paths(const Graph& g, int u, int v, int cap) {
  // in(w)=2w, out(w)=2w+1; u contributes only out(u), v only in(v)=2v.
  UnitFlow fl(2 * g.n);
  for (int w = 0; w < g.n; w++)
    if (w != u && w != v) fl.arc(2 * w, 2 * w + 1);
  auto in_node = [&](int x) { return x == u ? 2 * u + 1 : 2 * x; };
  for (const auto& [a, b] : g.edges) {
    fl.arc(2 * a + 1, in_node(b));
    fl.arc(2 * b + 1, in_node(a));
  }
  return fl.maxflow(2 * u + 1, 2 * v, cap);
}

bool is_internally_3_connected(const Embedding& e) {
  const Graph& g = e.g;
  FaceSet faces = trace_faces(e);
  std::vector<char> outer(g.n, 0);
  for (int w : faces.walks[e.outer_face]) outer[w] = 1;
  for (int v = 0; v < g.n; v++) {
    if (outer[v]) continue;
    UnitFlow fl(2 * g.n + 1);
    const int sink = 2 * g.n;
    for (int w = 0; w < g.n; w++) {
      if (w == v) continue;
      fl.arc(2 * w, 2 * w + 1);
      if (outer[w]) fl.arc(2 * w + 1, sink);
    }
    auto in_node = [&](int x) { return x == v ? 2 * v + 1 : 2 * x; };
    for (const auto& [a, b] : g.edges) {
      fl.arc(2 * a + 1, in_node(b));
      fl.arc(2 * b + 1, in_node(a));
    }
    if (fl.maxflow(2 * v + 1, sink, 3) < 3) return false;
  }
  return true;
}

bool k_connected_flow_oracle(const Graph& g, int k) {
  if (g.n <= k) return false;
  if (!is_connected(g)) return false;
  std::set<uint64_t> edge_set;
  for (const auto& [u, v] : g.edges) edge_set.insert(edge_key(u, v));
  auto deg = degrees(g);
  for (int v = 0; v < g.n; v++)
    if (deg[v] < k) return false;
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++) {
      if (edge_set.count(edge_key(u, v))) continue;
      if (vertex_disjoint_paths(g, u, v, k) < k) return false;
    }
  return true;
}

}  // namespace ppsat
