#include "ppsat/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppsat/connectivity.hpp"
#include "ppsat/errors.hpp"
#include "ppsat/planarity.hpp"

namespace ppsat {

int CubicGrowth::live_face_count() const {
  int c = 0;
  for (const auto& w : face_walks)
    if (!w.empty()) c++;
  return c;
}

Embedding CubicGrowth::to_embedding() const {
  Embedding e;
  e.g.n = vertex_count();
  for (int v = 0; v < e.g.n; v++)
    for (int w : rot[v])
      if (v < w) e.g.add_edge(v, w);
  e.rot = rot;
  e.outer_face = 0;
  validate_embedding(e);
  e.outer_face = choose_outer_face(trace_faces(e));
  return e;
}

CubicGrowth CubicGrowth::from_embedding(const Embedding& e, bool bipartite) {
  CubicGrowth h;
  h.rot = e.rot;
  FaceSet fs = trace_faces(e);
  h.face_walks = fs.walks;
  h.face_of_dir = fs.face_of_dir;
  if (bipartite) {
    auto col = bipartition(e.g);
    if (!col) fail(ErrorKind::InvalidArgument, "bipartite growth from a non-bipartite seed");
    h.color = *col;
  }
  return h;
}

namespace {

// inserts `mid` into `walk` right after the directed edge (a -> b)
void walk_insert_on_edge(std::vector<int>& walk, int a, int b, const std::vector<int>& mids) {
  const int L = (int)walk.size();
  for (int i = 0; i < L; i++) {
    if (walk[i] == a && walk[(i + 1) % L] == b) {
      walk.insert(walk.begin() + i + 1, mids.begin(), mids.end());
      return;
    }
  }
  fail(ErrorKind::InvalidArgument, "directed edge not found in face walk");
}

void replace_neighbor(std::vector<int>& r, int from, int to) {
  auto it = std::find(r.begin(), r.end(), from);
  if (it == r.end()) fail(ErrorKind::InvalidArgument, "replace_neighbor: neighbor missing");
  *it = to;
}

}  // namespace

void CubicGrowth::insert_edge(int face, int pos1, int pos2) {
  if (pos1 == pos2) fail(ErrorKind::InvalidArgument, "insert_edge needs two distinct edges");
  if (!color.empty()) fail(ErrorKind::InvalidArgument, "insert_edge breaks bipartiteness");
  if (pos1 > pos2) std::swap(pos1, pos2);
  std::vector<int> walk = face_walks[face];
  const int L = (int)walk.size();
  int a1 = walk[pos1], b1 = walk[(pos1 + 1) % L];
  int a2 = walk[pos2], b2 = walk[(pos2 + 1) % L];

  int x = (int)rot.size();
  rot.push_back({});
  int y = (int)rot.size();
  rot.push_back({});

  rot[x] = {y, b1, a1};
  rot[y] = {x, b2, a2};
  replace_neighbor(rot[a1], b1, x);
  replace_neighbor(rot[b1], a1, x);
  replace_neighbor(rot[a2], b2, y);
  replace_neighbor(rot[b2], a2, y);

  // neighbor faces of the subdivided edges gain the division vertex
  int nf1 = face_of_dir.at(dir_key(b1, a1));
  int nf2 = face_of_dir.at(dir_key(b2, a2));
  walk_insert_on_edge(face_walks[nf1], b1, a1, {x});
  walk_insert_on_edge(face_walks[nf2], b2, a2, {y});

  // split f into two faces along the chord
  std::vector<int> w1{x};
  for (int t = pos1 + 1; t <= pos2; t++) w1.push_back(walk[t]);
  w1.push_back(y);
  std::vector<int> w2{y};
  for (int t = pos2 + 1; t < L + pos1 + 1; t++) w2.push_back(walk[t % L]);
  w2.push_back(x);

  face_walks[face].clear();
  int f1 = (int)face_walks.size();
  face_walks.push_back(std::move(w1));
  int f2 = (int)face_walks.size();
  face_walks.push_back(std::move(w2));

  auto relabel = [&](int f) {
    const auto& w = face_walks[f];
    const int n = (int)w.size();
    for (int i = 0; i < n; i++) face_of_dir[dir_key(w[i], w[(i + 1) % n])] = f;
  };
  relabel(f1);
  relabel(f2);
  // the two directed edges created inside the neighbor faces
  face_of_dir.erase(dir_key(b1, a1));
  face_of_dir.erase(dir_key(a1, b1));
  face_of_dir[dir_key(b1, x)] = nf1;
  face_of_dir[dir_key(x, a1)] = nf1;
  face_of_dir.erase(dir_key(b2, a2));
  face_of_dir.erase(dir_key(a2, b2));
  face_of_dir[dir_key(b2, y)] = nf2;
  face_of_dir[dir_key(y, a2)] = nf2;
}

void CubicGrowth::insert_ladder(int face, int pos1, int pos2) {
  if (color.empty()) fail(ErrorKind::InvalidArgument, "insert_ladder requires bipartite growth");
  if (pos1 == pos2) fail(ErrorKind::InvalidArgument, "insert_ladder needs two distinct edges");
  if (pos1 > pos2) std::swap(pos1, pos2);
  std::vector<int> walk = face_walks[face];
  const int L = (int)walk.size();
  int a1 = walk[pos1], b1 = walk[(pos1 + 1) % L];
  int a2 = walk[pos2], b2 = walk[(pos2 + 1) % L];
  if (color[a1] != color[a2])
    fail(ErrorKind::InvalidArgument, "ladder endpoints must have equal colors");

  int x1 = (int)rot.size();
  rot.push_back({});
  int x2 = (int)rot.size();
  rot.push_back({});
  int y1 = (int)rot.size();
  rot.push_back({});
  int y2 = (int)rot.size();
  rot.push_back({});

  rot[x1] = {a1, y2, x2};
  rot[x2] = {x1, y1, b1};
  rot[y1] = {a2, x2, y2};
  rot[y2] = {x1, b2, y1};
  replace_neighbor(rot[a1], b1, x1);
  replace_neighbor(rot[b1], a1, x2);
  replace_neighbor(rot[a2], b2, y1);
  replace_neighbor(rot[b2], a2, y2);
  color.push_back(1 - color[a1]);  // x1
  color.push_back(color[a1]);      // x2
  color.push_back(1 - color[a2]);  // y1
  color.push_back(color[a2]);      // y2

  int nf1 = face_of_dir.at(dir_key(b1, a1));
  int nf2 = face_of_dir.at(dir_key(b2, a2));
  walk_insert_on_edge(face_walks[nf1], b1, a1, {x2, x1});
  walk_insert_on_edge(face_walks[nf2], b2, a2, {y2, y1});

  // F1: x2, walk(pos1+1..pos2), y1; quad: x1,x2,y1,y2; F3: y2, walk(pos2+1..pos1), x1
  std::vector<int> w1{x2};
  for (int t = pos1 + 1; t <= pos2; t++) w1.push_back(walk[t]);
  w1.push_back(y1);
  std::vector<int> wq{x1, x2, y1, y2};
  std::vector<int> w3{y2};
  for (int t = pos2 + 1; t < L + pos1 + 1; t++) w3.push_back(walk[t % L]);
  w3.push_back(x1);

  face_walks[face].clear();
  int f1 = (int)face_walks.size();
  face_walks.push_back(std::move(w1));
  int fq = (int)face_walks.size();
  face_walks.push_back(std::move(wq));
  int f3 = (int)face_walks.size();
  face_walks.push_back(std::move(w3));

  auto relabel = [&](int f) {
    const auto& w = face_walks[f];
    const int n = (int)w.size();
    for (int i = 0; i < n; i++) face_of_dir[dir_key(w[i], w[(i + 1) % n])] = f;
  };
  relabel(f1);
  relabel(fq);
  relabel(f3);
  face_of_dir.erase(dir_key(b1, a1));
  face_of_dir.erase(dir_key(a1, b1));
  face_of_dir[dir_key(b1, x2)] = nf1;
  face_of_dir[dir_key(x2, x1)] = nf1;
  face_of_dir[dir_key(x1, a1)] = nf1;
  face_of_dir.erase(dir_key(b2, a2));
  face_of_dir.erase(dir_key(a2, b2));
  face_of_dir[dir_key(b2, y2)] = nf2;
  face_of_dir[dir_key(y2, y1)] = nf2;
  face_of_dir[dir_key(y1, a2)] = nf2;
}

RadialInstance radial_instance(const CubicGrowth& h, Variant variant) {
  const int m = h.vertex_count();
  std::vector<int> face_var(h.face_walks.size(), -1);
  int nvars = 0;
  for (int f = 0; f < (int)h.face_walks.size(); f++)
    if (!h.face_walks[f].empty()) face_var[f] = nvars++;

  RadialInstance ri;
  ri.instance.variant = variant;
  ri.instance.nvars = nvars;
  for (int c = 0; c < m; c++) {
    std::vector<int> clause;
    for (int w : h.rot[c]) clause.push_back(face_var[h.face_of_dir.at(dir_key(c, w))] + 1);
    std::sort(clause.begin(), clause.end());
    ri.instance.clauses.push_back(std::move(clause));
  }
  validate_instance(ri.instance);

  // SAT-graph rotation: variables 0..n-1 first, clause c -> nvars + c.
  ri.rotation.assign(nvars + m, {});
  for (int c = 0; c < m; c++)
    for (int w : h.rot[c])
      ri.rotation[nvars + c].push_back(face_var[h.face_of_dir.at(dir_key(c, w))]);
  for (int f = 0; f < (int)h.face_walks.size(); f++) {
    if (h.face_walks[f].empty()) continue;
    for (int v : h.face_walks[f]) ri.rotation[face_var[f]].push_back(nvars + v);
  }
  return ri;
}

std::optional<RadialInstance> split_variable(const RadialInstance& ri, int var, int arc_start,
                                             int keep) {
  const SatInstance& inst = ri.instance;
  const int n = inst.nvars, m = inst.nclauses();
  const auto& rot_v = ri.rotation[var];
  const int f = (int)rot_v.size();
  if (keep < 3 || f - keep < 3)
    fail(ErrorKind::InvalidArgument, "split parts must both have frequency >= 3");

  RadialInstance out;
  out.instance.variant = inst.variant;
  out.instance.nvars = n + 1;
  const int w = n;  // id of the new variable (old clause vertex c shifts to n+1+c)

  std::set<int> arc_b;  // clause vertices moving to the new variable
  std::vector<int> rot_keep, rot_new;
  for (int i = 0; i < f; i++) {
    int cv = rot_v[(arc_start + i) % f];
    if (i < keep) rot_keep.push_back(cv);
    else {
      rot_new.push_back(cv);
      arc_b.insert(cv);
    }
  }

  out.instance.clauses = inst.clauses;
  for (int c = 0; c < m; c++) {
    if (!arc_b.count(n + c)) continue;
    for (int& lit : out.instance.clauses[c])
      if (lit == var + 1) lit = w + 1;
  }
  // literal ids for old variables are unchanged; w+1 = n+1 is fresh
  for (auto& cl : out.instance.clauses) std::sort(cl.begin(), cl.end());

  auto new_id = [&](int old_vertex) {
    return old_vertex < n ? old_vertex : old_vertex + 1;  // clause shift by one
  };
  out.rotation.assign(n + 1 + m, {});
  for (int v = 0; v < n; v++) {
    if (v == var) {
      for (int cv : rot_keep) out.rotation[v].push_back(new_id(cv));
    } else {
      for (int cv : ri.rotation[v]) out.rotation[v].push_back(new_id(cv));
    }
  }
  for (int cv : rot_new) out.rotation[w].push_back(new_id(cv));
  for (int c = 0; c < m; c++) {
    for (int u : ri.rotation[n + c]) {
      int mapped = u == var && arc_b.count(n + c) ? w : u;
      out.rotation[n + 1 + c].push_back(mapped);
    }
  }

  SatGraph sg = build_sat_graph(out.instance, &out.rotation);
  FaceSet faces = trace_faces(sg.emb);
  if (!is_three_connected_plane(sg.emb, faces)) return std::nullopt;
  return out;
}

RadialInstance random_quad_instance(const RandomQuadOptions& opts) {
  if (opts.nvars < (opts.even ? 6 : 4))
    fail(ErrorKind::InvalidArgument, "too few variables requested");
  std::mt19937_64 rng(opts.seed);
  Embedding seed_emb = compute_embedding(opts.even ? cube_graph() : complete_graph(4));
  CubicGrowth h = CubicGrowth::from_embedding(seed_emb, opts.even);

  auto random_face = [&](int min_len) {
    for (int tries = 0; tries < 10000; tries++) {
      int v = (int)(rng() % h.vertex_count());
      int s = (int)(rng() % 3);
      int f = h.face_of_dir.at(dir_key(v, h.rot[v][s]));
      if ((int)h.face_walks[f].size() >= min_len) return f;
    }
    fail(ErrorKind::InvalidArgument, "no face of the required length");
  };

  // one insertion adds one face (= one variable); a ladder adds two
  int faces_needed = opts.nvars - h.live_face_count();
  while (faces_needed > 0) {
    if (opts.even) {
      if (faces_needed == 1) {
        // a ladder adds 2 faces; overshooting is not allowed, so widen once
        // by growing from a longer start next time. Callers use even nvars
        // relative to the cube's 6 faces; reject odd demands.
        fail(ErrorKind::InvalidArgument,
             "even-frequency growth reaches only face counts of the cube's parity (6 + 2k)");
      }
      int f = random_face(4);
      const int L = (int)h.face_walks[f].size();
      int p1 = (int)(rng() % L);
      int p2 = (int)(rng() % L);
      if (p1 == p2) continue;
      int lo = std::min(p1, p2), hi = std::max(p1, p2);
      if (h.color[h.face_walks[f][lo]] != h.color[h.face_walks[f][hi]]) continue;
      h.insert_ladder(f, lo, hi);
      faces_needed -= 2;
    } else {
      int f = random_face(3);
      const int L = (int)h.face_walks[f].size();
      int p1 = (int)(rng() % L);
      int p2 = (int)(rng() % L);
      if (p1 == p2) continue;
      h.insert_edge(f, std::min(p1, p2), std::max(p1, p2));
      faces_needed -= 1;
    }
  }

  RadialInstance ri = radial_instance(h, opts.variant);
  for (int s = 0; s < opts.splits; s++) {
    // pick the most frequent variable with an even-split when needed
    auto freq = variable_frequencies(ri.instance);
    bool done = false;
    for (int tries = 0; tries < 50 && !done; tries++) {
      int v = (int)(rng() % ri.instance.nvars);
      int fv = freq[v];
      int min_total = opts.even ? 8 : 6;
      if (fv < min_total) continue;
      int keep = opts.even ? 4 : 3;
      int arc = (int)(rng() % fv);
      auto split = split_variable(ri, v, arc, keep);
      if (split) {
        ri = std::move(*split);
        done = true;
      }
    }
    if (!done) break;  // no splittable variable; instance stays quadrangulated
  }
  return ri;
}

SatInstance cube4_instance(Variant variant) {
  SatInstance inst;
  inst.nvars = 4;
  inst.variant = variant;
  inst.clauses = {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
  return inst;
}

SatInstance rhombic6_instance(Variant variant) {
  // clauses = cube corners, variables = cube faces; face k touches corner c
  // iff bit (k/2) of c equals k%2
  SatInstance inst;
  inst.nvars = 6;
  inst.variant = variant;
  for (int corner = 0; corner < 8; corner++) {
    std::vector<int> clause;
    for (int axis = 0; axis < 3; axis++) {
      int side = (corner >> axis) & 1;
      clause.push_back(2 * axis + side + 1);
    }
    std::sort(clause.begin(), clause.end());
    inst.clauses.push_back(clause);
  }
  return inst;
}

Graph prism_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; i++) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph durer_graph() {
  // generalized Petersen graph GP(6,2)
  Graph g(12);
  for (int i = 0; i < 6; i++) {
    g.add_edge(i, (i + 1) % 6);
    g.add_edge(i, 6 + i);
    g.add_edge(6 + i, 6 + (i + 2) % 6);
  }
  return g;
}

Graph truncated_tetrahedron() {
  Graph g(12);
  // four triangles, one per tetrahedron corner, joined by a perfect matching
  for (int t = 0; t < 4; t++) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t + 1, 3 * t + 2);
    g.add_edge(3 * t, 3 * t + 2);
  }
  g.add_edge(0, 3);
  g.add_edge(1, 6);
  g.add_edge(2, 9);
  g.add_edge(4, 7);
  g.add_edge(5, 10);
  g.add_edge(8, 11);
  return g;
}

Graph bridged_cubic_10() {
  // two K4-minus-an-edge blocks, each capped by a degree-2 apex; the apexes
  // are joined by a bridge
  Graph g(10);
  auto block = [&](int base, int apex) {
    int a = base, b = base + 1, x = base + 2, y = base + 3;
    g.add_edge(a, x);
    g.add_edge(a, y);
    g.add_edge(b, x);
    g.add_edge(b, y);
    g.add_edge(x, y);
    g.add_edge(apex, a);
    g.add_edge(apex, b);
  };
  block(0, 8);
  block(4, 9);
  g.add_edge(8, 9);
  return g;
}

Graph two_connected_cubic_8() {
  // two K4-minus-an-edge blocks joined by two disjoint edges
  Graph g(8);
  auto block = [&](int base) {
    int a = base, b = base + 1, x = base + 2, y = base + 3;
    g.add_edge(a, x);
    g.add_edge(a, y);
    g.add_edge(b, x);
    g.add_edge(b, y);
    g.add_edge(x, y);
  };
  block(0);
  block(4);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  return g;
}

void enumerate_labeled_cubic(int n, const std::function<void(const Graph&)>& cb) {
  if (n % 2 == 1 || n < 4) return;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) pairs.emplace_back(u, v);
  std::vector<int> deg(n, 0);
  std::vector<char> take(pairs.size(), 0);

  std::function<void(size_t, int)> rec = [&](size_t i, int chosen) {
    if (chosen == 3 * n / 2) {
      Graph g(n);
      for (size_t j = 0; j < pairs.size(); j++)
        if (take[j]) g.add_edge(pairs[j].first, pairs[j].second);
      cb(g);
      return;
    }
    if (i == pairs.size()) return;
    auto [u, v] = pairs[i];
    // vertices strictly before u have no remaining pairs
    for (int w = 0; w < u; w++)
      if (deg[w] != 3) return;
    if (deg[u] < 3 && deg[v] < 3) {
      take[i] = 1;
      deg[u]++;
      deg[v]++;
      rec(i + 1, chosen + 1);
      take[i] = 0;
      deg[u]--;
      deg[v]--;
    }
    rec(i + 1, chosen);
  };
  rec(0, 0);
}

std::vector<Graph> cubic_3connected_planar_upto(int max_n) {
  std::vector<Graph> result;
  std::vector<CubicGrowth> frontier;
  frontier.push_back(CubicGrowth::from_embedding(compute_embedding(complete_graph(4)), false));
  result.push_back(complete_graph(4));

  while (!frontier.empty()) {
    std::vector<CubicGrowth> next;
    for (const auto& h : frontier) {
      if (h.vertex_count() + 2 > max_n) continue;
      for (int f = 0; f < (int)h.face_walks.size(); f++) {
        const auto& w = h.face_walks[f];
        if (w.empty()) continue;
        for (int i = 0; i < (int)w.size(); i++)
          for (int j = i + 1; j < (int)w.size(); j++) {
            CubicGrowth h2 = h;
            h2.insert_edge(f, i, j);
            Graph g2(h2.vertex_count());
            for (int v = 0; v < g2.n; v++)
              for (int nb : h2.rot[v])
                if (v < nb) g2.add_edge(v, nb);
            bool fresh = true;
            for (const auto& old : result)
              if (old.n == g2.n && isomorphic(old, g2)) {
                fresh = false;
                break;
              }
            if (fresh) {
              result.push_back(g2);
              next.push_back(std::move(h2));
            }
          }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const Graph& a, const Graph& b) { return a.n < b.n; });
  return result;
}

}  // namespace ppsat
