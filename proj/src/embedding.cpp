#include "ppsat/embedding.hpp"

#include <algorithm>
#include <set>

#include "ppsat/errors.hpp"

namespace ppsat {

FaceSet trace_faces(const Embedding& e) {
  FaceSet fs;
  const int n = e.g.n;
  // position of u within rot[v], for O(1) successor lookups
  std::unordered_map<uint64_t, int> pos;
  pos.reserve(e.g.edges.size() * 2 + 1);
  for (int v = 0; v < n; v++)
    for (int i = 0; i < (int)e.rot[v].size(); i++) pos[dir_key(v, e.rot[v][i])] = i;

  fs.face_of_dir.reserve(e.g.edges.size() * 2 + 1);
  for (int u = 0; u < n; u++) {
    for (int nb : e.rot[u]) {
      if (fs.face_of_dir.count(dir_key(u, nb))) continue;
      int face_id = fs.face_count();
      std::vector<int> walk;
      int a = u, b = nb;
      do {
        fs.face_of_dir[dir_key(a, b)] = face_id;
        walk.push_back(a);
        const auto& rb = e.rot[b];
        int i = pos.at(dir_key(b, a));
        int c = rb[(i + 1) % rb.size()];
        a = b;
        b = c;
      } while (!(a == u && b == nb));
      fs.walks.push_back(std::move(walk));
    }
  }
  return fs;
}

void validate_embedding(const Embedding& e) {
  if ((int)e.rot.size() != e.g.n)
    fail(ErrorKind::InvalidArgument, "rotation size does not match vertex count");
  auto deg = degrees(e.g);
  std::set<uint64_t> edge_set;
  for (const auto& [u, v] : e.g.edges) edge_set.insert(edge_key(u, v));
  for (int v = 0; v < e.g.n; v++) {
    if ((int)e.rot[v].size() != deg[v])
      fail(ErrorKind::InvalidArgument, "rotation at vertex " + std::to_string(v) +
                                           " does not list every incident edge exactly once");
    std::set<int> seen;
    for (int w : e.rot[v]) {
      if (!edge_set.count(edge_key(v, w)))
        fail(ErrorKind::InvalidArgument,
             "rotation at vertex " + std::to_string(v) + " lists non-edge to " + std::to_string(w));
      if (!seen.insert(w).second)
        fail(ErrorKind::InvalidArgument,
             "rotation at vertex " + std::to_string(v) + " repeats neighbor " + std::to_string(w));
    }
  }
  // Disjoint embedded pieces do not determine which face of one piece holds
  // another, so an Embedding is always of a connected graph; cycle
  // collections carry their nesting through a host embedding instead.
  if (!is_connected(e.g)) fail(ErrorKind::NotConnected, "embedding of a disconnected graph");
  FaceSet fs = trace_faces(e);
  long long euler = (long long)e.g.n - (long long)e.g.edges.size() + fs.face_count();
  if (euler != 2)
    fail(ErrorKind::NonPlanar, "rotation system has genus > 0 (V-E+F = " + std::to_string(euler) +
                                   ", expected 2)");
  if (e.outer_face < 0 || e.outer_face >= fs.face_count())
    fail(ErrorKind::InvalidArgument, "outer face index out of range");
}

std::vector<int> canonical_walk(const std::vector<int>& walk) {
  const int L = (int)walk.size();
  if (L == 0) return {};
  std::vector<int> best;
  for (int dir = 0; dir < 2; dir++) {
    for (int s = 0; s < L; s++) {
      if (walk[s] != *std::min_element(walk.begin(), walk.end())) continue;
      std::vector<int> cand(L);
      for (int i = 0; i < L; i++) {
        int idx = dir == 0 ? (s + i) % L : (s - i % L + L) % L;
        cand[i] = walk[idx];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

int choose_outer_face(const FaceSet& faces) {
  int best = -1;
  std::vector<int> best_walk;
  for (int f = 0; f < faces.face_count(); f++) {
    const auto& w = faces.walks[f];
    if (best < 0 || (int)w.size() > (int)faces.walks[best].size()) {
      best = f;
      best_walk = canonical_walk(w);
    } else if ((int)w.size() == (int)faces.walks[best].size()) {
      auto cw = canonical_walk(w);
      if (cw < best_walk) {
        best = f;
        best_walk = std::move(cw);
      }
    }
  }
  return best;
}

void rotation_insert_after(Embedding& e, int v, int after, int nb) {
  auto& r = e.rot[v];
  auto it = std::find(r.begin(), r.end(), after);
  if (it == r.end())
    fail(ErrorKind::InvalidArgument, "rotation_insert_after: " + std::to_string(after) +
                                         " not adjacent to " + std::to_string(v));
  r.insert(it + 1, nb);
}

DualResult dual_graph(const Embedding& e, const FaceSet& faces) {
  DualResult res;
  res.dual.n = faces.face_count();
  std::set<uint64_t> seen_pairs;
  for (const auto& [u, v] : e.g.edges) {
    int f1 = faces.face_of(u, v);
    int f2 = faces.face_of(v, u);
    if (f1 == f2)
      fail(ErrorKind::DualNotSimple, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " has the same face on both sides (bridge)");
    if (!seen_pairs.insert(edge_key(f1, f2)).second)
      fail(ErrorKind::DualNotSimple, "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                                         " share more than one edge");
    res.dual.add_edge(f1, f2);
    res.dual_edge_faces.emplace_back(f1, f2);
  }
  return res;
}

Embedding dual_embedding(const Embedding& e, const FaceSet& faces, const DualResult& d) {
  Embedding de;
  de.g = d.dual;
  de.rot.assign(d.dual.n, {});
  for (int f = 0; f < faces.face_count(); f++) {
    const auto& w = faces.walks[f];
    const int L = (int)w.size();
    for (int i = 0; i < L; i++) {
      int u = w[i], v = w[(i + 1) % L];
      de.rot[f].push_back(faces.face_of(v, u));
    }
  }
  de.outer_face = 0;
  return de;
}

}  // namespace ppsat
