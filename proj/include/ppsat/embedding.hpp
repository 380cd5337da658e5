#pragma once

#include <unordered_map>
#include <vector>

#include "ppsat/graph.hpp"

namespace ppsat {

/// Combinatorial planar embedding: a rotation system plus a chosen outer face.
/// rot[v] lists the neighbors of v in cyclic order. Faces are the orbits of
/// the successor rule: the directed edge (u,v) is followed by (v,w) where w
/// comes right after u in rot[v].
struct Embedding {
  Graph g;
  std::vector<std::vector<int>> rot;
  int outer_face = 0;
};

struct FaceSet {
  // walks[f] = vertex sequence x0..x(L-1); directed edges (x_i, x_{i+1 mod L}).
  std::vector<std::vector<int>> walks;
  std::unordered_map<uint64_t, int> face_of_dir;  // dir_key(u,v) -> face id

  int face_count() const { return static_cast<int>(walks.size()); }
  int face_of(int u, int v) const { return face_of_dir.at(dir_key(u, v)); }
};

/// Deterministic face traversal (vertices ascending, rotation order within).
FaceSet trace_faces(const Embedding& e);

/// Genus-0 check: V - E + F == 1 + #components. Throws on malformed rotations.
void validate_embedding(const Embedding& e);

/// Canonical form of a closed walk: rotated to start at its minimum vertex,
/// direction chosen lexicographically.
std::vector<int> canonical_walk(const std::vector<int>& walk);

/// Face of maximum length; ties broken by smallest canonical boundary walk.
int choose_outer_face(const FaceSet& faces);

/// Insert `nb` into rot[v] immediately after existing neighbor `after`.
void rotation_insert_after(Embedding& e, int v, int after, int nb);

struct DualResult {
  Graph dual;                                 // one vertex per face
  std::vector<std::pair<int, int>> dual_edge_faces;  // per primal edge: (face,face)
};

/// Dual graph of a connected embedding. Throws DualNotSimple when a face pair
/// shares two edges or a face is adjacent to itself (bridge).
DualResult dual_graph(const Embedding& e, const FaceSet& faces);

/// Rotation system of the dual: dual vertex f's neighbors in boundary order.
Embedding dual_embedding(const Embedding& e, const FaceSet& faces, const DualResult& d);

}  // namespace ppsat
