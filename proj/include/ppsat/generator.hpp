#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ppsat/embedding.hpp"
#include "ppsat/graph.hpp"
#include "ppsat/sat.hpp"

namespace ppsat {

/// Incrementally grown embedded cubic planar graph. Growth steps keep the
/// graph simple, cubic, planar and 3-connected.
struct CubicGrowth {
  std::vector<std::vector<int>> rot;
  std::unordered_map<uint64_t, int> face_of_dir;
  std::vector<std::vector<int>> face_walks;  // dead faces have empty walks
  std::vector<int> color;                    // 2-coloring when grown bipartite

  int vertex_count() const { return (int)rot.size(); }
  int live_face_count() const;
  Embedding to_embedding() const;

  static CubicGrowth from_embedding(const Embedding& e, bool bipartite);

  /// Subdivides two distinct edges of one face and joins the new vertices.
  void insert_edge(int face, int pos1, int pos2);

  /// Bipartite variant: double-subdivides two co-oriented edges of one face
  /// and joins them with two nested chords (a ladder rung).
  void insert_ladder(int face, int pos1, int pos2);
};

/// Radial (vertex-face incidence) instance of an embedded cubic planar
/// 3-connected graph: clauses are the vertices, variables the faces. The
/// resulting SAT graph is planar, 3-connected and quadrangulated.
struct RadialInstance {
  SatInstance instance;
  std::vector<std::vector<int>> rotation;  // SAT-graph rotation block
};

RadialInstance radial_instance(const CubicGrowth& h, Variant variant);

/// Splits variable `var` of frequency >= 6 into two variables holding
/// `keep` and freq-keep consecutive clauses (both >= 3); merges two quad
/// faces into one face of length 8. Returns nullopt when the split breaks
/// 3-connectivity.
std::optional<RadialInstance> split_variable(const RadialInstance& ri, int var, int arc_start,
                                             int keep);

struct RandomQuadOptions {
  int nvars = 8;
  uint64_t seed = 1;
  int splits = 0;       // non-quadrangulating variable splits to attempt
  bool even = false;    // grow bipartite (even variable frequencies)
  Variant variant = Variant::Nae;
};

/// Seed-deterministic random positive planar 3-connected instance.
RadialInstance random_quad_instance(const RandomQuadOptions& opts);

// --- fixed fixtures and families ---

SatInstance cube4_instance(Variant variant);      // 4 clauses over 4 variables; SAT graph = Q3
SatInstance rhombic6_instance(Variant variant);   // radial of the cube; 8 clauses, 6 variables

Graph prism_graph(int k);
Graph durer_graph();
Graph truncated_tetrahedron();
Graph bridged_cubic_10();        // cubic planar with a bridge
Graph two_connected_cubic_8();   // cubic planar, 2- but not 3-connected

/// All labeled cubic graphs on n vertices (n*3 even, n <= 10 sensible).
void enumerate_labeled_cubic(int n, const std::function<void(const Graph&)>& cb);

/// All 3-connected cubic planar graphs with at most max_n vertices, up to
/// isomorphism, generated from K4 by face edge insertions.
std::vector<Graph> cubic_3connected_planar_upto(int max_n);

}  // namespace ppsat
