#pragma once

#include <vector>

#include "ppsat/embedding.hpp"
#include "ppsat/graph.hpp"

namespace ppsat {

/// Brute force over vertex subsets of size < k (k in {1,2,3}): true iff
/// |V| > k and no deletion of k-1 vertices disconnects the graph.
bool is_k_connected(const Graph& g, int k);

std::vector<int> articulation_points(const Graph& g);
std::vector<std::pair<int, int>> bridges(const Graph& g);
bool is_biconnected(const Graph& g);

/// Separation pairs of a 2-connected plane graph, found by face-sharing
/// counts: non-adjacent pairs on >= 2 common faces and adjacent pairs on
/// >= 3 are the only candidates; each candidate is then verified by an
/// explicit deletion test.
std::vector<std::pair<int, int>> separation_pairs_plane(const Embedding& e, const FaceSet& faces);

/// 3-connectivity of a connected plane graph via the face-sharing criterion.
bool is_three_connected_plane(const Embedding& e, const FaceSet& faces);

/// Every inner vertex has 3 vertex-disjoint paths to outer vertices
/// (computed by unit-capacity max-flow per inner vertex).
bool is_internally_3_connected(const Embedding& e);

/// Max number of vertex-disjoint paths between non-adjacent u,v, capped at `cap`.
int vertex_disjoint_paths(const Graph& g, int u, int v, int cap);

/// Menger-based oracle: min over vertex pairs of disjoint-path counts
/// (independent of the deletion-based is_k_connected; used for testing).
bool k_connected_flow_oracle(const Graph& g, int k);

}  // namespace ppsat
