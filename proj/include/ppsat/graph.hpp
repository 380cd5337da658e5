#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ppsat {

/// Simple undirected graph with dense 0-based vertex ids.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  explicit Graph(int vertex_count) : n(vertex_count) {}

  int add_vertex() { return n++; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}

inline uint64_t dir_key(int u, int v) {
  return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}

std::vector<std::vector<int>> adjacency(const Graph& g);
std::vector<int> degrees(const Graph& g);

/// Throws Error(InvalidArgument) on self-loops, parallel edges, or out-of-range ids.
void validate_graph(const Graph& g);

bool is_connected(const Graph& g);
bool connected_after_deleting(const Graph& g, const std::vector<int>& removed);

/// 2-coloring if the graph is bipartite (color per vertex, 0/1), otherwise nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Exact isomorphism test by degree refinement plus backtracking; intended for
/// small graphs (tests and dual-of-dual checks).
bool isomorphic(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph cube_graph();  // Q3

}  // namespace ppsat
