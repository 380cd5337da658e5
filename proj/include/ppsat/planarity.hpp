#pragma once

#include <optional>

#include "ppsat/embedding.hpp"
#include "ppsat/graph.hpp"

namespace ppsat {

bool is_planar(const Graph& g);

/// Planar embedding of a connected graph, outer face chosen canonically
/// (longest face, lexicographic tie-break). Throws NonPlanar.
Embedding compute_embedding(const Graph& g);

/// Embedding from explicit rotations; validates genus 0.
Embedding embedding_from_rotation(const Graph& g, std::vector<std::vector<int>> rot,
                                  std::optional<int> outer = std::nullopt);

}  // namespace ppsat
