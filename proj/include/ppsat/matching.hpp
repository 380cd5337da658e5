#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ppsat/graph.hpp"

namespace ppsat {

/// Maximum cardinality matching (general graphs); mate[v] = partner or -1.
std::vector<int> maximum_matching(const Graph& g);

/// Enumerates every perfect matching (as edge lists) until the callback
/// returns false. Exponential; for small test graphs.
void enumerate_perfect_matchings(const Graph& g,
                                 const std::function<bool(const std::vector<std::pair<int, int>>&)>& cb);

}  // namespace ppsat
