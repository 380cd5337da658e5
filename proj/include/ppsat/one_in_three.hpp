#pragma once

#include <vector>

#include "ppsat/embedding.hpp"
#include "ppsat/nae.hpp"
#include "ppsat/sat.hpp"

namespace ppsat {

/// Dual of the saturated clause graph, with the variable-face back-references.
/// Valid only when every dual vertex has even degree (even triangulation).
struct EvenTriangulation {
  SaturatedClauseGraph csg;
  Graph dual;                    // one vertex per face of C_s
  std::vector<int> variable_of;  // dual vertex -> variable, or -1
};

/// C_s plus dual for a positive planar 3-connected 1-in-3 instance whose
/// variables all have even frequency. Errors: OddFrequencyVariable (lists
/// offenders), CsNotThreeConnected and DualNotEven (falsification signals).
EvenTriangulation build_even_triangulation(const SatInstance& inst,
                                           const std::vector<std::vector<int>>* rotation = nullptr);

using FaceColoring = std::vector<int>;  // dual vertex -> color in {0,1,2}

/// Proper 3-coloring by triangle propagation, canonicalized: dual vertex 0
/// gets color 0 and its smallest neighbor color 1. NoColoring is a
/// falsification signal on valid even triangulations.
FaceColoring three_color(const EvenTriangulation& t);

struct OneInThreeSolution {
  Assignment assignment;
  EvenTriangulation triangulation;
  FaceColoring coloring;
};

/// Theorem-4 pipeline: 3-color the dual even triangulation and set the
/// variables on `true_class`-colored faces to true.
OneInThreeSolution solve_1in3_even(const SatInstance& inst,
                                   const std::vector<std::vector<int>>* rotation = nullptr,
                                   int true_class = 0);

}  // namespace ppsat
