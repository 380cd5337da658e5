#pragma once

#include <array>
#include <set>
#include <vector>

#include "ppsat/embedding.hpp"

namespace ppsat {

/// An embedded disjoint union of cycles, carried inside a host embedding so
/// that face containment stays purely combinatorial: the regions of the
/// plane cut out by the cycles are unions of host faces, merged across the
/// edges of the host that do not belong to the cycle collection.
struct CycleCollection {
  std::vector<std::vector<int>> cycles;     // vertex sequences, walk order
  int region_count = 0;
  std::vector<int> region_of_face;          // host face id -> region id
  int outer_region = 0;
  // per cycle: the two regions flanking it (order unspecified)
  std::vector<std::array<int, 2>> cycle_sides;
};

/// Build the collection spanned by the host edges NOT in `removed_edges`.
/// Every vertex must have exactly two kept incident edges
/// (NotCycleCollection otherwise).
CycleCollection cycle_collection(const Embedding& host, const FaceSet& host_faces,
                                 const std::set<uint64_t>& removed_edges);

struct GenealogicalTree {
  int root = 0;                       // region id of the outer face's region
  std::vector<int> parent;            // per region, -1 at root
  std::vector<int> depth;
  std::vector<int> parent_cycle;      // cycle index crossed on the parent edge, -1 at root
};

/// Containment tree of the regions, rooted at the region holding the host's
/// outer face. Parent and child regions share one cycle on their boundaries.
GenealogicalTree genealogical_tree(const CycleCollection& cc);

/// Number of cycles that enclose the given region, counted independently of
/// the tree: per cycle, merge all host faces across non-cycle edges and test
/// which side of the cycle the region's faces land on. Test oracle.
int enclosing_cycle_count(const Embedding& host, const FaceSet& host_faces,
                          const CycleCollection& cc, int region);

}  // namespace ppsat
