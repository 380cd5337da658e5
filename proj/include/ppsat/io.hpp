#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppsat/graph.hpp"
#include "ppsat/sat.hpp"

namespace ppsat {

/// Parsed ".pg" graph file: `g <V> <E>` header, `e <u> <v>` edges (0-based),
/// optional `r <v> <d> <n1>..<nd>` rotations and `outer <face>` line.
struct PgFile {
  Graph graph;
  std::optional<std::vector<std::vector<int>>> rotation;
  std::optional<int> outer_face;
};

PgFile parse_pg(const std::string& text);
std::string write_pg(const Graph& g, const std::vector<std::vector<int>>* rotation = nullptr,
                     std::optional<int> outer = std::nullopt);

/// Parsed ".ppsat" instance: `p ppsat <nvars> <nclauses> <variant>` header,
/// `e <lit> [<lit> [<lit>]]` clause lines (1-based, negatives only for sat3),
/// optional rotation block in ".pg" convention over vertices var i -> i-1,
/// clause j -> nvars + j.
struct PpsatFile {
  SatInstance instance;
  std::optional<std::vector<std::vector<int>>> rotation;
  std::optional<int> outer_face;
};

PpsatFile parse_ppsat(const std::string& text);
std::string write_ppsat(const SatInstance& inst,
                        const std::vector<std::vector<int>>* rotation = nullptr,
                        std::optional<int> outer = std::nullopt);

/// Assignment line `v <±1> <±2> ... 0`.
Assignment parse_assignment(const std::string& text, int nvars);
std::string write_assignment(const Assignment& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ppsat
