#include "ppsat/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ppsat/errors.hpp"

namespace ppsat {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct LineReader {
  std::vector<std::pair<int, std::vector<std::string>>> lines;  // (line no, tokens)

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      no++;
      std::istringstream ls(raw);
      std::vector<std::string> tok;
      std::string t;
      while (ls >> t) tok.push_back(t);
      if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') continue;
      lines.emplace_back(no, std::move(tok));
    }
  }
};

long parse_int(const std::string& s, int line) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') parse_fail(line, "expected integer, got '" + s + "'");
  return v;
}

// shared rotation-block state for .pg and .ppsat
struct RotationBlock {
  std::vector<std::vector<int>> rot;
  std::vector<char> seen;
  bool any = false;

  explicit RotationBlock(int n) : rot(n), seen(n, 0) {}

  void add(const std::vector<std::string>& tok, int line, int n) {
    any = true;
    if (tok.size() < 3) parse_fail(line, "rotation line needs 'r <v> <d> <neighbors...>'");
    long v = parse_int(tok[1], line);
    long d = parse_int(tok[2], line);
    if (v < 0 || v >= n) parse_fail(line, "rotation vertex out of range");
    if (d < 0 || (long)tok.size() != 3 + d) parse_fail(line, "rotation degree does not match neighbor count");
    if (seen[v]) parse_fail(line, "duplicate rotation for vertex " + std::to_string(v));
    seen[v] = 1;
    for (long i = 0; i < d; i++) {
      long w = parse_int(tok[3 + i], line);
      if (w < 0 || w >= n) parse_fail(line, "rotation neighbor out of range");
      rot[v].push_back((int)w);
    }
  }

  std::optional<std::vector<std::vector<int>>> finish(int line) const {
    if (!any) return std::nullopt;
    for (int v = 0; v < (int)seen.size(); v++)
      if (!seen[v]) parse_fail(line, "rotation block misses vertex " + std::to_string(v));
    return rot;
  }
};

}  // namespace

PgFile parse_pg(const std::string& text) {
  LineReader rd(text);
  if (rd.lines.empty()) parse_fail(1, "empty graph file");
  auto& [hline, htok] = rd.lines[0];
  if (htok.size() != 3 || htok[0] != "g") parse_fail(hline, "expected header 'g <V> <E>'");
  long n = parse_int(htok[1], hline), m = parse_int(htok[2], hline);
  if (n < 0 || m < 0) parse_fail(hline, "negative counts");
  PgFile out;
  out.graph.n = (int)n;
  RotationBlock rb((int)n);
  int last_line = hline;
  std::set<uint64_t> seen_edges;
  for (size_t i = 1; i < rd.lines.size(); i++) {
    auto& [line, tok] = rd.lines[i];
    last_line = line;
    if (tok[0] == "e") {
      if (tok.size() != 3) parse_fail(line, "expected 'e <u> <v>'");
      long u = parse_int(tok[1], line), v = parse_int(tok[2], line);
      if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line, "edge endpoint out of range");
      if (u == v) parse_fail(line, "self-loop");
      if (!seen_edges.insert(edge_key((int)u, (int)v)).second) parse_fail(line, "duplicate edge");
      out.graph.add_edge((int)u, (int)v);
    } else if (tok[0] == "r") {
      rb.add(tok, line, (int)n);
    } else if (tok[0] == "outer") {
      if (tok.size() != 2) parse_fail(line, "expected 'outer <face>'");
      if (out.outer_face) parse_fail(line, "duplicate outer line");
      out.outer_face = (int)parse_int(tok[1], line);
    } else {
      parse_fail(line, "unrecognized line '" + tok[0] + "'");
    }
  }
  if (out.graph.edge_count() != (int)m)
    parse_fail(last_line, "header announced " + std::to_string(m) + " edges, found " +
                              std::to_string(out.graph.edge_count()));
  out.rotation = rb.finish(last_line);
  return out;
}

std::string write_pg(const Graph& g, const std::vector<std::vector<int>>* rotation,
                     std::optional<int> outer) {
  std::ostringstream out;
  out << "g " << g.n << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
  if (rotation) {
    for (int v = 0; v < g.n; v++) {
      out << "r " << v << " " << (*rotation)[v].size();
      for (int w : (*rotation)[v]) out << " " << w;
      out << "\n";
    }
  }
  if (outer) out << "outer " << *outer << "\n";
  return out.str();
}

PpsatFile parse_ppsat(const std::string& text) {
  LineReader rd(text);
  if (rd.lines.empty()) parse_fail(1, "empty instance file");
  auto& [hline, htok] = rd.lines[0];
  if (htok.size() != 5 || htok[0] != "p" || htok[1] != "ppsat")
    parse_fail(hline, "expected header 'p ppsat <nvars> <nclauses> <variant>'");
  long nvars = parse_int(htok[2], hline), ncl = parse_int(htok[3], hline);
  if (nvars <= 0 || ncl < 0) parse_fail(hline, "bad variable/clause counts");
  Variant variant;
  if (htok[4] == "sat3") variant = Variant::Sat3;
  else if (htok[4] == "nae") variant = Variant::Nae;
  else if (htok[4] == "1in3") variant = Variant::OneInThree;
  else parse_fail(hline, "unknown variant '" + htok[4] + "' (want sat3|nae|1in3)");

  PpsatFile out;
  out.instance.nvars = (int)nvars;
  out.instance.variant = variant;
  const int total_vertices = (int)(nvars + ncl);
  RotationBlock rb(total_vertices);
  int last_line = hline;
  for (size_t i = 1; i < rd.lines.size(); i++) {
    auto& [line, tok] = rd.lines[i];
    last_line = line;
    if (tok[0] == "e") {
      if (tok.size() < 2 || tok.size() > 4) parse_fail(line, "clause needs 1 to 3 literals");
      std::vector<int> clause;
      std::set<int> vars;
      for (size_t j = 1; j < tok.size(); j++) {
        long lit = parse_int(tok[j], line);
        if (lit == 0 || std::labs(lit) > nvars) parse_fail(line, "literal out of range");
        if (lit < 0 && variant != Variant::Sat3)
          parse_fail(line, "negative literal is only legal for variant sat3");
        if (!vars.insert((int)std::labs(lit)).second)
          parse_fail(line, "duplicate variable in clause");
        clause.push_back((int)lit);
      }
      out.instance.clauses.push_back(std::move(clause));
    } else if (tok[0] == "r") {
      rb.add(tok, line, total_vertices);
    } else if (tok[0] == "outer") {
      if (tok.size() != 2) parse_fail(line, "expected 'outer <face>'");
      if (out.outer_face) parse_fail(line, "duplicate outer line");
      out.outer_face = (int)parse_int(tok[1], line);
    } else {
      parse_fail(line, "unrecognized line '" + tok[0] + "'");
    }
  }
  if (out.instance.nclauses() != (int)ncl)
    parse_fail(last_line, "header announced " + std::to_string(ncl) + " clauses, found " +
                              std::to_string(out.instance.nclauses()));
  validate_instance(out.instance);
  out.rotation = rb.finish(last_line);
  return out;
}

std::string write_ppsat(const SatInstance& inst, const std::vector<std::vector<int>>* rotation,
                        std::optional<int> outer) {
  std::ostringstream out;
  out << "p ppsat " << inst.nvars << " " << inst.nclauses() << " " << variant_name(inst.variant)
      << "\n";
  for (const auto& cl : inst.clauses) {
    out << "e";
    for (int lit : cl) out << " " << lit;
    out << "\n";
  }
  if (rotation) {
    for (int v = 0; v < (int)rotation->size(); v++) {
      out << "r " << v << " " << (*rotation)[v].size();
      for (int w : (*rotation)[v]) out << " " << w;
      out << "\n";
    }
  }
  if (outer) out << "outer " << *outer << "\n";
  return out.str();
}

Assignment parse_assignment(const std::string& text, int nvars) {
  LineReader rd(text);
  if (rd.lines.empty()) parse_fail(1, "empty assignment file");
  Assignment a(nvars, 0);
  std::vector<char> seen(nvars, 0);
  bool got_v = false;
  for (auto& [line, tok] : rd.lines) {
    if (tok[0] != "v") parse_fail(line, "expected 'v <lits> 0'");
    if (got_v) parse_fail(line, "multiple assignment lines");
    got_v = true;
    bool terminated = false;
    for (size_t j = 1; j < tok.size(); j++) {
      long lit = parse_int(tok[j], line);
      if (lit == 0) {
        if (j + 1 != tok.size()) parse_fail(line, "tokens after terminating 0");
        terminated = true;
        break;
      }
      if (std::labs(lit) > nvars) parse_fail(line, "literal out of range");
      int var = (int)std::labs(lit) - 1;
      if (seen[var]) parse_fail(line, "variable " + std::to_string(var + 1) + " assigned twice");
      seen[var] = 1;
      a[var] = lit > 0;
    }
    if (!terminated) parse_fail(line, "assignment line misses terminating 0");
  }
  if (!got_v) parse_fail(1, "no 'v' line");
  for (int v = 0; v < nvars; v++)
    if (!seen[v]) parse_fail(1, "assignment is not total: variable " + std::to_string(v + 1) + " missing");
  return a;
}

std::string write_assignment(const Assignment& a) {
  std::ostringstream out;
  out << "v";
  for (size_t v = 0; v < a.size(); v++) out << " " << (a[v] ? "" : "-") << (v + 1);
  out << " 0\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write '" + path + "'");
  out << content;
}

}  // namespace ppsat
