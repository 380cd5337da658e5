#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppsat/connectivity.hpp"
#include "ppsat/errors.hpp"
#include "ppsat/gadgets.hpp"
#include "ppsat/generator.hpp"
#include "ppsat/io.hpp"
#include "ppsat/nae.hpp"
#include "ppsat/one_in_three.hpp"
#include "ppsat/reduction.hpp"

using namespace ppsat;

namespace {

// exit codes: 0 solved/valid, 1 no solution, 2 input error, 3 falsification
constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kInputError = 2;
constexpr int kFalsification = 3;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Report {
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;

  void set(const std::string& k, const std::string& v) {
    if (!kv.count(k)) order.push_back(k);
    kv[k] = v;
  }
  void set(const std::string& k, long long v) { set(k, std::to_string(v)); }

  void emit() const {
    for (const auto& k : order) std::cerr << k << "=" << kv.at(k) << "\n";
  }
};

std::string digest_of(const std::string& text) {
  std::ostringstream os;
  os << "fnv1a:" << std::hex << fnv1a(text);
  return os.str();
}

void out_or_stdout(const std::string& path, const std::string& content) {
  if (path.empty()) std::cout << content;
  else write_file(path, content);
}

void dump_nae_stages(const std::string& dir, const NaeSolution& sol) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  write_file(dir + "/cs.pg",
             write_pg(sol.csg.emb.g, &sol.csg.emb.rot, sol.csg.emb.outer_face));
  std::ostringstream mtxt;
  for (auto [u, v] : sol.matching) mtxt << "e " << u << " " << v << "\n";
  write_file(dir + "/matching.txt", mtxt.str());
  Graph cprime(sol.csg.emb.g.n);
  std::set<uint64_t> matched;
  for (auto [u, v] : sol.matching) matched.insert(edge_key(u, v));
  for (auto [u, v] : sol.csg.emb.g.edges)
    if (!matched.count(edge_key(u, v))) cprime.add_edge(u, v);
  write_file(dir + "/cprime.pg", write_pg(cprime));
  std::ostringstream ttxt;
  for (int r = 0; r < (int)sol.tree.parent.size(); r++)
    ttxt << r << " " << sol.tree.parent[r] << "\n";
  write_file(dir + "/tree.txt", ttxt.str());
  std::ostringstream stxt;
  for (size_t c = 0; c < sol.clause_split.size(); c++)
    stxt << "clause " << c + 1 << " split " << sol.clause_split[c][0] << "/"
         << sol.clause_split[c][1] << "\n";
  write_file(dir + "/splits.txt", stxt.str());
}

int map_error(const Error& e, Report& rep) {
  rep.set("outcome", "error");
  rep.set("error", e.what());
  std::cerr << "error: " << e.what() << "\n";
  return is_falsification(e.kind()) ? kFalsification : kInputError;
}

std::vector<std::vector<int>> const* rotation_ptr(const PpsatFile& f) {
  return f.rotation ? &*f.rotation : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive planar satisfiability toolkit"};
  app.require_subcommand(1);

  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    rep.set("wall_ms", (long long)ms);
    rep.emit();
    return code;
  };

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve an instance");
  std::string solve_mode, solve_in, solve_out, solve_dump;
  solve->add_option("--mode", solve_mode, "nae or 1in3-even")->required();
  solve->add_option("-i", solve_in, "instance file (.ppsat)")->required();
  solve->add_option("-o", solve_out, "assignment output file");
  solve->add_option("--dump-stages", solve_dump, "directory for stage dumps");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check an assignment");
  std::string verify_in, verify_assign;
  verify->add_option("-i", verify_in)->required();
  verify->add_option("-a", verify_assign)->required();

  // ---- brute ----
  auto* brute = app.add_subcommand("brute", "brute-force oracle");
  std::string brute_in, brute_out;
  brute->add_option("-i", brute_in)->required();
  brute->add_option("-o", brute_out);

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "reductions");
  auto* reduce_tm = reduce->add_subcommand("two-matching", "cubic graph -> NAE instance");
  std::string red_in, red_out, red_map;
  reduce_tm->add_option("-i", red_in, "graph file (.pg)")->required();
  reduce_tm->add_option("-o", red_out, "instance output")->required();
  reduce_tm->add_option("--map", red_map, "variable<->edge map output")->required();

  // ---- lift ----
  auto* lift = app.add_subcommand("lift", "move solutions across the reduction");
  std::string lift_dir, lift_graph, lift_map, lift_in, lift_out;
  lift->add_option("--direction", lift_dir, "to-matching | to-assignment")->required();
  lift->add_option("--graph", lift_graph, "graph file (.pg)")->required();
  lift->add_option("--map", lift_map, "map file from reduce")->required();
  lift->add_option("-i", lift_in, "assignment (to-matching) or 2-matching (to-assignment)")
      ->required();
  lift->add_option("-o", lift_out);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "instance generators");
  auto* gen_hard = gen->add_subcommand("hardness", "3-SAT -> 1-in-3 hardness instance");
  std::string gh_in, gh_out, gh_prov;
  gen_hard->add_option("-i", gh_in)->required();
  gen_hard->add_option("-o", gh_out)->required();
  gen_hard->add_option("--provenance", gh_prov);

  auto* gen_ring = gen->add_subcommand("ring", "standalone k-ring fragment");
  int gr_k = 3;
  std::string gr_out;
  gen_ring->add_option("-k", gr_k)->required();
  gen_ring->add_option("-o", gr_out);

  auto* gen_vg = gen->add_subcommand("vgadget", "standalone variable gadget");
  int gv_q = 3;
  int gv_rings = 1;
  std::string gv_out;
  gen_vg->add_option("-q", gv_q)->required();
  gen_vg->add_option("--outer-rings", gv_rings, "number of outer rings (0 or 1)");
  gen_vg->add_option("-o", gv_out);

  auto* gen_rq = gen->add_subcommand("random-quad", "random planar 3-connected instance");
  int rq_n = 8;
  uint64_t rq_seed = 1;
  int rq_splits = 0;
  bool rq_even = false;
  std::string rq_out, rq_variant = "nae";
  gen_rq->add_option("-n", rq_n, "number of variables")->required();
  gen_rq->add_option("--seed", rq_seed)->required();
  gen_rq->add_option("--split", rq_splits, "variable splits (non-quadrangulated faces)");
  gen_rq->add_flag("--even", rq_even, "even variable frequencies (bipartite growth)");
  gen_rq->add_option("--variant", rq_variant, "nae | 1in3");
  gen_rq->add_option("-o", rq_out);

  // ---- stats ----
  auto* stats = app.add_subcommand("stats", "structural facts about an instance");
  std::string stats_in;
  stats->add_option("-i", stats_in)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      rep.set("command", "solve");
      rep.set("input", solve_in);
      std::string text = read_file(solve_in);
      rep.set("digest", digest_of(text));
      PpsatFile f = parse_ppsat(text);
      rep.set("variables", f.instance.nvars);
      rep.set("clauses", f.instance.nclauses());
      if (solve_mode == "nae") {
        NaeOptions opts;
        opts.rotation = rotation_ptr(f);
        opts.outer_face = f.outer_face;
        NaeSolution sol = solve_nae(f.instance, opts);
        rep.set("stage.cs.vertices", sol.csg.emb.g.n);
        rep.set("stage.cs.edges", sol.csg.emb.g.edge_count());
        rep.set("stage.cs.faces", sol.csg.faces.face_count());
        rep.set("stage.cycles", (long long)sol.cycles.cycles.size());
        if (!solve_dump.empty()) dump_nae_stages(solve_dump, sol);
        out_or_stdout(solve_out, write_assignment(sol.assignment));
        rep.set("outcome", "solved");
      } else if (solve_mode == "1in3-even") {
        OneInThreeSolution sol = solve_1in3_even(f.instance, rotation_ptr(f));
        rep.set("stage.cs.vertices", sol.triangulation.csg.emb.g.n);
        rep.set("stage.cs.edges", sol.triangulation.csg.emb.g.edge_count());
        rep.set("stage.dual.vertices", sol.triangulation.dual.n);
        if (!solve_dump.empty()) {
          namespace fs = std::filesystem;
          fs::create_directories(solve_dump);
          write_file(solve_dump + "/cs.pg",
                     write_pg(sol.triangulation.csg.emb.g, &sol.triangulation.csg.emb.rot,
                              sol.triangulation.csg.emb.outer_face));
          write_file(solve_dump + "/dual.pg", write_pg(sol.triangulation.dual));
          std::ostringstream ctxt;
          for (int f2 = 0; f2 < sol.triangulation.dual.n; f2++)
            ctxt << "color " << f2 << " " << sol.coloring[f2] + 1 << "\n";
          write_file(solve_dump + "/coloring.txt", ctxt.str());
        }
        out_or_stdout(solve_out, write_assignment(sol.assignment));
        rep.set("outcome", "solved");
      } else {
        fail(ErrorKind::InvalidArgument, "unknown mode '" + solve_mode + "'");
      }
      return finish(kOk);
    }

    if (*verify) {
      rep.set("command", "verify");
      rep.set("input", verify_in);
      std::string text = read_file(verify_in);
      rep.set("digest", digest_of(text));
      PpsatFile f = parse_ppsat(text);
      Assignment a = parse_assignment(read_file(verify_assign), f.instance.nvars);
      bool ok = evaluate(f.instance, a);
      rep.set("outcome", ok ? "valid" : "invalid");
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return finish(ok ? kOk : kNoSolution);
    }

    if (*brute) {
      rep.set("command", "brute");
      rep.set("input", brute_in);
      std::string text = read_file(brute_in);
      rep.set("digest", digest_of(text));
      PpsatFile f = parse_ppsat(text);
      auto a = brute_force(f.instance);
      if (a) {
        out_or_stdout(brute_out, write_assignment(*a));
        rep.set("outcome", "solved");
        return finish(kOk);
      }
      rep.set("outcome", "unsat-oracle");
      std::cout << "unsatisfiable\n";
      return finish(kNoSolution);
    }

    if (*reduce_tm) {
      rep.set("command", "reduce two-matching");
      rep.set("input", red_in);
      std::string text = read_file(red_in);
      rep.set("digest", digest_of(text));
      PgFile pg = parse_pg(text);
      ReductionResult res = reduce_2matching_to_nae(pg.graph);
      write_file(red_out, write_ppsat(res.instance));
      std::ostringstream mp;
      for (int v = 0; v < res.instance.nvars; v++)
        mp << "m " << v + 1 << " " << res.var_edge[v].first << " " << res.var_edge[v].second
           << "\n";
      write_file(red_map, mp.str());
      rep.set("outcome", "solved");
      rep.set("stage.reduced.variables", res.instance.nvars);
      rep.set("stage.reduced.clauses", res.instance.nclauses());
      return finish(kOk);
    }

    if (*lift) {
      rep.set("command", "lift");
      rep.set("input", lift_in);
      PgFile pg = parse_pg(read_file(lift_graph));
      rep.set("digest", digest_of(read_file(lift_in)));
      ReductionResult red = reduce_2matching_to_nae(pg.graph);
      {  // check the provided map matches the canonical reduction
        std::istringstream in(read_file(lift_map));
        std::string tok;
        int var, u, v;
        int count = 0;
        while (in >> tok >> var >> u >> v) {
          if (tok != "m") fail(ErrorKind::Parse, "bad map line");
          if (var < 1 || var > red.instance.nvars) fail(ErrorKind::Parse, "map variable range");
          auto [eu, ev] = red.var_edge[var - 1];
          if (edge_key(u, v) != edge_key(eu, ev))
            fail(ErrorKind::Parse, "map does not match the reduction of this graph");
          count++;
        }
        if (count != red.instance.nvars) fail(ErrorKind::Parse, "map is incomplete");
      }
      if (lift_dir == "to-matching") {
        Assignment a = parse_assignment(read_file(lift_in), red.instance.nvars);
        TwoMatching tm = lift_nae_to_2matching(pg.graph, red, a);
        std::ostringstream os;
        for (auto [u, v] : tm.edges) os << "e " << u << " " << v << "\n";
        out_or_stdout(lift_out, os.str());
      } else if (lift_dir == "to-assignment") {
        TwoMatching tm;
        std::istringstream in(read_file(lift_in));
        std::string tok;
        int u, v;
        while (in >> tok >> u >> v) {
          if (tok != "e") fail(ErrorKind::Parse, "bad 2-matching line");
          tm.edges.emplace_back(u, v);
        }
        Assignment a = lift_2matching_to_nae(pg.graph, red, tm);
        out_or_stdout(lift_out, write_assignment(a));
      } else {
        fail(ErrorKind::InvalidArgument, "unknown direction '" + lift_dir + "'");
      }
      rep.set("outcome", "solved");
      return finish(kOk);
    }

    if (*gen_hard) {
      rep.set("command", "gen hardness");
      rep.set("input", gh_in);
      std::string text = read_file(gh_in);
      rep.set("digest", digest_of(text));
      PpsatFile f = parse_ppsat(text);
      GadgetInstance gi = transform(f.instance, rotation_ptr(f));
      write_file(gh_out, write_ppsat(gi.instance));
      if (!gh_prov.empty()) {
        nlohmann::json j;
        for (const auto& [v, belt] : gi.provenance.variable_belt)
          j["variables"][std::to_string(v + 1)]["belt"] = belt;
        for (const auto& [v, slots] : gi.provenance.variable_slots)
          j["variables"][std::to_string(v + 1)]["slots"] = slots;
        for (const auto& [c, cls] : gi.provenance.clause_clauses)
          j["clauses"][std::to_string(c + 1)]["gadget_clauses"] = cls;
        for (const auto& [c, fresh] : gi.provenance.clause_fresh)
          j["clauses"][std::to_string(c + 1)]["pqrs"] = fresh;
        write_file(gh_prov, j.dump(2) + "\n");
      }
      rep.set("outcome", "solved");
      rep.set("stage.out.variables", gi.instance.nvars);
      rep.set("stage.out.clauses", gi.instance.nclauses());
      return finish(kOk);
    }

    if (*gen_ring) {
      rep.set("command", "gen ring");
      Ring r = build_ring(gr_k);
      out_or_stdout(gr_out, write_ppsat(r.fragment));
      rep.set("outcome", "solved");
      return finish(kOk);
    }

    if (*gen_vg) {
      rep.set("command", "gen vgadget");
      std::vector<OuterRingSpec> rings;
      if (gv_rings > 0) rings.push_back(OuterRingSpec{0, false});
      VariableGadget vg = build_variable_gadget(gv_q, rings);
      out_or_stdout(gv_out, write_ppsat(vg.fragment));
      rep.set("outcome", "solved");
      return finish(kOk);
    }

    if (*gen_rq) {
      rep.set("command", "gen random-quad");
      RandomQuadOptions opts;
      opts.nvars = rq_n;
      opts.seed = rq_seed;
      opts.splits = rq_splits;
      opts.even = rq_even;
      if (rq_variant == "nae") opts.variant = Variant::Nae;
      else if (rq_variant == "1in3") opts.variant = Variant::OneInThree;
      else fail(ErrorKind::InvalidArgument, "unknown variant '" + rq_variant + "'");
      RadialInstance ri = random_quad_instance(opts);
      out_or_stdout(rq_out, write_ppsat(ri.instance, &ri.rotation));
      rep.set("outcome", "solved");
      rep.set("stage.out.variables", ri.instance.nvars);
      rep.set("stage.out.clauses", ri.instance.nclauses());
      return finish(kOk);
    }

    if (*stats) {
      rep.set("command", "stats");
      rep.set("input", stats_in);
      std::string text = read_file(stats_in);
      rep.set("digest", digest_of(text));
      PpsatFile f = parse_ppsat(text);
      std::ostringstream os;
      os << "variables=" << f.instance.nvars << "\n";
      os << "clauses=" << f.instance.nclauses() << "\n";
      os << "variant=" << variant_name(f.instance.variant) << "\n";
      Graph g(f.instance.nvars + f.instance.nclauses());
      for (int c = 0; c < f.instance.nclauses(); c++)
        for (int lit : f.instance.clauses[c])
          g.add_edge(f.instance.nvars + c, std::abs(lit) - 1);
      bool planar = is_planar(g);
      os << "planar=" << (planar ? "yes" : "no") << "\n";
      if (planar && is_connected(g)) {
        SatGraph sg = build_sat_graph(f.instance, rotation_ptr(f), f.outer_face);
        FaceSet faces = trace_faces(sg.emb);
        os << "faces=" << faces.face_count() << "\n";
        os << "quadrangulated=" << (is_quadrangulated(sg) ? "yes" : "no") << "\n";
        os << "three_connected=" << (is_three_connected_plane(sg.emb, faces) ? "yes" : "no")
           << "\n";
      }
      std::cout << os.str();
      rep.set("outcome", "solved");
      return finish(kOk);
    }
  } catch (const Error& e) {
    return finish(map_error(e, rep));
  } catch (const std::exception& e) {
    rep.set("outcome", "error");
    rep.set("error", e.what());
    std::cerr << "error: " << e.what() << "\n";
    return finish(kInputError);
  }
  return finish(kInputError);
}
