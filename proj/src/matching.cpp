#include "ppsat/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "ppsat/errors.hpp"

namespace ppsat {

std::vector<int> maximum_matching(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.n);
  for (const auto& [u, v] : g.edges) boost::add_edge(u, v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<int> out(g.n, -1);
  for (int v = 0; v < g.n; v++)
    if (mate[v] != boost::graph_traits<BoostGraph>::null_vertex()) out[v] = (int)mate[v];
  return out;
}

namespace {

bool pm_recurse(const std::vector<std::vector<int>>& adj, std::vector<int>& mate,
                std::vector<std::pair<int, int>>& chosen,
                const std::function<bool(const std::vector<std::pair<int, int>>&)>& cb) {
  int v = -1;
  for (int u = 0; u < (int)adj.size(); u++)
    if (mate[u] < 0) {
      v = u;
      break;
    }
  if (v < 0) return cb(chosen);
  for (int w : adj[v]) {
    if (mate[w] >= 0) continue;
    mate[v] = w;
    mate[w] = v;
    chosen.emplace_back(v, w);
    bool keep_going = pm_recurse(adj, mate, chosen, cb);
    chosen.pop_back();
    mate[v] = mate[w] = -1;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void enumerate_perfect_matchings(
    const Graph& g, const std::function<bool(const std::vector<std::pair<int, int>>&)>& cb) {
  if (g.n % 2 == 1) return;
  auto adj = adjacency(g);
  std::vector<int> mate(g.n, -1);
  std::vector<std::pair<int, int>> chosen;
  pm_recurse(adj, mate, chosen, cb);
}

}  // namespace ppsat
