#include "ppsat/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include "ppsat/errors.hpp"

namespace ppsat {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.n);
  for (const auto& [u, v] : g.edges) boost::add_edge(u, v, bg);
  auto e_index = boost::get(boost::edge_index, bg);
  int idx = 0;
  for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(e_index, *ei, idx++);
  return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
  validate_graph(g);
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

Embedding compute_embedding(const Graph& g) {
  validate_graph(g);
  if (!is_connected(g)) fail(ErrorKind::NotConnected, "compute_embedding requires a connected graph");
  BoostGraph bg = to_boost(g);
  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> order(g.n);
  auto emb_map = boost::make_iterator_property_map(order.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = emb_map))
    fail(ErrorKind::NonPlanar, "graph is not planar");

  Embedding e;
  e.g = g;
  e.rot.assign(g.n, {});
  for (int v = 0; v < g.n; v++) {
    e.rot[v].reserve(order[v].size());
    for (const Edge& ed : order[v]) {
      int s = (int)boost::source(ed, bg), t = (int)boost::target(ed, bg);
      e.rot[v].push_back(s == v ? t : s);
    }
  }
  e.outer_face = 0;
  validate_embedding(e);
  e.outer_face = choose_outer_face(trace_faces(e));
  return e;
}

Embedding embedding_from_rotation(const Graph& g, std::vector<std::vector<int>> rot,
                                  std::optional<int> outer) {
  Embedding e;
  e.g = g;
  e.rot = std::move(rot);
  e.outer_face = 0;
  validate_embedding(e);
  e.outer_face = outer ? *outer : choose_outer_face(trace_faces(e));
  if (outer) validate_embedding(e);
  return e;
}

}  // namespace ppsat
