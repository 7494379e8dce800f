#include "support/fixtures.hpp"

namespace grenoble::testing {

Graph cycle(int n) {
  Edges e;
  std::vector<VertexId> ids;
  for (int i = 1; i <= n; ++i) {
    ids.push_back(i);
    e.emplace_back(i, i % n + 1);
  }
  return Graph(ids, e, "C" + std::to_string(n));
}

Graph path_graph(int n) {
  Edges e;
  std::vector<VertexId> ids;
  for (int i = 1; i <= n; ++i) {
    ids.push_back(i);
    if (i > 1) e.emplace_back(i - 1, i);
  }
  return Graph(ids, e, "P" + std::to_string(n));
}

Graph complete(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::with_vertices(n, e, "K" + std::to_string(n));
}

Graph petersen() {
  Edges e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::with_vertices(10, e, "Petersen");
}

Graph triangular_prism() {
  const Edges e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::with_vertices(6, e);
}

Graph with_vertex(const Graph& g, const VertexSet& neighbors) {
  std::vector<VertexId> ids = g.ids();
  const VertexId x = g.max_id() + 1;
  ids.push_back(x);
  auto e = g.edges();
  for (VertexId v : neighbors) e.emplace_back(v, x);
  return Graph(ids, e);
}

Graph with_edge(const Graph& g, VertexId u, VertexId v) {
  auto e = g.edges();
  e.emplace_back(u, v);
  return Graph(g.ids(), e);
}

Graph even_prism_222() { return gen_even_prism({2, 2, 2}); }

GeneratedHyperprism two_rung_strip() {
  HyperprismSpec spec;
  spec.strips[0].a_count = 2;
  spec.strips[0].b_count = 2;
  spec.strips[0].rungs = {{0, 0, 2}, {1, 1, 2}};
  spec.strips[1].rungs = {{0, 0, 2}};
  spec.strips[2].rungs = {{0, 0, 2}};
  return gen_hyperprism_graph(spec);
}

GeneratedHyperprism converging_fixture() {
  GeneratedHyperprism out{gen_converging({2, 2, 1}), {}};
  // u = 0 1 2, v = 3 4 5, t = 6, b = 7; then 8..12 and 13..17.
  out.hyperprism = Hyperprism::from_ids(out.graph, {VertexSet{0, 3}, {1, 2, 4, 5, 6}, {7},
                                                    {8, 9}, {10, 11}, {12},
                                                    {13}, {14, 15}, {16, 17}});
  return out;
}

} // namespace grenoble::testing
