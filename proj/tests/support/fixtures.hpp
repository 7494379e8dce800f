#pragma once

#include <utility>
#include <vector>

#include "grenoble/generators.hpp"
#include "grenoble/graph.hpp"

namespace grenoble::testing {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

/// Cycle on ids 1..n in order.
Graph cycle(int n);
/// Path on ids 1..n in order.
Graph path_graph(int n);
/// K_n on ids 0..n-1.
Graph complete(int n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5.
Graph petersen();
/// K3 x K2: triangles 0 1 2 and 3 4 5, edges i - i+3.
Graph triangular_prism();

/// g plus a vertex (id max + 1) adjacent to `neighbors`.
Graph with_vertex(const Graph& g, const VertexSet& neighbors);
Graph with_edge(const Graph& g, VertexId u, VertexId v);

/// The 9-vertex even prism: a0 c0 b0 a1 c1 b1 a2 c2 b2 = ids 0..8.
Graph even_prism_222();

/// Strip 0 has A = {0, 1}, B = {4, 5}, both cliques, with rungs 0-2-4 and
/// 1-3-5; strips 1 and 2 are single length-2 rungs (ids 6..11).
GeneratedHyperprism two_rung_strip();

/// gen_converging({2, 2, 1}) with the hyperprism whose first strip holds the
/// two converging rungs.
GeneratedHyperprism converging_fixture();

} // namespace grenoble::testing
