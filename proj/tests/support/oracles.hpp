#pragma once

// Slow, independent re-implementations used to set test expectations. None
// of them calls into the library beyond Graph's adjacency queries.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "grenoble/detectors.hpp"
#include "grenoble/graph.hpp"

namespace grenoble::testing {

using IdPath = std::vector<VertexId>;

/// Every chordless a-b path by plain recursion over ids.
std::vector<IdPath> naive_chordless_paths(const Graph& g, VertexId a, VertexId b);

/// Holes of length >= min_len found by testing every vertex subset for being
/// a connected 2-regular induced subgraph. Returns the vertex sets.
std::vector<VertexSet> subset_holes(const Graph& g, int min_len);

bool subset_has_square(const Graph& g);
bool subset_has_odd_hole(const Graph& g);
/// Odd holes of g and of its complement, by subset testing.
bool subset_is_berge(const Graph& g);

/// Every chordless a-b path has even length.
bool naive_even_pair(const Graph& g, VertexId a, VertexId b);

/// Smallest k admitting a proper coloring, trying k = 1, 2, ... with plain
/// backtracking: a largest clique first, then the vertex with the most
/// placed neighbors.
int plain_chromatic_number(const Graph& g);
int plain_clique_number(const Graph& g);

bool is_clique_ids(const Graph& g, const VertexSet& q);
/// Colors given as a vertex -> color table; checks properness only.
bool proper(const Graph& g, const std::vector<std::pair<VertexId, int>>& colors);

/// G/ab built directly from the edge list; the new vertex gets id `fresh`.
Graph hand_contract(const Graph& g, VertexId a, VertexId b, VertexId fresh);

/// x <_base y by definition: some odd chordless path from x to base in g
/// minus `removed` has y as its second vertex.
bool naive_order_less(const Graph& g, Mask removed, VertexId base, VertexId x, VertexId y);

/// Triangle pairs joined by three disjoint chordless paths with no extra
/// edges, found by trying every triangle pair and every path triple. Returns
/// the parities seen (bit 0 all even, bit 1 all odd, bit 2 mixed). Small
/// graphs only.
int subset_prism_parities(const Graph& g);

/// Checks a rejection witness against its definition using adjacency only:
/// chordless cycles of the right length for squares and odd holes, the
/// same in the complement for antiholes, and triangles joined by disjoint
/// chordless paths of one parity for prisms.
bool witness_by_hand(const Graph& g, const Witness& w);

/// Connected components of g minus `removed`, each sorted, in order of
/// their smallest vertex.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

/// Chordless a-b paths whose interior lies in `interior`.
std::vector<IdPath> paths_through(const Graph& g, VertexId a, VertexId b, const VertexSet& interior);

/// Vertices outside the nine sets (A_1 C_1 B_1 A_2 ... B_3) with two
/// neighbors in each triangle of some instance, one rung per strip.
VertexSet naive_majors(const Graph& g, const std::array<VertexSet, 9>& sets);

} // namespace grenoble::testing
