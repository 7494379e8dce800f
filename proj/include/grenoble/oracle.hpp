#pragma once

#include <map>
#include <optional>
#include <utility>

#include "grenoble/graph.hpp"
#include "grenoble/paths.hpp"

namespace grenoble {

/// Total map vertex -> color in 0..num_colors-1, every color used.
struct Coloring {
  std::map<VertexId, int> assignment;
  int num_colors = 0;

  int operator[](VertexId v) const { return assignment.at(v); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CliqueWitness {
  VertexSet members;

  int size() const { return static_cast<int>(members.size()); }
  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

/// Vertex cap of the exponential solvers below.
inline constexpr int kOracleMaxVertices = 40;

/// Optimal coloring by branch and bound. Vertices are colored in order of
/// descending degree, ties by id; the clique number is the lower bound and a
/// greedy coloring the upper bound. Throws ResourceError above `cap`.
std::pair<int, Coloring> chromatic_number_exact(const Graph& g, int cap = kOracleMaxVertices);

/// Lexicographically smallest maximum clique. Throws ResourceError above `cap`.
CliqueWitness max_clique_exact(const Graph& g, int cap = kOracleMaxVertices);

/// True iff c is a proper coloring of g using colors 0..num_colors-1, q is a
/// clique of g, and num_colors == |q| (which certifies optimality).
bool verify_coloring(const Graph& g, const Coloring& c, const CliqueWitness& q);

/// True iff c is total on g, proper, and uses exactly colors 0..num_colors-1.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// First non-adjacent pair (ascending ids) that is an even pair.
std::optional<std::pair<VertexId, VertexId>> find_any_even_pair(
    const Graph& g, int cap = kOracleMaxVertices, std::uint64_t budget = default_budget());

} // namespace grenoble
