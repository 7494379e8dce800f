#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grenoble/evenpair.hpp"
#include "grenoble/oracle.hpp"

namespace grenoble {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

/// G_X = g - Y and G_Y = g - X, where X is the union of the components of
/// g - (M u A_1 u B_1) that meet C_1 and Y is everything else outside the cutset.
struct Split {
  Graph gx;
  Graph gy;
  VertexSet shared;
};

/// Throws LemmaViolation if a component meets both C_1 and C_2.
Split split(const Graph& g, const StripContext& ctx);

/// Kempe swaps until a_i and b_i share a color for every pair; pair i ends up
/// with color i. Throws LemmaViolation (with the odd path in the message) if
/// a_h and b_h fall in one two-colored component.
Coloring recolor_to_pairs(const Graph& part, const Coloring& c, const PairList& pairs,
                          int* swaps = nullptr);

/// Colors of c_y are renamed to agree with c_x on `shared` (pair colors are
/// already equal; the clique M u (B_1 minus paired vertices) is matched
/// vertex by vertex), then the two are combined. Throws LemmaViolation when
/// the leftover shared part is not a clique or the renaming conflicts.
Coloring merge(const Graph& g, const Coloring& c_x, const Coloring& c_y, const VertexSet& shared,
               const PairList& pairs);

/// One even-pair contraction: `merged` replaces x and y.
struct Contraction {
  VertexId x = -1;
  VertexId y = -1;
  VertexId merged = -1;
};
using Lift = std::vector<Contraction>;

/// G/ab with a new vertex (id `fresh`, or max id + 1 when negative) adjacent
/// to N(a) u N(b). Throws InputError if a and b are adjacent or equal.
std::pair<Graph, Contraction> contract_even_pair(const Graph& g, VertexId a, VertexId b,
                                                 VertexId fresh = -1);

/// Undoes the contractions in reverse order: x and y take the merged color.
Coloring lift_coloring(const Coloring& c, const Lift& lift);

/// Replaces a merged vertex in a clique by whichever of x, y sees the rest.
/// `original` is the graph before the contraction.
CliqueWitness lift_clique(const Graph& original, const CliqueWitness& q, const Contraction& step);

struct DecompositionNode {
  enum class Kind { decomposition, leaf };
  enum class Method { split, clique, oracle, contraction, oracle_fallback };

  Kind kind = Kind::leaf;
  Method method = Method::clique;
  Graph graph;
  std::optional<std::pair<VertexId, VertexId>> mark;
  VertexSet cutset;
  std::vector<DecompositionNode> children;
  PairList pairs;
  int restarts = 0;
  int swaps = 0;
  int contractions = 0;
};

std::string_view to_string(DecompositionNode::Method m);

struct ColorStats {
  int decomposition_nodes = 0;
  int leaves = 0;
  int restarts = 0;
  int kempe_swaps = 0;
  int contractions = 0;
  int oracle_fallbacks = 0;
};

ColorStats collect_stats(const DecompositionNode& tree);

struct ColoredResult {
  Coloring coloring;
  CliqueWitness clique;
  DecompositionNode tree;
};

/// Hooks for auditing intermediate objects. Called from worker threads when
/// coloring in parallel, so implementations must be thread-safe.
class ColorObserver {
public:
  virtual ~ColorObserver() = default;
  virtual void on_context(const StripContext&, const Orders&) {}
  virtual void on_convergence(const StripContext&, const ConvergenceWitness&, const Hyperprism&) {}
  virtual void on_pairs(const StripContext&, const PairList&) {}
  virtual void on_recolor(const Graph&, const Coloring&, const Coloring&, const PairList&) {}
  virtual void on_contraction(const Graph&, VertexId, VertexId) {}
};

struct ColorOptions {
  /// Graphs with at most this many vertices go straight to the exact solver.
  int base_size = 8;
  bool parallel = false;
  std::uint64_t budget = default_budget();
  ColorObserver* observer = nullptr;
};

/// Optimal coloring and maximum clique of a square-free Grenoble graph.
/// Throws ClassViolation when a square, an odd hole or an odd prism shows up
/// along the way, and LemmaViolation when a structural assertion fails.
ColoredResult color(const Graph& g, const ColorOptions& options = {});

struct TreeBound {
  bool ok = true;
  std::optional<std::pair<VertexId, VertexId>> duplicate;
  int decomposition_nodes = 0;
  int total_nodes = 0;
};

/// Every mark is a non-adjacent pair used by at most one node, there are at
/// most n(n-1)/2 decomposition nodes, and at most n(n-1)+1 nodes in total.
TreeBound check_tree_bound(const DecompositionNode& tree);

} // namespace grenoble
