#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "grenoble/hyperprism.hpp"

namespace grenoble {

/// A hyperprism seen from its good strip. The strips are reordered so that
/// the good strip is strip 0, and A/B are exchanged in every strip when
/// needed so that |A_0| <= |B_0|.
struct StripContext {
  Graph graph;
  Hyperprism hyperprism;
  /// Index of the good strip in the hyperprism as originally given.
  int good = 0;
  bool flipped = false;
  Mask majors = 0;
  /// Vertices deleted by earlier steps of an even-pair sequence.
  Mask removed = 0;
  VertexSet a_side;
  VertexSet b_side;
  /// Rungs of strip 0 avoiding `removed`, oriented from A_0 to B_0.
  std::vector<IndexPath> rungs;

  const Strip& strip() const { return hyperprism[0]; }
};

/// Throws LemmaViolation if strip `good` is not good.
StripContext make_context(const Graph& g, const Hyperprism& h, Mask majors, int good,
                          std::uint64_t budget = default_budget());
/// Computes the major neighbors and the good strip first.
StripContext make_context(const Graph& g, const Hyperprism& h,
                          std::uint64_t budget = default_budget());
/// The same context in g minus a and b.
StripContext without(const StripContext& ctx, VertexId a, VertexId b);

/// The three outcomes for a chordless A_0-B_0 path avoiding M. `strip` is
/// meaningful for interior_is_rung only.
struct PathClass {
  enum Kind { one_rung, interior_is_rung, odd_s1_path };
  Kind kind = one_rung;
  int strip = 0;

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

/// Throws InputError when p is not a chordless A_0-B_0 path avoiding M, and
/// LemmaViolation when none of the three outcomes applies.
PathClass classify_path(const StripContext& ctx, const Path& p);

/// x <_base y: some odd chordless path from x to base has y as the neighbor
/// of x. base is in B_0 (then x, y are in A_0) or in A_0 (then x, y are in B_0).
/// The search runs over 1-rungs from y to base that x does not see.
bool order_less(const StripContext& ctx, VertexId base, VertexId x, VertexId y);

struct OrderRelation {
  VertexId base = -1;
  std::set<std::pair<VertexId, VertexId>> pairs;

  bool less(VertexId x, VertexId y) const { return pairs.contains({x, y}); }
  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;
};

/// Two 1-rungs sharing one end whose other ends are distinct and each see
/// nothing of the other rung but its end. Both oriented from A_0 to B_0.
struct ConvergenceWitness {
  Path rung1;
  Path rung2;
};

bool is_convergence(const StripContext& ctx, const ConvergenceWitness& w);

/// The relation <_base, or two converging rungs when it is not antisymmetric
/// (the pair with the smallest union among all violations). A transitivity
/// failure that does not reduce to such a pair throws LemmaViolation.
std::variant<OrderRelation, ConvergenceWitness> build_order(const StripContext& ctx,
                                                            VertexId base);

/// Orders for every base in A_0 and B_0, keyed by base.
using Orders = std::map<VertexId, OrderRelation>;
std::variant<Orders, ConvergenceWitness> build_orders(const StripContext& ctx);

/// Converging 1-rungs with the smallest |V(R') u V(R'')|, if any.
std::optional<ConvergenceWitness> find_convergence(const StripContext& ctx);

/// Builds the hyperprism of the nine-set table from the smallest converging
/// pair, grows it to a maximal one and returns it. Throws LemmaViolation
/// unless its good strip is strictly smaller than the context's.
Hyperprism resolve_convergence(const StripContext& ctx, const ConvergenceWitness& w,
                               std::uint64_t budget = default_budget());

/// D(a, b) = {a' in A_0 : a' <_b a}.
VertexSet d_set(const Orders& orders, const StripContext& ctx, VertexId a, VertexId b);

/// A pair a in A_0, b in B_0 with a maximal for <_b and b maximal for <_a.
std::pair<VertexId, VertexId> extract_even_pair(const StripContext& ctx);
std::pair<VertexId, VertexId> extract_even_pair(const StripContext& ctx, const Orders& orders);

/// k = |A_0| pairs; pair i is extracted in the graph without pairs 0..i-1.
std::vector<std::pair<VertexId, VertexId>> even_pair_sequence(const StripContext& ctx);

} // namespace grenoble
