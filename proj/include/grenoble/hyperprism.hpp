#pragma once

#include <array>
#include <string>
#include <vector>

#include "grenoble/detectors.hpp"
#include "grenoble/graph.hpp"
#include "grenoble/paths.hpp"

namespace grenoble {

/// One strip (A_i, C_i, B_i), as position masks of the owning graph.
struct Strip {
  Mask a = 0;
  Mask c = 0;
  Mask b = 0;

  Mask all() const { return a | c | b; }
  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Nine vertex sets A_i, C_i, B_i (i = 0, 1, 2) of one graph. Strip indices
/// are 0-based throughout the C++ API.
///
/// Axioms: the sets are nonempty and pairwise disjoint; A_i is complete to
/// A_j and B_i to B_j for i != j, with no other edges between strips; every
/// vertex of a strip lies on a rung of that strip (a chordless A_i-B_i path
/// with interior in C_i); every rung has even length.
struct Hyperprism {
  std::array<Strip, 3> strips;

  Mask a_side() const { return strips[0].a | strips[1].a | strips[2].a; }
  Mask b_side() const { return strips[0].b | strips[1].b | strips[2].b; }
  Mask c_side() const { return strips[0].c | strips[1].c | strips[2].c; }
  Mask vertices() const { return a_side() | b_side() | c_side(); }
  const Strip& operator[](int i) const { return strips[static_cast<std::size_t>(i)]; }
  Strip& operator[](int i) { return strips[static_cast<std::size_t>(i)]; }

  /// Sets given as ids, row-major: A0 C0 B0 A1 C1 B1 A2 C2 B2.
  static Hyperprism from_ids(const Graph& g, const std::array<VertexSet, 9>& sets);
  std::array<VertexSet, 9> to_ids(const Graph& g) const;
  /// Nine singleton/path sets of an even prism (rungs of length >= 2).
  static Hyperprism from_prism(const Graph& g, const Prism& p);

  /// Exchanges A_i and B_i in every strip.
  Hyperprism flipped() const;

  friend bool operator==(const Hyperprism&, const Hyperprism&) = default;
};

/// Order relation on hyperprisms: C grows and A, B grow (possibly swapped),
/// at least one strictly.
bool precedes(const Hyperprism& lhs, const Hyperprism& rhs);

struct HyperprismReport {
  bool ok = true;
  std::string axiom;
  VertexSet vertices;
  std::string detail;
};

/// Checks every axiom; reports the first failure (disjointness, cross-strip
/// edges, rung coverage, rung parity).
HyperprismReport validate_hyperprism(const Graph& g, const Hyperprism& h,
                                     std::uint64_t budget = default_budget());

/// All rungs of strip i, oriented from A_i to B_i. Throws ClassViolation when
/// a rung is odd (the witness is the odd hole or odd prism it creates).
std::vector<Path> enumerate_rungs(const Graph& g, const Hyperprism& h, int strip,
                                  std::uint64_t budget = default_budget());

/// Set M of vertices outside H that are major for some instance: at least
/// two neighbors among the A-corners and two among the B-corners.
Mask find_major_neighbors(const Graph& g, const Hyperprism& h,
                          std::uint64_t budget = default_budget());

/// Vertices outside H complete to at least two of A_0..A_2 and to at least
/// two of B_0..B_2.
Mask major_certificate(const Graph& g, const Hyperprism& h);

/// Grows the hyperprism seeded by an even prism to a fixpoint where no chain
/// of outside vertices can be added along a new rung of one strip.
Hyperprism grow_maximal(const Graph& g, const Prism& seed,
                        std::uint64_t budget = default_budget());
Hyperprism grow_maximal(const Graph& g, const Hyperprism& seed,
                        std::uint64_t budget = default_budget());

/// A strip is good when A_i and B_i are cliques and `majors` is complete to
/// A_i and B_i.
bool is_good_strip(const Graph& g, const Hyperprism& h, Mask majors, int strip);

/// Good strip with the fewest vertices, ties to the smaller index. Throws
/// LemmaViolation when no strip is good.
int select_good_strip(const Graph& g, const Hyperprism& h, Mask majors);

struct AttachmentViolation {
  VertexSet component;
  VertexSet attachments;
};

struct AttachmentReport {
  bool ok = true;
  std::vector<AttachmentViolation> violations;
};

/// True iff x lies inside one of S_0, S_1, S_2, A or B.
bool is_local(const Hyperprism& h, Mask x);

/// Every component of G - (V(H) u M) must have a local attachment set.
AttachmentReport check_local_attachments(const Graph& g, const Hyperprism& h, Mask majors);

/// Components of G - (M u A u B). Throws LemmaViolation if a component meets
/// two different C_i.
std::vector<VertexSet> cutset_components(const Graph& g, const Hyperprism& h, Mask majors);

} // namespace grenoble
