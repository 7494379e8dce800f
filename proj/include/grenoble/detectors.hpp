#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "grenoble/graph.hpp"
#include "grenoble/paths.hpp"

namespace grenoble {

enum class WitnessKind { square, odd_hole, odd_antihole, odd_prism, even_prism, even_pair, none };

std::string_view to_string(WitnessKind kind);
/// Throws InputError on an unknown name.
WitnessKind witness_kind_from_string(std::string_view name);

/// Certificate of a structural property. Holes and antiholes list their
/// vertices in cyclic order (antiholes: cyclic in the complement). Prisms list
/// a1 a2 a3 b1 b2 b3 and carry the three connecting paths.
struct Witness {
  WitnessKind kind = WitnessKind::none;
  std::vector<VertexId> vertices;
  std::vector<Path> paths;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Two disjoint triangles joined by three chordless paths, path i running
/// from triangle_a[i] to triangle_b[i], with no edges between paths other
/// than the triangle edges.
struct Prism {
  std::array<VertexId, 3> triangle_a{};
  std::array<VertexId, 3> triangle_b{};
  std::array<Path, 3> paths;
  Parity parity = Parity::even;

  VertexSet vertices() const;
  Witness to_witness() const;
};

/// Outcome of a prism search. A prism whose paths have mixed parities is
/// never returned as a Prism: the two mismatched paths close an odd hole,
/// reported in `odd_hole`.
struct PrismSearch {
  std::optional<Prism> prism;
  std::optional<Witness> odd_hole;
};

std::optional<Witness> find_square(const Graph& g);
std::optional<Witness> find_odd_hole(const Graph& g, std::uint64_t budget = default_budget());

struct BergeResult {
  bool berge = true;
  std::optional<Witness> witness;
};
BergeResult is_berge(const Graph& g, std::uint64_t budget = default_budget());

/// Some prism of g, an even one whenever g has one; among prisms of the
/// preferred parity the lexicographically smallest triangle pair wins.
PrismSearch find_prism(const Graph& g, std::uint64_t budget = default_budget());
/// First prism of exactly the given parity (odd or even), if any.
std::optional<Prism> find_prism_with_parity(const Graph& g, Parity parity,
                                            std::uint64_t budget = default_budget());

/// a and b must be distinct and non-adjacent (InputError otherwise).
bool is_even_pair(const Graph& g, VertexId a, VertexId b, std::uint64_t budget = default_budget());

/// The input is not a square-free Grenoble graph; carries the certificate.
class ClassViolation : public Error {
public:
  ClassViolation(Witness witness, const std::string& detail)
      : Error("not a square-free Grenoble graph: " + detail), witness_(std::move(witness)) {}

  const Witness& witness() const { return witness_; }

private:
  Witness witness_;
};

struct Classification {
  bool accepted = false;
  std::optional<Witness> witness;
};

/// Accepts square-free Berge graphs without odd prisms. Otherwise returns the
/// first violation in the order square, odd hole, odd antihole, odd prism.
Classification classify(const Graph& g, std::uint64_t budget = default_budget());

/// Checks the prism axioms by direct adjacency tests.
bool validate_prism(const Graph& g, const Prism& p);
/// Re-checks a witness against g by direct adjacency tests (even pairs are
/// re-checked by enumeration).
bool validate_witness(const Graph& g, const Witness& w);

} // namespace grenoble
