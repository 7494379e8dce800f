#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grenoble/detectors.hpp"
#include "grenoble/hyperprism.hpp"

namespace grenoble {

/// Prism with paths of the given even lengths (>= 2). Ids run strip by strip:
/// a_i, the interior of path i, b_i.
Graph gen_even_prism(const std::array<int, 3>& lengths);

struct RungSpec {
  int a = 0;       ///< index into the strip's A vertices
  int b = 0;       ///< index into the strip's B vertices
  int length = 2;  ///< even, >= 2; the rung gets length - 1 private interior vertices
};

struct StripSpec {
  int a_count = 1;
  int b_count = 1;
  bool a_clique = true;
  bool b_clique = true;
  std::vector<RungSpec> rungs;
};

struct HyperprismSpec {
  std::array<StripSpec, 3> strips;
};

struct GeneratedHyperprism {
  Graph graph;
  Hyperprism hyperprism;
};

/// Hyperprism graph: per strip, the A vertices, then rung interiors in rung
/// order, then the B vertices. Throws InputError on bad indices or lengths,
/// when two strips both have a non-clique A side (or B side), which forces a
/// square, or when some A/B vertex lies on no rung.
GeneratedHyperprism gen_hyperprism_graph(const HyperprismSpec& spec);

/// Two 1-rungs of the first strip that share their tail: u_0..u_i and
/// v_0..v_j with u_i v_j an edge, both continuing through t = u_{i+1} =
/// v_{j+1} along a common path of `tail` edges to the single B vertex. The
/// other strips have a non-clique A side and a non-clique B side, so the
/// first strip is the only good one. shape = {i, j, tail}: i, j even >= 2,
/// tail odd. Ids: the u path, the v path, t..b, then the other strips.
Graph gen_converging(const std::array<int, 3>& shape);

/// Uniform in [0, n) from one engine draw (multiply-high), identical on every
/// platform unlike the std distributions.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n);
/// Uniform in [0, 1) with 53 bits.
double draw_unit(std::mt19937_64& rng);

/// Samples G(n, p) until classify accepts, at most `attempts` times.
std::optional<Graph> gen_random_grenoble(int n, double p, std::uint64_t seed, int attempts = 1000);

/// C4, C5, or the odd prism with rung lengths 1, 3, 3 (K3 x K2 contains a
/// square).
Graph gen_violator(WitnessKind kind);

/// Adds `extra` vertices to `base` one at a time, each a true twin of a random
/// vertex, or attached to each existing vertex with probability p (or 1 - p),
/// keeping only additions that leave the graph accepted. Returns nullopt if
/// some addition fails `attempts` times.
std::optional<Graph> gen_decorated(const Graph& base, int extra, double p, std::uint64_t seed,
                                   int attempts = 200);

/// One reproducible corpus entry.
struct GenSpec {
  enum class Kind { even_prism, hyperprism, random_grenoble, violator, decorated_prism,
                    decorated_hyperprism, converging, decorated_converging };
  Kind kind = Kind::even_prism;
  std::array<int, 3> lengths{2, 2, 2};
  HyperprismSpec hyperprism;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int extra = 0;
  WitnessKind violator = WitnessKind::square;
};

inline constexpr int kGenKinds = 8;

std::string_view to_string(GenSpec::Kind kind);
GenSpec::Kind gen_kind_from_string(std::string_view name);

/// Builds the graph of a spec, named after it; nullopt when sampling fails.
std::optional<Graph> generate(const GenSpec& spec);

/// The fixed list of specs the corpus is drawn from, in manifest order.
std::vector<GenSpec> corpus_specs();

} // namespace grenoble
