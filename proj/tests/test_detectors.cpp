#include <doctest.h>

#include <random>

#include "grenoble/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace grenoble;
using namespace grenoble::testing;

TEST_CASE("squares") {
  const auto c4 = find_square(cycle(4));
  REQUIRE(c4.has_value());
  CHECK(c4->kind == WitnessKind::square);
  CHECK(validate_witness(cycle(4), *c4));
  CHECK_FALSE(find_square(petersen()).has_value());
  CHECK_FALSE(subset_has_square(petersen()));
  const Graph anti_c6 = cycle(6).complement();
  CHECK(subset_has_square(anti_c6));
  const auto w = find_square(anti_c6);
  REQUIRE(w.has_value());
  CHECK(validate_witness(anti_c6, *w));
}

TEST_CASE("odd holes") {
  const auto c5 = find_odd_hole(cycle(5));
  REQUIRE(c5.has_value());
  CHECK(c5->vertices.size() == 5);
  CHECK_FALSE(find_odd_hole(cycle(6)).has_value());
  const auto c7 = find_odd_hole(cycle(7));
  REQUIRE(c7.has_value());
  CHECK(c7->vertices.size() == 7);
  CHECK(validate_witness(cycle(7), *c7));
}

TEST_CASE("Berge test") {
  CHECK_FALSE(is_berge(cycle(5)).berge);
  CHECK(is_berge(cycle(6)).berge);
  CHECK(is_berge(path_graph(7)).berge);
  CHECK(is_berge(even_prism_222()).berge);
  CHECK(subset_is_berge(even_prism_222()));
  const auto anti = is_berge(cycle(7).complement());
  CHECK_FALSE(anti.berge);
  REQUIRE(anti.witness.has_value());
  CHECK(anti.witness->kind == WitnessKind::odd_antihole);
  CHECK(validate_witness(cycle(7).complement(), *anti.witness));
}

TEST_CASE("Berge test agrees with subset search on small random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    Edges e;
    const int n = 5 + static_cast<int>(rng() % 6);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 100 < 40) e.emplace_back(u, v);
      }
    }
    const Graph g = Graph::with_vertices(n, e);
    const auto r = is_berge(g);
    CHECK(r.berge == subset_is_berge(g));
    CHECK(find_square(g).has_value() == subset_has_square(g));
    if (r.witness) CHECK(validate_witness(g, *r.witness));
  }
}

TEST_CASE("prisms") {
  const auto k3k2 = find_prism(triangular_prism());
  REQUIRE(k3k2.prism.has_value());
  CHECK(k3k2.prism->parity == Parity::odd);
  const auto even = find_prism(even_prism_222());
  REQUIRE(even.prism.has_value());
  CHECK(even.prism->parity == Parity::even);
  CHECK(validate_prism(even_prism_222(), *even.prism));
  CHECK_FALSE(find_prism(cycle(6)).prism.has_value());
}

TEST_CASE("even prisms are preferred") {
  // K3 x K2 on ids 0..5 next to an even prism on ids 6..14: the odd prism has
  // the smaller triangles but the even one is returned.
  Edges e = triangular_prism().edges();
  for (auto [u, v] : even_prism_222().edges()) e.emplace_back(u + 6, v + 6);
  const Graph g = Graph::with_vertices(15, e);
  CHECK(subset_prism_parities(g) == 3);
  const auto p = find_prism(g);
  REQUIRE(p.prism.has_value());
  CHECK(p.prism->parity == Parity::even);
  CHECK(find_prism_with_parity(g, Parity::odd).has_value());
}

TEST_CASE("even pairs") {
  CHECK(is_even_pair(cycle(4), 1, 3));
  CHECK_FALSE(is_even_pair(path_graph(4), 1, 4));
  // Both arcs of C6 between antipodal vertices have length 3.
  CHECK(naive_even_pair(cycle(6), 1, 4) == false);
  CHECK(is_even_pair(cycle(6), 1, 4) == naive_even_pair(cycle(6), 1, 4));
  CHECK_THROWS_AS(is_even_pair(cycle(4), 1, 2), InputError);
  CHECK_THROWS_AS(is_even_pair(cycle(4), 1, 1), InputError);
}

TEST_CASE("classification order") {
  CHECK(classify(cycle(5)).witness->kind == WitnessKind::odd_hole);
  // K3xK2 holds the square a0 a1 b1 b0, which is reported first.
  CHECK(subset_has_square(triangular_prism()));
  CHECK(classify(triangular_prism()).witness->kind == WitnessKind::square);
  CHECK(classify(cycle(4)).witness->kind == WitnessKind::square);
  // C4 plus a C5 elsewhere: the square comes first.
  Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}};
  CHECK(classify(Graph::with_vertices(9, e)).witness->kind == WitnessKind::square);
  CHECK(classify(even_prism_222()).accepted);
  CHECK(subset_prism_parities(even_prism_222()) == 1);
  CHECK(subset_prism_parities(triangular_prism()) == 2);
}

TEST_CASE("violators are rejected with their own kind") {
  for (WitnessKind k : {WitnessKind::square, WitnessKind::odd_hole, WitnessKind::odd_prism}) {
    const Graph g = gen_violator(k);
    const auto c = classify(g);
    REQUIRE_FALSE(c.accepted);
    CHECK(c.witness->kind == k);
    CHECK(validate_witness(g, *c.witness));
  }
}

TEST_CASE("tampered witnesses fail validation") {
  const Graph c5 = cycle(5);
  Witness w = *classify(c5).witness;
  CHECK(validate_witness(c5, w));
  std::swap(w.vertices[0], w.vertices[1]);
  CHECK_FALSE(validate_witness(c5, w));
  CHECK_FALSE(validate_witness(cycle(6), Witness{WitnessKind::square, {1, 2, 3, 4}, {}}));
}

TEST_CASE("even pair test agrees with the pendant-vertex Berge test") {
  // {a, b} is even iff adding a vertex adjacent to exactly a and b closes no
  // odd hole; checked on small Berge graphs.
  for (const Graph& g : {even_prism_222(), cycle(6), gen_even_prism({2, 2, 4}), petersen()}) {
    if (!is_berge(g).berge) continue;
    for (VertexId a : g.ids()) {
      for (VertexId b : g.ids()) {
        if (a >= b || g.adjacent(a, b)) continue;
        const bool even = is_even_pair(g, a, b);
        CHECK(even == naive_even_pair(g, a, b));
        CHECK(even == is_berge(with_vertex(g, {a, b})).berge);
      }
    }
  }
}

TEST_CASE("class membership is hereditary") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_grenoble(12, 0.35, 700 + seed);
    REQUIRE(g.has_value());
    for (int t = 0; t < 5; ++t) {
      VertexSet s;
      for (VertexId v : g->ids()) {
        if (rng() % 3 != 0) s.push_back(v);
      }
      CHECK(classify(induced_subgraph(*g, s)).accepted);
    }
  }
}

TEST_CASE("detectors report exhausted budgets") {
  CHECK_THROWS_AS(find_odd_hole(gen_even_prism({2, 4, 6}), 3), ResourceError);
  CHECK_THROWS_AS(is_even_pair(petersen(), 0, 2, 2), ResourceError);
}
