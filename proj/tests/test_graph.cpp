#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grenoble/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace grenoble;
using namespace grenoble::testing;

namespace {

std::multiset<IdPath> as_multiset(const std::vector<Path>& ps) {
  std::multiset<IdPath> out;
  for (const auto& p : ps) out.insert(p.vertices);
  return out;
}

} // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph({1, 1}, Edges{}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, Edges{{1, 3}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, Edges{{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::with_vertices(65, Edges{}), InputError);
  const Graph g({5, 2, 9}, Edges{{9, 2}, {2, 9}});
  CHECK(g.ids() == std::vector<VertexId>{2, 5, 9});
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(2, 9));
  CHECK(g.adjacent(9, 2));
  CHECK_FALSE(g.adjacent(2, 5));
  CHECK_THROWS_AS(g.index(7), InputError);
}

TEST_CASE("induced subgraph keeps ids") {
  const Graph c6 = cycle(6);
  const Graph p = induced_subgraph(c6, {1, 2, 3});
  CHECK(p.ids() == std::vector<VertexId>{1, 2, 3});
  CHECK(p.edges() == Edges{{1, 2}, {2, 3}});
  CHECK(induced_subgraph(c6, c6.ids()) == c6);
  CHECK(induced_subgraph(triangular_prism(), {0, 1, 2}) == complete(3));
  CHECK_THROWS_AS(induced_subgraph(c6, {1, 42}), InputError);
}

TEST_CASE("induced subgraph composes") {
  std::mt19937_64 rng(7);
  const Graph g = petersen();
  for (int t = 0; t < 50; ++t) {
    VertexSet s;
    VertexSet s2;
    for (VertexId v : g.ids()) {
      if (rng() % 3 != 0) {
        s.push_back(v);
        if (rng() % 2 == 0) s2.push_back(v);
      }
    }
    CHECK(induced_subgraph(induced_subgraph(g, s), s2) == induced_subgraph(g, s2));
  }
}

TEST_CASE("complete and anticomplete") {
  const Graph k4 = complete(4);
  CHECK(is_complete_to(k4, 0, {1, 2, 3}));
  const Graph c5 = cycle(5);
  CHECK(is_anticomplete_to(c5, 1, {3, 4}));
  const Graph c4 = cycle(4);
  CHECK_FALSE(is_complete_to(c4, 1, {2, 3}));
  CHECK_FALSE(is_anticomplete_to(c4, 1, {2, 3}));
  CHECK_THROWS_AS(is_complete_to(c4, 1, {1, 2}), InputError);
}

TEST_CASE("chordless paths on cycles") {
  const auto c6 = enumerate_chordless_paths(cycle(6), 1, 4);
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].length() == 3);
  CHECK(c6[1].length() == 3);
  const auto c4 = enumerate_chordless_paths(cycle(4), 1, 3);
  REQUIRE(c4.size() == 2);
  CHECK(c4[0].length() == 2);
  CHECK(c4[1].length() == 2);
}

TEST_CASE("chordless paths match plain recursion on the Petersen graph") {
  const Graph g = petersen();
  for (VertexId a : g.ids()) {
    for (VertexId b : g.ids()) {
      if (a == b) continue;
      const auto fast = enumerate_chordless_paths(g, a, b);
      const auto slow = naive_chordless_paths(g, a, b);
      CHECK(as_multiset(fast) == std::multiset<IdPath>(slow.begin(), slow.end()));
      if (g.adjacent(a, b)) {
        CHECK(std::any_of(fast.begin(), fast.end(), [](const Path& p) { return p.length() == 1; }));
      }
    }
  }
}

TEST_CASE("chordless path enumeration is symmetric") {
  const Graph g = gen_even_prism({2, 4, 2});
  for (VertexId a : g.ids()) {
    for (VertexId b : g.ids()) {
      if (a >= b) continue;
      std::multiset<IdPath> back;
      for (const auto& p : enumerate_chordless_paths(g, b, a)) back.insert(p.reversed().vertices);
      CHECK(as_multiset(enumerate_chordless_paths(g, a, b)) == back);
    }
  }
}

TEST_CASE("path enumeration reports an exhausted budget") {
  CHECK_THROWS_AS(enumerate_chordless_paths(petersen(), 0, 7, 5), ResourceError);
}

TEST_CASE("chordless cycles") {
  const auto c5 = enumerate_chordless_cycles(cycle(5), 4, Parity::odd);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].vertices.size() == 5);
  CHECK(enumerate_chordless_cycles(complete(4), 4, Parity::any).empty());

  const Graph g = petersen();
  const auto odd = enumerate_chordless_cycles(g, 5, Parity::odd);
  std::size_t five_holes = 0;
  for (const auto& s : subset_holes(g, 5)) five_holes += s.size() == 5;
  CHECK(five_holes == 12);
  CHECK(std::count_if(odd.begin(), odd.end(), [](const Path& p) { return p.vertices.size() == 5; }) ==
        static_cast<long>(five_holes));
}

TEST_CASE("every enumerated cycle is a hole, and all holes are found") {
  for (const Graph& g : {petersen(), gen_even_prism({2, 2, 4}), cycle(8), with_vertex(cycle(6), {1, 3, 5})}) {
    const auto cycles = enumerate_chordless_cycles(g, 4, Parity::any);
    std::set<VertexSet> found;
    for (const auto& c : cycles) {
      CHECK(is_hole(g, to_index_path(g, c)));
      VertexSet s = c.vertices;
      std::sort(s.begin(), s.end());
      CHECK(found.insert(s).second);
    }
    const auto expected = subset_holes(g, 4);
    CHECK(found == std::set<VertexSet>(expected.begin(), expected.end()));
  }
}

TEST_CASE("connected components") {
  const auto parts = connected_components(cycle(6), {1, 4});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{2, 3});
  CHECK(parts[1] == VertexSet{5, 6});
  CHECK(connected_components(petersen()).size() == 1);
  const Graph prism = even_prism_222();
  const auto rest = connected_components(prism, {0, 2});
  REQUIRE(rest.size() == 2);
  CHECK(rest[0] == VertexSet{1});
}

TEST_CASE("components form a partition") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = gen_random_grenoble(12, 0.25, 100 + t);
    REQUIRE(g.has_value());
    VertexSet removed;
    for (VertexId v : g->ids()) {
      if (rng() % 4 == 0) removed.push_back(v);
    }
    std::set<VertexId> seen;
    const auto parts = connected_components(*g, removed);
    for (const auto& p : parts) {
      for (VertexId v : p) {
        CHECK(seen.insert(v).second);
        CHECK(std::find(removed.begin(), removed.end(), v) == removed.end());
      }
      for (const auto& q : parts) {
        if (&p == &q) continue;
        for (VertexId u : p) {
          for (VertexId v : q) CHECK_FALSE(g->adjacent(u, v));
        }
      }
    }
    CHECK(seen.size() + removed.size() == static_cast<std::size_t>(g->size()));
  }
}

TEST_CASE("structural hash depends on edges only") {
  Graph a = cycle(5);
  Graph b = cycle(5);
  b.set_name("renamed");
  CHECK(structural_hash(a) == structural_hash(b));
  CHECK(structural_hash(a) != structural_hash(path_graph(5)));
}
