#include <doctest.h>

#include "grenoble/io.hpp"
#include "support/fixtures.hpp"

using namespace grenoble;
using namespace grenoble::testing;

TEST_CASE("DIMACS round trip is byte exact") {
  const std::string text = "c prism 2 2 2\np edge 9 12\ne 1 2\ne 1 4\ne 1 7\ne 2 3\ne 3 6\n"
                           "e 3 9\ne 4 5\ne 4 7\ne 5 6\ne 6 9\ne 7 8\ne 8 9\n";
  const Graph g = parse_dimacs(text);
  CHECK(g.name() == "prism 2 2 2");
  CHECK(g.size() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(g.adjacent(0, 3));
  CHECK(to_dimacs(g) == text);
  CHECK(parse_dimacs(to_dimacs(petersen())) == petersen());
}

TEST_CASE("DIMACS accepts col problems, blank lines and CRLF") {
  const Graph g = parse_dimacs("p col 3 2\r\n\ne 1 2\r\ne 2 3\n");
  CHECK(g.edges() == Edges{{0, 1}, {1, 2}});
}

TEST_CASE("DIMACS errors carry line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("e 1 2\n") == 1);
  CHECK(line_of("p edge 3 1\ne 1 4\n") == 2);
  CHECK(line_of("p edge 3 1\ne 1 1\n") == 2);
  CHECK(line_of("p edge 3 1\ne 1 x\n") == 2);
  CHECK(line_of("p edge 3 2\ne 1 2\n") == 2);
  CHECK(line_of("p edge 65 0\n") == 1);
  CHECK(line_of("q\n") == 1);
  CHECK(line_of("c only a comment\n") == 1);
}

TEST_CASE("coloring text round trip") {
  Coloring c;
  c.assignment = {{0, 1}, {1, 0}, {2, 1}};
  c.num_colors = 2;
  const CliqueWitness q{{0, 1}};
  const std::string text = coloring_to_text(c, q);
  CHECK(text == "0 1\n1 0\n2 1\nclique 0 1\n");
  const auto [c2, q2] = parse_coloring(text);
  CHECK(c2 == c);
  CHECK(q2 == q);
}

TEST_CASE("witness JSON") {
  const Witness w{WitnessKind::odd_hole, {1, 2, 3, 4, 5}, {}};
  const Json j = to_json(w);
  CHECK(j["kind"] == "odd_hole");
  CHECK(j["vertices"] == Json::array({1, 2, 3, 4, 5}));
}

TEST_CASE("hyperprism JSON lists the nine sets") {
  const auto f = two_rung_strip();
  const Json j = to_json(f.graph, f.hyperprism);
  REQUIRE(j["strips"].size() == 3);
  CHECK(j["strips"][0]["A"] == Json::array({0, 1}));
  CHECK(j["strips"][0]["C"] == Json::array({2, 3}));
  CHECK(j["strips"][0]["B"] == Json::array({4, 5}));
  CHECK(j["graph_hash"] == hash_hex(structural_hash(f.graph)));
}

TEST_CASE("generator specs survive JSON") {
  for (const auto& spec : corpus_specs()) {
    const GenSpec back = gen_spec_from_json(to_json(spec));
    CHECK(to_json(back) == to_json(spec));
  }
  CHECK_THROWS_AS(gen_spec_from_json(Json{{"kind", "nonsense"}}), InputError);
}
