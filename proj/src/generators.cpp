#include "grenoble/generators.hpp"

#include <algorithm>

namespace grenoble {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void check_length(int length) {
  if (length < 2 || length % 2 != 0) {
    throw InputError("rung length " + std::to_string(length) + " must be even and at least 2");
  }
}

void add_clique(EdgeList& edges, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
  }
}

void add_complete(EdgeList& edges, const VertexSet& xs, const VertexSet& ys) {
  for (VertexId x : xs) {
    for (VertexId y : ys) edges.emplace_back(x, y);
  }
}

void add_path(EdgeList& edges, const VertexSet& path) {
  for (std::size_t k = 1; k < path.size(); ++k) edges.emplace_back(path[k - 1], path[k]);
}

Graph add_vertex(const Graph& g, Mask neighbors) {
  std::vector<VertexId> ids = g.ids();
  const VertexId fresh = g.max_id() + 1;
  ids.push_back(fresh);
  EdgeList edges = g.edges();
  for (VertexId v : g.ids_of(neighbors)) edges.emplace_back(v, fresh);
  return Graph(std::move(ids), edges, g.name());
}

// Strips are either cliques on both sides with rungs forming a matching
// (parallel rungs allowed), or independent on both sides with arbitrary rung
// ends; other patterns close odd holes through a neighboring strip. At most
// one strip is independent, since two would induce a square.
// With `fat`, no strip is independent and every clique strip has at least two
// rungs, so the good strip has several A vertices.
HyperprismSpec random_hyperprism_spec(std::uint64_t seed, bool fat = false) {
  std::mt19937_64 rng(seed);
  HyperprismSpec spec;
  const int loose = fat ? 3 : static_cast<int>(draw_below(rng, 5));
  const auto length = [&] { return draw_below(rng, 4) == 0 ? 4 : 2; };
  for (int i = 0; i < 3; ++i) {
    StripSpec& s = spec.strips[static_cast<std::size_t>(i)];
    if (i == loose) {
      s.a_clique = s.b_clique = false;
      s.a_count = 2 + static_cast<int>(draw_below(rng, 2));
      s.b_count = 1 + static_cast<int>(draw_below(rng, 2));
      const int rungs = std::max(s.a_count, s.b_count) + static_cast<int>(draw_below(rng, 2));
      for (int r = 0; r < rungs; ++r) {
        const int a = r < s.a_count ? r : static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(s.a_count)));
        const int b = r < s.b_count ? r : static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(s.b_count)));
        const bool parallel = std::any_of(s.rungs.begin(), s.rungs.end(), [&](const RungSpec& q) {
          return q.a == a && q.b == b && q.length == 2;
        });
        // Two parallel rungs of length 2 form a square.
        s.rungs.push_back({a, b, parallel ? 4 : length()});
      }
    } else {
      s.a_count = s.b_count = fat ? 2 : 1 + static_cast<int>(draw_below(rng, i == 0 ? 3 : 2));
      for (int r = 0; r < s.a_count; ++r) s.rungs.push_back({r, r, length()});
      if (draw_below(rng, 3) == 0) {
        const int r = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(s.a_count)));
        const int first = s.rungs[static_cast<std::size_t>(r)].length;
        s.rungs.push_back({r, r, first == 2 ? 4 : 2 * static_cast<int>(1 + draw_below(rng, 2))});
      }
    }
  }
  return spec;
}

std::string spec_name(const GenSpec& s) {
  switch (s.kind) {
  case GenSpec::Kind::even_prism:
    return "prism " + std::to_string(s.lengths[0]) + " " + std::to_string(s.lengths[1]) + " " +
           std::to_string(s.lengths[2]);
  case GenSpec::Kind::converging:
    return "converging " + std::to_string(s.lengths[0]) + " " + std::to_string(s.lengths[1]) +
           " " + std::to_string(s.lengths[2]);
  case GenSpec::Kind::random_grenoble:
    return "random n=" + std::to_string(s.n) + " p=" + std::to_string(s.p) + " seed=" +
           std::to_string(s.seed);
  case GenSpec::Kind::violator:
    return "violator " + std::string(to_string(s.violator));
  default:
    return std::string(to_string(s.kind)) + " seed=" + std::to_string(s.seed);
  }
}

} // namespace

Graph gen_even_prism(const std::array<int, 3>& lengths) {
  for (int l : lengths) check_length(l);
  std::vector<VertexId> ids;
  EdgeList edges;
  std::array<VertexId, 3> a{};
  std::array<VertexId, 3> b{};
  VertexId next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = next;
    for (int k = 0; k <= lengths[i]; ++k) {
      ids.push_back(next);
      if (k > 0) edges.emplace_back(next - 1, next);
      ++next;
    }
    b[i] = next - 1;
  }
  add_clique(edges, {a[0], a[1], a[2]});
  add_clique(edges, {b[0], b[1], b[2]});
  return Graph(std::move(ids), edges);
}

GeneratedHyperprism gen_hyperprism_graph(const HyperprismSpec& spec) {
  int loose_a = 0;
  int loose_b = 0;
  for (const auto& s : spec.strips) {
    loose_a += !s.a_clique && s.a_count > 1;
    loose_b += !s.b_clique && s.b_count > 1;
  }
  if (loose_a > 1 || loose_b > 1) {
    throw InputError("two strips with non-clique A (or B) sides: two non-adjacent vertices from "
                     "each induce a square");
  }
  std::vector<VertexId> ids;
  EdgeList edges;
  std::array<VertexSet, 3> as;
  std::array<VertexSet, 3> bs;
  std::array<VertexSet, 3> cs;
  VertexId next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const StripSpec& s = spec.strips[i];
    if (s.a_count < 1 || s.b_count < 1) throw InputError("every strip needs A and B vertices");
    for (int k = 0; k < s.a_count; ++k) as[i].push_back(next++);
    std::vector<VertexSet> interiors;
    for (const auto& r : s.rungs) {
      check_length(r.length);
      if (r.a < 0 || r.a >= s.a_count || r.b < 0 || r.b >= s.b_count) {
        throw InputError("rung end out of range in strip " + std::to_string(i));
      }
      VertexSet inner;
      for (int k = 1; k < r.length; ++k) inner.push_back(next++);
      cs[i].insert(cs[i].end(), inner.begin(), inner.end());
      interiors.push_back(std::move(inner));
    }
    for (int k = 0; k < s.b_count; ++k) bs[i].push_back(next++);
    for (std::size_t r = 0; r < s.rungs.size(); ++r) {
      VertexSet path{as[i][static_cast<std::size_t>(s.rungs[r].a)]};
      path.insert(path.end(), interiors[r].begin(), interiors[r].end());
      path.push_back(bs[i][static_cast<std::size_t>(s.rungs[r].b)]);
      add_path(edges, path);
    }
    if (s.a_clique) add_clique(edges, as[i]);
    if (s.b_clique) add_clique(edges, bs[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      add_complete(edges, as[i], as[j]);
      add_complete(edges, bs[i], bs[j]);
    }
  }
  for (VertexId v = 0; v < next; ++v) ids.push_back(v);
  GeneratedHyperprism out{Graph(std::move(ids), edges), {}};
  out.hyperprism = Hyperprism::from_ids(
      out.graph, {as[0], cs[0], bs[0], as[1], cs[1], bs[1], as[2], cs[2], bs[2]});
  const auto report = validate_hyperprism(out.graph, out.hyperprism);
  if (!report.ok) throw InputError("spec does not give a hyperprism: " + report.axiom + ", " + report.detail);
  return out;
}

Graph gen_converging(const std::array<int, 3>& shape) {
  const auto [i, j, tail] = shape;
  if (i < 2 || j < 2 || i % 2 != 0 || j % 2 != 0 || tail < 1 || tail % 2 != 1) {
    throw InputError("converging rungs need even i, j >= 2 and an odd tail");
  }
  EdgeList edges;
  VertexId next = 0;
  const auto take = [&](int count) {
    VertexSet vs;
    for (int k = 0; k < count; ++k) vs.push_back(next++);
    return vs;
  };
  const VertexSet u = take(i + 1);
  const VertexSet v = take(j + 1);
  VertexSet shared = take(tail + 1);
  add_path(edges, u);
  add_path(edges, v);
  add_path(edges, shared);
  edges.emplace_back(u.back(), shared.front());
  edges.emplace_back(v.back(), shared.front());
  edges.emplace_back(u.back(), v.back());
  // Strip with two A vertices and one B: a2 - x - b2 and a2' - y - b2.
  const VertexSet s2 = take(5);
  add_path(edges, {s2[0], s2[2], s2[4]});
  add_path(edges, {s2[1], s2[3], s2[4]});
  // Strip with one A vertex and two B: a3 - z - b3 and a3 - z' - b3'.
  const VertexSet s3 = take(5);
  add_path(edges, {s3[0], s3[1], s3[3]});
  add_path(edges, {s3[0], s3[2], s3[4]});
  const VertexSet a1{u.front(), v.front()};
  const VertexSet a2{s2[0], s2[1]};
  const VertexSet a3{s3[0]};
  const VertexSet b1{shared.back()};
  const VertexSet b2{s2[4]};
  const VertexSet b3{s3[3], s3[4]};
  add_clique(edges, a1);
  for (const auto& [x, y] : {std::pair{a1, a2}, {a1, a3}, {a2, a3}, {b1, b2}, {b1, b3}, {b2, b3}}) {
    add_complete(edges, x, y);
  }
  std::vector<VertexId> ids;
  for (VertexId k = 0; k < next; ++k) ids.push_back(k);
  return Graph(std::move(ids), edges);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::optional<Graph> gen_random_grenoble(int n, double p, std::uint64_t seed, int attempts) {
  if (n < 0 || n > kMaxVertices) throw InputError("n out of range");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (draw_unit(rng) < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::with_vertices(n, edges);
    if (classify(g).accepted) return g;
  }
  return std::nullopt;
}

Graph gen_violator(WitnessKind kind) {
  switch (kind) {
  case WitnessKind::square: {
    const EdgeList e{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return Graph::with_vertices(4, e, "C4");
  }
  case WitnessKind::odd_hole: {
    const EdgeList e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    return Graph::with_vertices(5, e, "C5");
  }
  case WitnessKind::odd_prism: {
    // K3xK2 holds a square, so the smallest odd prism without one has rungs
    // of length 1, 3 and 3.
    const EdgeList e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3},
                     {1, 6}, {6, 7}, {7, 4}, {2, 8}, {8, 9}, {9, 5}};
    return Graph::with_vertices(10, e, "odd_prism_133");
  }
  default:
    throw InputError("no violator of kind " + std::string(to_string(kind)));
  }
}

std::optional<Graph> gen_decorated(const Graph& base, int extra, double p, std::uint64_t seed,
                                   int attempts) {
  if (!classify(base).accepted) return std::nullopt;
  std::mt19937_64 rng(seed);
  Graph g = base;
  for (int k = 0; k < extra; ++k) {
    bool placed = false;
    for (int t = 0; t < attempts && !placed; ++t) {
      Mask nbrs = 0;
      const auto mode = draw_below(rng, 4);
      if (mode == 0) {
        const int v = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(g.size())));
        nbrs = g.neighbors(v) | bit(v);
      } else if (mode == 1) {
        for (int v = 0; v < g.size(); ++v) {
          if (draw_unit(rng) >= p) nbrs |= bit(v);
        }
      } else {
        for (int v = 0; v < g.size(); ++v) {
          if (draw_unit(rng) < p) nbrs |= bit(v);
        }
      }
      Graph next = add_vertex(g, nbrs);
      if (classify(next).accepted) {
        g = std::move(next);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return g;
}

std::string_view to_string(GenSpec::Kind kind) {
  static constexpr std::array<std::string_view, kGenKinds> kNames = {
      "even_prism", "hyperprism", "random_grenoble", "violator", "decorated_prism",
      "decorated_hyperprism", "converging", "decorated_converging"};
  return kNames[static_cast<std::size_t>(kind)];
}

GenSpec::Kind gen_kind_from_string(std::string_view name) {
  for (int k = 0; k < kGenKinds; ++k) {
    if (to_string(static_cast<GenSpec::Kind>(k)) == name) return static_cast<GenSpec::Kind>(k);
  }
  throw InputError("unknown generator kind " + std::string(name));
}

std::optional<Graph> generate(const GenSpec& spec) {
  std::optional<Graph> g;
  switch (spec.kind) {
  case GenSpec::Kind::even_prism:
    g = gen_even_prism(spec.lengths);
    break;
  case GenSpec::Kind::hyperprism:
    g = gen_hyperprism_graph(spec.hyperprism).graph;
    break;
  case GenSpec::Kind::random_grenoble:
    g = gen_random_grenoble(spec.n, spec.p, spec.seed);
    break;
  case GenSpec::Kind::violator:
    g = gen_violator(spec.violator);
    break;
  case GenSpec::Kind::decorated_prism:
    g = gen_decorated(gen_even_prism(spec.lengths), spec.extra, spec.p, spec.seed);
    break;
  case GenSpec::Kind::decorated_hyperprism:
    g = gen_decorated(gen_hyperprism_graph(spec.hyperprism).graph, spec.extra, spec.p, spec.seed);
    break;
  case GenSpec::Kind::converging:
    g = gen_converging(spec.lengths);
    break;
  case GenSpec::Kind::decorated_converging:
    g = gen_decorated(gen_converging(spec.lengths), spec.extra, spec.p, spec.seed);
    break;
  }
  if (g) g->set_name(spec_name(spec));
  return g;
}

std::vector<GenSpec> corpus_specs() {
  std::vector<GenSpec> out;
  const std::vector<int> lengths = {2, 4, 6, 8};
  std::vector<std::array<int, 3>> triples;
  for (int x : lengths) {
    for (int y : lengths) {
      for (int z : lengths) {
        if (x <= y && y <= z && x + y + z + 3 <= 24) triples.push_back({x, y, z});
      }
    }
  }
  for (const auto& t : triples) {
    GenSpec s;
    s.kind = GenSpec::Kind::even_prism;
    s.lengths = t;
    out.push_back(s);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::hyperprism;
    s.seed = seed;
    s.hyperprism = random_hyperprism_spec(seed);
    out.push_back(s);
  }
  const std::array<double, 3> densities = {0.2, 0.35, 0.5};
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::decorated_prism;
    s.lengths = triples[seed % triples.size()];
    const int base = s.lengths[0] + s.lengths[1] + s.lengths[2] + 3;
    s.extra = std::min(1 + static_cast<int>(seed % 5), 24 - base);
    s.p = densities[seed % densities.size()];
    s.seed = 1000 + seed;
    if (s.extra > 0) out.push_back(s);
  }
  // Small bases leave room for vertices that see most of the prism.
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::decorated_prism;
    s.lengths = {2, 2, 2 + 2 * static_cast<int>(seed % 3)};
    s.extra = 1 + static_cast<int>(seed % 4);
    s.p = densities[seed % densities.size()];
    s.seed = 6000 + seed;
    out.push_back(s);
  }
  for (std::uint64_t seed = 0; seed < 70; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::decorated_hyperprism;
    s.hyperprism = random_hyperprism_spec(100 + seed);
    s.seed = 2000 + seed;
    s.extra = 1 + static_cast<int>(seed % 4);
    s.p = densities[(seed / 2) % densities.size()];
    out.push_back(s);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec s;
    s.kind = seed % 2 == 0 ? GenSpec::Kind::hyperprism : GenSpec::Kind::decorated_hyperprism;
    s.hyperprism = random_hyperprism_spec(200 + seed, true);
    s.seed = 4000 + seed;
    s.extra = 1 + static_cast<int>(seed % 3);
    s.p = densities[seed % densities.size()];
    out.push_back(s);
  }
  std::vector<std::array<int, 3>> shapes;
  for (int i : {2, 4}) {
    for (int j : {2, 4}) {
      for (int tail : {1, 3, 5}) {
        if (i + j + tail + 13 <= 24) shapes.push_back({i, j, tail});
      }
    }
  }
  for (const auto& shape : shapes) {
    GenSpec s;
    s.kind = GenSpec::Kind::converging;
    s.lengths = shape;
    out.push_back(s);
  }
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::decorated_converging;
    s.lengths = shapes[seed % shapes.size()];
    s.extra = std::min(1 + static_cast<int>(seed % 5), 11 - (s.lengths[0] + s.lengths[1] + s.lengths[2]));
    s.p = densities[seed % densities.size()];
    s.seed = 5000 + seed;
    if (s.extra > 0) out.push_back(s);
  }
  const std::array<double, 4> random_p = {0.15, 0.3, 0.5, 0.7};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec s;
    s.kind = GenSpec::Kind::random_grenoble;
    s.n = 6 + static_cast<int>(seed % 9);
    s.p = random_p[seed % random_p.size()];
    s.seed = 3000 + seed;
    out.push_back(s);
  }
  return out;
}

} // namespace grenoble
