#include "grenoble/color.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace grenoble {

namespace {

std::string ids_text(const VertexSet& vs) {
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Coloring clique_coloring(const Graph& g) {
  Coloring c;
  for (int i = 0; i < g.size(); ++i) c.assignment[g.id(i)] = i;
  c.num_colors = g.size();
  return c;
}

ColoredResult leaf(const Graph& g, Coloring c, CliqueWitness q, DecompositionNode::Method m) {
  ColoredResult r;
  r.coloring = std::move(c);
  r.clique = std::move(q);
  r.tree.kind = DecompositionNode::Kind::leaf;
  r.tree.method = m;
  r.tree.graph = g;
  return r;
}

class Solver {
public:
  explicit Solver(const ColorOptions& options) : opt_(options) {}

  ColoredResult solve(const Graph& g) const {
    if (g.empty()) return leaf(g, {}, {}, DecompositionNode::Method::clique);
    if (g.is_clique()) {
      return leaf(g, clique_coloring(g), CliqueWitness{g.ids()}, DecompositionNode::Method::clique);
    }
    if (g.size() <= opt_.base_size) {
      auto [chi, c] = chromatic_number_exact(g);
      return leaf(g, std::move(c), max_clique_exact(g), DecompositionNode::Method::oracle);
    }
    const PrismSearch search = find_prism(g, opt_.budget);
    if (search.odd_hole) throw ClassViolation(*search.odd_hole, "odd hole");
    if (!search.prism) return prism_free(g);
    if (search.prism->parity == Parity::odd) {
      throw ClassViolation(search.prism->to_witness(), "odd prism");
    }
    return decompose(g, *search.prism);
  }

private:
  ColoredResult decompose(const Graph& g, const Prism& seed) const {
    StripContext ctx = make_context(g, grow_maximal(g, seed, opt_.budget), opt_.budget);
    int restarts = 0;
    Orders orders;
    for (;;) {
      auto built = build_orders(ctx);
      if (auto* w = std::get_if<ConvergenceWitness>(&built)) {
        if (++restarts > g.size()) throw LemmaViolation("conv", "more restarts than vertices");
        const Hyperprism next = resolve_convergence(ctx, *w, opt_.budget);
        if (opt_.observer) opt_.observer->on_convergence(ctx, *w, next);
        ctx = make_context(g, next, opt_.budget);
        continue;
      }
      orders = std::get<Orders>(std::move(built));
      break;
    }
    if (opt_.observer) opt_.observer->on_context(ctx, orders);
    const PairList pairs = even_pair_sequence(ctx);
    if (opt_.observer) opt_.observer->on_pairs(ctx, pairs);

    const Split parts = split(g, ctx);
    ColoredResult rx;
    ColoredResult ry;
    if (opt_.parallel) {
      auto fx = std::async(std::launch::async, [&] { return solve(parts.gx); });
      ry = solve(parts.gy);
      rx = fx.get();
    } else {
      rx = solve(parts.gx);
      ry = solve(parts.gy);
    }

    int swaps = 0;
    const Coloring cx = recolor_to_pairs(parts.gx, rx.coloring, pairs, &swaps);
    const Coloring cy = recolor_to_pairs(parts.gy, ry.coloring, pairs, &swaps);
    if (opt_.observer) {
      opt_.observer->on_recolor(parts.gx, rx.coloring, cx, pairs);
      opt_.observer->on_recolor(parts.gy, ry.coloring, cy, pairs);
    }

    ColoredResult out;
    out.coloring = merge(g, cx, cy, parts.shared, pairs);
    out.clique = rx.clique.size() >= ry.clique.size() ? rx.clique : ry.clique;
    if (out.coloring.num_colors != out.clique.size()) {
      throw LemmaViolation("merge", "merged coloring uses more colors than the larger clique");
    }
    DecompositionNode& node = out.tree;
    node.kind = DecompositionNode::Kind::decomposition;
    node.method = DecompositionNode::Method::split;
    node.graph = g;
    node.mark = std::make_pair(g.id(lowest(ctx.hyperprism[0].c)), g.id(lowest(ctx.hyperprism[1].c)));
    node.cutset = parts.shared;
    node.pairs = pairs;
    node.restarts = restarts;
    node.swaps = swaps;
    node.children.push_back(std::move(rx.tree));
    node.children.push_back(std::move(ry.tree));
    return out;
  }

  /// Contract even pairs until a clique (or a small graph) remains, then lift.
  ColoredResult prism_free(const Graph& g) const {
    std::vector<Graph> history;
    Lift lift;
    Graph current = g;
    VertexId fresh = g.max_id() + 1;
    bool fallback = false;
    while (!current.is_clique() && current.size() > opt_.base_size) {
      const auto pair = find_any_even_pair(current, kMaxVertices, opt_.budget);
      if (!pair) {
        fallback = true;
        break;
      }
      if (opt_.observer) opt_.observer->on_contraction(current, pair->first, pair->second);
      auto [next, step] = contract_even_pair(current, pair->first, pair->second, fresh++);
      history.push_back(std::move(current));
      lift.push_back(step);
      current = std::move(next);
    }
    Coloring c;
    CliqueWitness q;
    if (current.is_clique()) {
      c = clique_coloring(current);
      q = CliqueWitness{current.ids()};
    } else {
      c = chromatic_number_exact(current).second;
      q = max_clique_exact(current);
    }
    c = lift_coloring(c, lift);
    for (std::size_t i = lift.size(); i-- > 0;) q = lift_clique(history[i], q, lift[i]);

    using Method = DecompositionNode::Method;
    const Method m = fallback ? Method::oracle_fallback
                              : (lift.empty() ? Method::oracle : Method::contraction);
    ColoredResult r = leaf(g, std::move(c), std::move(q), m);
    r.tree.contractions = static_cast<int>(lift.size());
    return r;
  }

  ColorOptions opt_;
};

void walk(const DecompositionNode& n, const auto& visit) {
  visit(n);
  for (const auto& child : n.children) walk(child, visit);
}

} // namespace

Split split(const Graph& g, const StripContext& ctx) {
  if (!(g == ctx.graph)) throw InputError("context was built on another graph");
  const Strip& s1 = ctx.hyperprism[0];
  const Strip& s2 = ctx.hyperprism[1];
  const Mask cutset = ctx.majors | s1.a | s1.b;
  Mask x = 0;
  Mask y = 0;
  Mask rest = g.all() & ~cutset;
  while (rest != 0) {
    const Mask comp = detail::component_of(g, lowest(rest), rest);
    rest &= ~comp;
    const bool meets_1 = (comp & s1.c) != 0;
    if (meets_1 && (comp & s2.c) != 0) {
      throw LemmaViolation("mabcuts", "a component of G - (M u A1 u B1) meets C1 and C2");
    }
    (meets_1 ? x : y) |= comp;
  }
  if (x == 0 || y == 0) throw LemmaViolation("mabcuts", "one side of the split is empty");
  return Split{g.induced(g.all() & ~y), g.induced(g.all() & ~x), g.ids_of(cutset)};
}

Coloring recolor_to_pairs(const Graph& part, const Coloring& c, const PairList& pairs, int* swaps) {
  std::vector<int> col(static_cast<std::size_t>(part.size()));
  for (int v = 0; v < part.size(); ++v) col[static_cast<std::size_t>(v)] = c[part.id(v)];
  const auto color_of = [&](int v) -> int& { return col[static_cast<std::size_t>(v)]; };
  const auto rename = [&](int i, int j, Mask where) {
    for_each_bit(where, [&](int v) {
      if (color_of(v) == i) color_of(v) = j;
      else if (color_of(v) == j) color_of(v) = i;
    });
  };

  for (int h = 0; h < static_cast<int>(pairs.size()); ++h) {
    const int a = part.index(pairs[static_cast<std::size_t>(h)].first);
    const int b = part.index(pairs[static_cast<std::size_t>(h)].second);
    if (color_of(a) < h || color_of(b) < h) {
      throw LemmaViolation("cx", "pair " + std::to_string(h) + " sees a color of an earlier pair");
    }
    if (color_of(a) != color_of(b)) {
      const int i = color_of(a);
      const int j = color_of(b);
      Mask two_colored = 0;
      for (int v = 0; v < part.size(); ++v) {
        if (color_of(v) == i || color_of(v) == j) two_colored |= bit(v);
      }
      const Mask kempe = detail::component_of(part, a, two_colored);
      if (has(kempe, b)) {
        const Path p = to_path(part, detail::shortest_path(part, a, b, two_colored));
        throw LemmaViolation("cx", "odd path " + ids_text(p.vertices) + " joins pair " +
                                       std::to_string(h));
      }
      rename(i, j, kempe);
      if (swaps) ++*swaps;
    }
    if (color_of(a) != h) rename(color_of(a), h, part.all());
  }

  Coloring out;
  out.num_colors = c.num_colors;
  for (int v = 0; v < part.size(); ++v) out.assignment[part.id(v)] = color_of(v);
  return out;
}

Coloring merge(const Graph& g, const Coloring& c_x, const Coloring& c_y, const VertexSet& shared,
               const PairList& pairs) {
  std::set<VertexId> paired;
  for (const auto& [a, b] : pairs) paired.insert({a, b});
  VertexSet rest;
  for (VertexId v : shared) {
    if (!paired.contains(v)) rest.push_back(v);
  }
  if (!g.is_clique(g.mask_of(rest))) {
    throw LemmaViolation("merge", "M u (B1 minus paired vertices) is not a clique: " + ids_text(rest));
  }

  const int total = std::max(c_x.num_colors, c_y.num_colors);
  std::vector<int> sigma(static_cast<std::size_t>(c_y.num_colors), -1);
  std::vector<bool> used(static_cast<std::size_t>(total), false);
  const auto bind = [&](int from, int to, VertexId at) {
    int& s = sigma[static_cast<std::size_t>(from)];
    if (s == to) return;
    if (s != -1 || used[static_cast<std::size_t>(to)]) {
      throw LemmaViolation("merge", "color renaming conflicts at vertex " + std::to_string(at));
    }
    s = to;
    used[static_cast<std::size_t>(to)] = true;
  };
  for (const auto& [a, b] : pairs) {
    for (VertexId v : {a, b}) bind(c_y[v], c_x[v], v);
  }
  for (VertexId z : rest) bind(c_y[z], c_x[z], z);
  int next = 0;
  for (int& s : sigma) {
    if (s != -1) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    s = next;
    used[static_cast<std::size_t>(next)] = true;
  }

  Coloring out;
  out.num_colors = total;
  for (VertexId v : g.ids()) {
    const auto it = c_x.assignment.find(v);
    out.assignment[v] = it != c_x.assignment.end() ? it->second
                                                   : sigma[static_cast<std::size_t>(c_y[v])];
  }
  for (const auto& [u, v] : g.edges()) {
    if (out[u] == out[v]) {
      throw LemmaViolation("merge", "merged coloring is improper on edge " + std::to_string(u) +
                                        " " + std::to_string(v));
    }
  }
  return out;
}

std::pair<Graph, Contraction> contract_even_pair(const Graph& g, VertexId a, VertexId b,
                                                 VertexId fresh) {
  if (a == b || g.adjacent(a, b)) throw InputError("contracted vertices must be distinct and non-adjacent");
  if (fresh < 0) fresh = g.max_id() + 1;
  if (g.contains(fresh)) throw InputError("fresh id " + std::to_string(fresh) + " is taken");
  std::vector<VertexId> ids;
  for (VertexId v : g.ids()) {
    if (v != a && v != b) ids.push_back(v);
  }
  ids.push_back(fresh);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : g.edges()) {
    const bool hit_u = u == a || u == b;
    const bool hit_v = v == a || v == b;
    if (hit_u && !hit_v) edges.emplace_back(fresh, v);
    else if (hit_v && !hit_u) edges.emplace_back(u, fresh);
    else if (!hit_u) edges.emplace_back(u, v);
  }
  return {Graph(std::move(ids), edges, g.name()), Contraction{a, b, fresh}};
}

Coloring lift_coloring(const Coloring& c, const Lift& lift) {
  Coloring out = c;
  for (auto it = lift.rbegin(); it != lift.rend(); ++it) {
    const int color = out[it->merged];
    out.assignment.erase(it->merged);
    out.assignment[it->x] = color;
    out.assignment[it->y] = color;
  }
  return out;
}

CliqueWitness lift_clique(const Graph& original, const CliqueWitness& q, const Contraction& step) {
  if (std::find(q.members.begin(), q.members.end(), step.merged) == q.members.end()) return q;
  VertexSet rest;
  for (VertexId v : q.members) {
    if (v != step.merged) rest.push_back(v);
  }
  for (VertexId end : {step.x, step.y}) {
    const int e = original.index(end);
    if ((original.neighbors(e) & original.mask_of(rest)) == original.mask_of(rest)) {
      rest.push_back(end);
      std::sort(rest.begin(), rest.end());
      return CliqueWitness{rest};
    }
  }
  throw LemmaViolation("contraction", "clique through the merged vertex does not lift");
}

std::string_view to_string(DecompositionNode::Method m) {
  static constexpr std::array<std::string_view, 5> kNames = {"split", "clique", "oracle",
                                                             "contraction", "oracle_fallback"};
  return kNames[static_cast<std::size_t>(m)];
}

ColorStats collect_stats(const DecompositionNode& tree) {
  ColorStats s;
  walk(tree, [&](const DecompositionNode& n) {
    if (n.kind == DecompositionNode::Kind::decomposition) ++s.decomposition_nodes;
    else ++s.leaves;
    s.restarts += n.restarts;
    s.kempe_swaps += n.swaps;
    s.contractions += n.contractions;
    s.oracle_fallbacks += n.method == DecompositionNode::Method::oracle_fallback;
  });
  return s;
}

ColoredResult color(const Graph& g, const ColorOptions& options) {
  if (auto square = find_square(g)) throw ClassViolation(*square, "square");
  ColoredResult r = Solver(options).solve(g);
  if (!verify_coloring(g, r.coloring, r.clique)) {
    throw LemmaViolation("main", "coloring and clique do not certify each other");
  }
  return r;
}

TreeBound check_tree_bound(const DecompositionNode& tree) {
  TreeBound out;
  std::set<std::pair<VertexId, VertexId>> marks;
  walk(tree, [&](const DecompositionNode& n) {
    ++out.total_nodes;
    if (n.kind != DecompositionNode::Kind::decomposition) return;
    ++out.decomposition_nodes;
    if (!n.mark) {
      out.ok = false;
      return;
    }
    auto [c1, c2] = *n.mark;
    if (c1 > c2) std::swap(c1, c2);
    if (c1 == c2 || !n.graph.contains(c1) || !n.graph.contains(c2) || n.graph.adjacent(c1, c2) ||
        !marks.emplace(c1, c2).second) {
      out.ok = false;
      if (!out.duplicate) out.duplicate = std::make_pair(c1, c2);
    }
  });
  const int n = tree.graph.size();
  const int pairs = n * (n - 1) / 2;
  if (out.decomposition_nodes > pairs || out.total_nodes > 2 * pairs + 1) out.ok = false;
  return out;
}

} // namespace grenoble
