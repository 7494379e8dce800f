#include "grenoble/evenpair.hpp"

#include <algorithm>
#include <tuple>

namespace grenoble {

namespace {

std::vector<IndexPath> strip_rungs(const Graph& g, const Strip& s, Mask removed,
                                   std::uint64_t budget) {
  Budget steps(budget);
  std::vector<IndexPath> out;
  for_each_bit(s.a & ~removed, [&](int a) {
    detail::for_each_chordless_path(g, a, s.b & ~removed, s.c & ~removed, steps,
                                    [&](const IndexPath& p) {
                                      out.push_back(p);
                                      return true;
                                    });
  });
  return out;
}

VertexSet live_ids(const Graph& g, Mask m, Mask removed) { return g.ids_of(m & ~removed); }

/// Rungs of the context meeting the filter, in cache order.
template <typename F>
const IndexPath* first_rung(const StripContext& ctx, F&& keep) {
  for (const auto& r : ctx.rungs) {
    if (keep(r)) return &r;
  }
  return nullptr;
}

/// x <_base y in positions: a rung from y to base that x does not see
/// except at y. Rungs run A -> B, so the end facing base depends on the side.
const IndexPath* order_rung(const StripContext& ctx, int base, int x, int y) {
  const Graph& g = ctx.graph;
  const bool base_in_b = has(ctx.strip().b, base);
  return first_rung(ctx, [&](const IndexPath& r) {
    const int near = base_in_b ? r.front() : r.back();
    const int far = base_in_b ? r.back() : r.front();
    return near == y && far == base && (g.neighbors(x) & mask_of(r) & ~bit(y)) == 0;
  });
}

bool converge(const Graph& g, const IndexPath& r1, const IndexPath& r2) {
  int shared_1 = 0;
  int shared_2 = 0;
  if (r1.back() == r2.back()) {
    shared_1 = static_cast<int>(r1.size()) - 1;
    shared_2 = static_cast<int>(r2.size()) - 1;
  } else if (r1.front() != r2.front()) {
    return false;
  }
  const int u1 = shared_1 == 0 ? r1.back() : r1.front();
  const int u2 = shared_2 == 0 ? r2.back() : r2.front();
  if (u1 == u2) return false;
  return (g.neighbors(u1) & mask_of(r2) & ~bit(u2)) == 0 &&
         (g.neighbors(u2) & mask_of(r1) & ~bit(u1)) == 0;
}

/// Ordering key of a converging pair: union size, then union ids, then paths.
auto convergence_key(const Graph& g, const IndexPath& r1, const IndexPath& r2) {
  const Mask u = mask_of(r1) | mask_of(r2);
  return std::make_tuple(popcount(u), g.ids_of(u), to_path(g, r1).vertices,
                         to_path(g, r2).vertices);
}

ConvergenceWitness to_witness(const Graph& g, const IndexPath& r1, const IndexPath& r2) {
  return ConvergenceWitness{to_path(g, r1), to_path(g, r2)};
}

} // namespace

StripContext make_context(const Graph& g, const Hyperprism& h, Mask majors, int good,
                          std::uint64_t budget) {
  if (good < 0 || good > 2) throw InputError("strip index must be 0, 1 or 2");
  if (!is_good_strip(g, h, majors, good)) {
    throw LemmaViolation("good strip", "strip " + std::to_string(good) + " is not good");
  }
  StripContext ctx;
  ctx.graph = g;
  ctx.good = good;
  ctx.majors = majors;
  int slot = 1;
  ctx.hyperprism[0] = h[good];
  for (int i = 0; i < 3; ++i) {
    if (i != good) ctx.hyperprism[slot++] = h[i];
  }
  if (popcount(ctx.hyperprism[0].a) > popcount(ctx.hyperprism[0].b)) {
    ctx.hyperprism = ctx.hyperprism.flipped();
    ctx.flipped = true;
  }
  ctx.a_side = g.ids_of(ctx.strip().a);
  ctx.b_side = g.ids_of(ctx.strip().b);
  ctx.rungs = strip_rungs(g, ctx.strip(), 0, budget);
  return ctx;
}

StripContext make_context(const Graph& g, const Hyperprism& h, std::uint64_t budget) {
  const Mask majors = find_major_neighbors(g, h, budget);
  return make_context(g, h, majors, select_good_strip(g, h, majors), budget);
}

StripContext without(const StripContext& ctx, VertexId a, VertexId b) {
  StripContext out = ctx;
  const Graph& g = ctx.graph;
  out.removed |= bit(g.index(a)) | bit(g.index(b));
  out.a_side = live_ids(g, out.strip().a, out.removed);
  out.b_side = live_ids(g, out.strip().b, out.removed);
  std::erase_if(out.rungs, [&](const IndexPath& r) { return (mask_of(r) & out.removed) != 0; });
  return out;
}

PathClass classify_path(const StripContext& ctx, const Path& p) {
  const Graph& g = ctx.graph;
  IndexPath ip = to_index_path(g, p);
  const Strip& s1 = ctx.strip();
  if (ip.size() < 2) throw InputError("path must have two ends");
  if (has(s1.b, ip.front()) && has(s1.a, ip.back())) std::reverse(ip.begin(), ip.end());
  if (!has(s1.a, ip.front()) || !has(s1.b, ip.back())) {
    throw InputError("path must run from A1 to B1");
  }
  if (!is_chordless_path(g, ip)) throw InputError("path is not chordless");
  const Mask vp = mask_of(ip);
  if ((vp & ctx.majors) != 0) throw InputError("path meets a major neighbor");
  const auto fail = [&](const std::string& what) {
    std::string detail = what + " for path";
    for (VertexId v : to_path(g, ip).vertices) detail += " " + std::to_string(v);
    return LemmaViolation("path", detail);
  };
  if ((vp & ~ctx.hyperprism.vertices()) != 0) throw fail("path leaves the hyperprism");

  const Mask interior = vp & ~bit(ip.front()) & ~bit(ip.back());
  if ((interior & ~s1.c) == 0) return {PathClass::one_rung, 0};

  if (ip.size() >= 4) {
    const int u = ip[1];
    const int v = ip[ip.size() - 2];
    const Mask inner = interior & ~bit(u) & ~bit(v);
    for (int i = 0; i < 3; ++i) {
      const Strip& s = ctx.hyperprism[i];
      if (has(s.a, u) && has(s.b, v) && (inner & ~s.c) == 0) {
        return {PathClass::interior_is_rung, i};
      }
    }
  }
  const bool odd_length = ip.size() % 2 == 0;
  const bool u_in_a = ip.size() >= 3 && has(s1.a, ip[1]);
  const bool v_in_b = ip.size() >= 3 && has(s1.b, ip[ip.size() - 2]);
  if (odd_length && (vp & ~s1.all()) == 0 && u_in_a != v_in_b) {
    return {PathClass::odd_s1_path, 0};
  }
  throw fail("none of the three path outcomes holds");
}

bool order_less(const StripContext& ctx, VertexId base, VertexId x, VertexId y) {
  const Graph& g = ctx.graph;
  const int b = g.index(base);
  const int i = g.index(x);
  const int j = g.index(y);
  const Strip& s = ctx.strip();
  const Mask side = has(s.b, b) ? s.a : has(s.a, b) ? s.b : Mask{0};
  if (side == 0 || has(ctx.removed, b)) throw InputError("base must be a live vertex of A1 or B1");
  if (i == j || !has(side & ~ctx.removed, i) || !has(side & ~ctx.removed, j)) {
    throw InputError("compared vertices must be distinct live vertices across from the base");
  }
  return order_rung(ctx, b, i, j) != nullptr;
}

bool is_convergence(const StripContext& ctx, const ConvergenceWitness& w) {
  const Graph& g = ctx.graph;
  for (const Path* p : {&w.rung1, &w.rung2}) {
    for (VertexId v : p->vertices) {
      if (!g.contains(v)) return false;
    }
  }
  const IndexPath r1 = to_index_path(g, w.rung1);
  const IndexPath r2 = to_index_path(g, w.rung2);
  const auto is_rung = [&](const IndexPath& r) {
    return std::find(ctx.rungs.begin(), ctx.rungs.end(), r) != ctx.rungs.end();
  };
  return is_rung(r1) && is_rung(r2) && converge(g, r1, r2);
}

std::variant<OrderRelation, ConvergenceWitness> build_order(const StripContext& ctx,
                                                            VertexId base) {
  const Graph& g = ctx.graph;
  const int b = g.index(base);
  const Strip& s = ctx.strip();
  if (has(ctx.removed, b) || !has(s.a | s.b, b)) throw InputError("base must be a live vertex of A1 or B1");
  const VertexSet& elements = has(s.b, b) ? ctx.a_side : ctx.b_side;

  OrderRelation order;
  order.base = base;
  for (VertexId x : elements) {
    for (VertexId y : elements) {
      if (x != y && order_rung(ctx, b, g.index(x), g.index(y)) != nullptr) order.pairs.emplace(x, y);
    }
  }

  // Antisymmetry: x < y and y < x give rungs ending at x and at y that
  // converge at base. Keep the smallest such pair over every witness rung.
  std::optional<std::pair<IndexPath, IndexPath>> best;
  for (const auto& [x, y] : order.pairs) {
    if (x > y || !order.less(y, x)) continue;
    const int i = g.index(x);
    const int j = g.index(y);
    for (const auto& r1 : ctx.rungs) {
      const int near1 = has(s.b, b) ? r1.front() : r1.back();
      const int far1 = has(s.b, b) ? r1.back() : r1.front();
      if (near1 != i || far1 != b || (g.neighbors(j) & mask_of(r1) & ~bit(i)) != 0) continue;
      for (const auto& r2 : ctx.rungs) {
        const int near2 = has(s.b, b) ? r2.front() : r2.back();
        const int far2 = has(s.b, b) ? r2.back() : r2.front();
        if (near2 != j || far2 != b || (g.neighbors(i) & mask_of(r2) & ~bit(j)) != 0) continue;
        if (!best || convergence_key(g, r1, r2) < convergence_key(g, best->first, best->second)) {
          best = std::make_pair(r1, r2);
        }
      }
    }
  }
  if (best) return to_witness(g, best->first, best->second);

  for (const auto& [x, y] : order.pairs) {
    for (VertexId z : elements) {
      if (z == x || !order.less(y, z) || order.less(x, z)) continue;
      // Walk the witness rung of y < z from z towards base; the last vertex x
      // sees decides between an odd rung and a reversed pair.
      const IndexPath* w = order_rung(ctx, b, g.index(y), g.index(z));
      IndexPath path = *w;
      if (!has(s.b, b)) std::reverse(path.begin(), path.end());
      int last = -1;
      for (int k = 0; k < static_cast<int>(path.size()); ++k) {
        if (g.adjacent_at(g.index(x), path[static_cast<std::size_t>(k)])) last = k;
      }
      const std::string triple = std::to_string(x) + " < " + std::to_string(y) + " < " +
                                 std::to_string(z) + " at base " + std::to_string(base);
      if (last > 0 && last % 2 == 0) throw LemmaViolation("order", "odd 1-rung behind " + triple);
      throw LemmaViolation("order", "transitivity fails for " + triple);
    }
  }
  return order;
}

std::variant<Orders, ConvergenceWitness> build_orders(const StripContext& ctx) {
  Orders orders;
  for (const VertexSet* side : {&ctx.b_side, &ctx.a_side}) {
    for (VertexId base : *side) {
      auto result = build_order(ctx, base);
      if (auto* w = std::get_if<ConvergenceWitness>(&result)) return *w;
      orders.emplace(base, std::get<OrderRelation>(std::move(result)));
    }
  }
  return orders;
}

std::optional<ConvergenceWitness> find_convergence(const StripContext& ctx) {
  const Graph& g = ctx.graph;
  std::optional<std::pair<const IndexPath*, const IndexPath*>> best;
  for (std::size_t i = 0; i < ctx.rungs.size(); ++i) {
    for (std::size_t j = i + 1; j < ctx.rungs.size(); ++j) {
      const IndexPath& r1 = ctx.rungs[i];
      const IndexPath& r2 = ctx.rungs[j];
      if (!converge(g, r1, r2)) continue;
      if (!best || convergence_key(g, r1, r2) < convergence_key(g, *best->first, *best->second)) {
        best = std::make_pair(&r1, &r2);
      }
    }
  }
  if (!best) return std::nullopt;
  return to_witness(g, *best->first, *best->second);
}

Hyperprism resolve_convergence(const StripContext& ctx, const ConvergenceWitness& given,
                               std::uint64_t budget) {
  const Graph& g = ctx.graph;
  if (ctx.removed != 0) throw InputError("convergence is resolved on the full graph only");
  if (!is_convergence(ctx, given)) throw InputError("witness rungs do not converge");
  const ConvergenceWitness w = *find_convergence(ctx);

  // Orient both rungs so that they start on the unshared side: u_0 and v_0
  // are distinct, u_p = v_q is the shared end.
  IndexPath u = to_index_path(g, w.rung1);
  IndexPath v = to_index_path(g, w.rung2);
  const bool shared_in_b = u.back() == v.back();
  if (!shared_in_b) {
    std::reverse(u.begin(), u.end());
    std::reverse(v.begin(), v.end());
  }
  const auto first_seeing = [&](const IndexPath& p, const IndexPath& other) {
    const Mask rest = mask_of(other) & ~bit(other.front());
    for (std::size_t k = 0; k < p.size(); ++k) {
      if ((g.neighbors(p[k]) & rest) != 0) return k;
    }
    return p.size();
  };
  const std::size_t i = first_seeing(u, v);
  const std::size_t j = first_seeing(v, u);
  const auto structure_fails = [&] {
    if (i < 2 || j < 2 || i % 2 != 0 || j % 2 != 0 || i + 1 >= u.size() || j + 1 >= v.size()) return true;
    if (!g.adjacent_at(u[i], v[j])) return true;
    return !std::equal(u.begin() + static_cast<std::ptrdiff_t>(i) + 1, u.end(),
                       v.begin() + static_cast<std::ptrdiff_t>(j) + 1, v.end());
  };
  if (structure_fails()) {
    throw LemmaViolation("conv", "converging rungs do not share a tail behind a triangle");
  }

  // Sides as seen from u_0 (near) and u_p (far) in the two other strips.
  const Hyperprism& h = ctx.hyperprism;
  const auto near = [&](int k) { return shared_in_b ? h[k].a : h[k].b; };
  const auto far = [&](int k) { return shared_in_b ? h[k].b : h[k].a; };
  const auto span = [](const IndexPath& p, std::size_t from, std::size_t to) {
    Mask m = 0;
    for (std::size_t k = from; k < to; ++k) m |= bit(p[k]);
    return m;
  };
  Hyperprism table;
  table[0] = Strip{bit(u[0]), span(u, 1, i), bit(u[i])};
  table[1] = Strip{bit(v[0]), span(v, 1, j), bit(v[j])};
  table[2] = Strip{near(1) | near(2), h[1].c | h[2].c | far(1) | far(2) | span(u, i + 2, u.size()),
                   bit(u[i + 1])};
  const auto report = validate_hyperprism(g, table, budget);
  if (!report.ok) {
    throw LemmaViolation("conv", "table is not a hyperprism: " + report.axiom + ", " + report.detail);
  }
  Hyperprism grown = grow_maximal(g, table, budget);
  const Mask majors = find_major_neighbors(g, grown, budget);
  const int good = select_good_strip(g, grown, majors);
  if (popcount(grown[good].all()) >= popcount(ctx.strip().all())) {
    throw LemmaViolation("conv", "good strip did not shrink after convergence");
  }
  return grown;
}

VertexSet d_set(const Orders& orders, const StripContext& ctx, VertexId a, VertexId b) {
  VertexSet out;
  const OrderRelation& rel = orders.at(b);
  for (VertexId x : ctx.a_side) {
    if (x != a && rel.less(x, a)) out.push_back(x);
  }
  return out;
}

std::pair<VertexId, VertexId> extract_even_pair(const StripContext& ctx) {
  auto orders = build_orders(ctx);
  if (std::holds_alternative<ConvergenceWitness>(orders)) {
    throw LemmaViolation("conv", "two 1-rungs converge; resolve before extracting");
  }
  return extract_even_pair(ctx, std::get<Orders>(orders));
}

std::pair<VertexId, VertexId> extract_even_pair(const StripContext& ctx, const Orders& orders) {
  if (ctx.a_side.empty() || ctx.b_side.empty()) throw InputError("strip sides are empty");
  // Smallest u with x < u at `base`, or nullopt when x is maximal there.
  const auto above_at = [&](VertexId base, VertexId x) -> std::optional<VertexId> {
    const OrderRelation& rel = orders.at(base);
    const VertexSet& side = has(ctx.strip().b, ctx.graph.index(base)) ? ctx.a_side : ctx.b_side;
    for (VertexId u : side) {
      if (u == x || !rel.less(x, u)) continue;
      // A maximal element above x exists by finiteness; follow the chain.
      VertexId top = u;
      for (bool moved = true; moved;) {
        moved = false;
        for (VertexId w : side) {
          if (w != top && rel.less(top, w)) {
            top = w;
            moved = true;
            break;
          }
        }
      }
      return top;
    }
    return std::nullopt;
  };

  VertexId a = ctx.a_side.front();
  VertexId b = ctx.b_side.front();
  std::size_t best = 0;
  bool first = true;
  for (VertexId x : ctx.a_side) {
    for (VertexId y : ctx.b_side) {
      const std::size_t d = d_set(orders, ctx, x, y).size();
      if (first || d > best) {
        a = x;
        b = y;
        best = d;
        first = false;
      }
    }
  }

  const std::size_t guard = ctx.a_side.size() * ctx.a_side.size() + 1;
  for (std::size_t step = 0; step <= guard; ++step) {
    const std::size_t before = d_set(orders, ctx, a, b).size();
    if (auto u = above_at(b, a)) {
      a = *u;
    } else if (auto v = above_at(a, b)) {
      if (!above_at(*v, a)) return {a, *v};
      a = *above_at(*v, a);
      b = *v;
    } else {
      return {a, b};
    }
    if (d_set(orders, ctx, a, b).size() <= before) {
      throw LemmaViolation("a1b1", "D(a, b) did not grow");
    }
  }
  throw LemmaViolation("a1b1", "no mutually maximal pair found");
}

std::vector<std::pair<VertexId, VertexId>> even_pair_sequence(const StripContext& ctx) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  StripContext current = ctx;
  const std::size_t k = ctx.a_side.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto pair = extract_even_pair(current);
    pairs.push_back(pair);
    if (i + 1 < k) current = without(current, pair.first, pair.second);
  }
  return pairs;
}

} // namespace grenoble
