#include "grenoble/audit.hpp"

namespace grenoble {

namespace {

std::string at(const Graph& g, const std::string& what) {
  return what + " (graph " + std::to_string(g.size()) + " vertices, hash " +
         std::to_string(structural_hash(g)) + ")";
}

} // namespace

std::vector<std::string> check_hyperprism_lemmas(const StripContext& ctx) {
  std::vector<std::string> out;
  const Graph& g = ctx.graph;
  const Hyperprism& h = ctx.hyperprism;
  const auto report = validate_hyperprism(g, h);
  if (!report.ok) out.push_back(at(g, "hyperprism invalid: " + report.axiom));

  for_each_bit(ctx.majors, [&](int m) {
    int as = 0;
    int bs = 0;
    for (int i = 0; i < 3; ++i) {
      as += (g.neighbors(m) & h[i].a) == h[i].a;
      bs += (g.neighbors(m) & h[i].b) == h[i].b;
    }
    if (as < 2 || bs < 2) out.push_back(at(g, "xaabb: major " + std::to_string(g.id(m))));
  });
  if (major_certificate(g, h) != ctx.majors) out.push_back(at(g, "xaabb: major set differs from certificate"));
  if (!is_good_strip(g, h, ctx.majors, 0)) out.push_back(at(g, "maabb: chosen strip is not good"));
  if (!check_local_attachments(g, h, ctx.majors).ok) out.push_back(at(g, "spgt2106: non-local attachments"));
  try {
    cutset_components(g, h, ctx.majors);
  } catch (const LemmaViolation& e) {
    out.push_back(at(g, std::string("mabcuts: ") + e.what()));
  }
  for (int i = 0; i < 3; ++i) {
    try {
      enumerate_rungs(g, h, i);
    } catch (const ClassViolation& e) {
      out.push_back(at(g, std::string("parity: ") + e.what()));
    }
  }
  if (find_convergence(ctx)) out.push_back(at(g, "conv: two 1-rungs converge"));
  return out;
}

std::vector<std::string> check_orders(const StripContext& ctx, const Orders& orders,
                                      int* twist_checks) {
  std::vector<std::string> out;
  const Graph& g = ctx.graph;
  for (const auto& [base, rel] : orders) {
    const VertexSet& side = has(ctx.strip().b, g.index(base)) ? ctx.a_side : ctx.b_side;
    for (VertexId x : side) {
      if (rel.less(x, x)) out.push_back(at(g, "order: reflexive pair at base " + std::to_string(base)));
      for (VertexId y : side) {
        if (x != y && rel.less(x, y) && rel.less(y, x)) {
          out.push_back(at(g, "order: not antisymmetric at base " + std::to_string(base)));
        }
        for (VertexId z : side) {
          if (rel.less(x, y) && rel.less(y, z) && x != z && !rel.less(x, z)) {
            out.push_back(at(g, "order: not transitive at base " + std::to_string(base)));
          }
        }
      }
    }
  }
  for (VertexId a : ctx.a_side) {
    for (VertexId u : ctx.a_side) {
      for (VertexId b : ctx.b_side) {
        for (VertexId v : ctx.b_side) {
          if (a == u || b == v) continue;
          if (twist_checks) ++*twist_checks;
          if (orders.at(b).less(a, u) && orders.at(u).less(b, v) && !orders.at(v).less(a, u)) {
            out.push_back(at(g, "twist fails"));
          }
        }
      }
    }
  }
  return out;
}

void AuditObserver::fail(const std::string& what) {
  std::lock_guard lock(mutex_);
  violations_.push_back(what);
}

void AuditObserver::on_context(const StripContext& ctx, const Orders& orders) {
  int twists = 0;
  auto found = check_hyperprism_lemmas(ctx);
  auto order_issues = check_orders(ctx, orders, &twists);
  found.insert(found.end(), order_issues.begin(), order_issues.end());
  int rungs = 0;
  for (int i = 0; i < 3; ++i) rungs += static_cast<int>(enumerate_rungs(ctx.graph, ctx.hyperprism, i).size());
  std::lock_guard lock(mutex_);
  ++counts_.contexts;
  counts_.orders += static_cast<int>(orders.size());
  counts_.twist_checks += twists;
  counts_.rungs += rungs;
  violations_.insert(violations_.end(), found.begin(), found.end());
}

void AuditObserver::on_convergence(const StripContext& ctx, const ConvergenceWitness& w,
                                   const Hyperprism& resolved) {
  if (!is_convergence(ctx, w)) fail(at(ctx.graph, "conv: witness does not converge"));
  if (!validate_hyperprism(ctx.graph, resolved).ok) fail(at(ctx.graph, "conv: resolved hyperprism invalid"));
  std::lock_guard lock(mutex_);
  ++counts_.convergences;
}

void AuditObserver::on_pairs(const StripContext& ctx, const PairList& pairs) {
  const Graph& g = ctx.graph;
  Mask removed = 0;
  for (const auto& [a, b] : pairs) {
    const Graph rest = g.induced(g.all() & ~removed);
    if (rest.adjacent(a, b) || !is_even_pair(rest, a, b)) {
      fail(at(g, "a1b1: {" + std::to_string(a) + ", " + std::to_string(b) + "} is not an even pair"));
    }
    removed |= bit(g.index(a)) | bit(g.index(b));
  }
  std::lock_guard lock(mutex_);
  counts_.pairs += static_cast<int>(pairs.size());
}

void AuditObserver::on_recolor(const Graph& part, const Coloring& before, const Coloring& after,
                               const PairList& pairs) {
  if (!is_proper_coloring(part, after)) fail(at(part, "cx: recoloring is improper"));
  if (after.num_colors != before.num_colors) fail(at(part, "cx: color count changed"));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (after[a] != after[b] || after[a] != static_cast<int>(i)) {
      fail(at(part, "cx: pair " + std::to_string(i) + " not synchronized"));
    }
  }
  std::lock_guard lock(mutex_);
  ++counts_.recolorings;
}

void AuditObserver::on_contraction(const Graph& g, VertexId a, VertexId b) {
  if (g.adjacent(a, b) || !is_even_pair(g, a, b)) fail(at(g, "contraction of a non-even pair"));
  std::lock_guard lock(mutex_);
  ++counts_.contractions;
}

AuditCounts AuditObserver::counts() const {
  std::lock_guard lock(mutex_);
  return counts_;
}

std::vector<std::string> AuditObserver::violations() const {
  std::lock_guard lock(mutex_);
  return violations_;
}

} // namespace grenoble
