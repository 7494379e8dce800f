#include "grenoble/paths.hpp"

#include <algorithm>
#include <atomic>

namespace grenoble {

namespace {
std::atomic<std::uint64_t> g_default_budget{kDefaultBudget};
}

std::uint64_t default_budget() { return g_default_budget.load(); }
void set_default_budget(std::uint64_t steps) { g_default_budget.store(steps); }

Graph induced_subgraph(const Graph& g, const VertexSet& s) { return g.induced(g.mask_of(s)); }

namespace {
Mask checked_set(const Graph& g, VertexId x, const VertexSet& t) {
  const int xi = g.index(x);
  const Mask tm = g.mask_of(t);
  if (has(tm, xi)) throw InputError("vertex " + std::to_string(x) + " belongs to the set");
  return tm;
}
} // namespace

bool is_complete_to(const Graph& g, VertexId x, const VertexSet& t) {
  const Mask tm = checked_set(g, x, t);
  return (tm & ~g.neighbors(g.index(x))) == 0;
}

bool is_anticomplete_to(const Graph& g, VertexId x, const VertexSet& t) {
  const Mask tm = checked_set(g, x, t);
  return (tm & g.neighbors(g.index(x))) == 0;
}

std::vector<Path> enumerate_chordless_paths(const Graph& g, VertexId a, VertexId b,
                                            std::uint64_t budget) {
  const int ai = g.index(a);
  const int bi = g.index(b);
  if (ai == bi) throw InputError("path endpoints must differ");
  Budget steps(budget);
  std::vector<Path> out;
  detail::for_each_chordless_path(g, ai, bit(bi), g.all(), steps, [&](const IndexPath& p) {
    out.push_back(to_path(g, p));
    return true;
  });
  return out;
}

std::vector<Path> enumerate_chordless_cycles(const Graph& g, int min_len, Parity parity,
                                             std::uint64_t budget) {
  if (min_len < 4) throw InputError("holes have at least four vertices");
  Budget steps(budget);
  std::vector<Path> out;
  detail::for_each_hole(g, steps, [&](const IndexPath& c) {
    const int len = static_cast<int>(c.size());
    if (len >= min_len && parity_matches(parity, len)) out.push_back(to_path(g, c));
    return true;
  });
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  Mask left = g.all() & ~g.mask_of(removed);
  std::vector<VertexSet> out;
  while (left != 0) {
    const Mask comp = detail::component_of(g, lowest(left), left);
    out.push_back(g.ids_of(comp));
    left &= ~comp;
  }
  return out;
}

namespace detail {

Mask component_of(const Graph& g, int start, Mask within) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

IndexPath shortest_path(const Graph& g, int from, int to, Mask within) {
  std::vector<int> parent(static_cast<std::size_t>(g.size()), -1);
  Mask seen = bit(from);
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (v == to) break;
    for_each_bit(g.neighbors(v) & within & ~seen, [&](int w) {
      seen |= bit(w);
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    });
  }
  if (!has(seen, to)) return {};
  IndexPath p;
  for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

} // namespace detail
} // namespace grenoble
