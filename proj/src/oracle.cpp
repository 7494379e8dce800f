#include "grenoble/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "grenoble/detectors.hpp"

namespace grenoble {

namespace {

void check_cap(const Graph& g, int cap) {
  if (g.size() > cap) {
    throw ResourceError("exact solver capped at " + std::to_string(cap) + " vertices, graph has " +
                        std::to_string(g.size()));
  }
}

class CliqueSearch {
public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  Mask run() {
    expand(0, g_.all());
    return best_;
  }

private:
  // Candidates are tried smallest-first with "include" before "exclude", so
  // cliques are met in lexicographic order and only strict improvements are
  // kept.
  void expand(Mask clique, Mask candidates) {
    if (candidates == 0) {
      if (popcount(clique) > popcount(best_)) best_ = clique;
      return;
    }
    if (popcount(clique) + popcount(candidates) <= popcount(best_)) return;
    const int v = lowest(candidates);
    expand(clique | bit(v), candidates & g_.neighbors(v));
    expand(clique, candidates & ~bit(v));
  }

  const Graph& g_;
  Mask best_ = 0;
};

class ColoringSearch {
public:
  ColoringSearch(const Graph& g, std::vector<int> order) : g_(g), order_(std::move(order)) {
    color_.assign(static_cast<std::size_t>(g.size()), -1);
  }

  bool try_colors(int k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    return assign(0, 0);
  }

  const std::vector<int>& colors() const { return color_; }

private:
  bool assign(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    unsigned forbidden = 0;
    for_each_bit(g_.neighbors(v), [&](int w) {
      if (color_[static_cast<std::size_t>(w)] >= 0) forbidden |= 1U << color_[static_cast<std::size_t>(w)];
    });
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & (1U << c)) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (assign(pos + 1, std::max(used, c + 1))) return true;
    }
    color_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> color_;
  int k_ = 0;
};

Coloring to_coloring(const Graph& g, const std::vector<int>& colors) {
  Coloring c;
  for (int i = 0; i < g.size(); ++i) {
    c.assignment[g.id(i)] = colors[static_cast<std::size_t>(i)];
    c.num_colors = std::max(c.num_colors, colors[static_cast<std::size_t>(i)] + 1);
  }
  return c;
}

} // namespace

std::pair<int, Coloring> chromatic_number_exact(const Graph& g, int cap) {
  check_cap(g, cap);
  if (g.empty()) return {0, Coloring{}};
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return g.degree(u) > g.degree(v); });

  // Greedy upper bound in the same order.
  std::vector<int> greedy(static_cast<std::size_t>(g.size()), -1);
  int upper = 0;
  for (int v : order) {
    unsigned forbidden = 0;
    for_each_bit(g.neighbors(v), [&](int w) {
      if (greedy[static_cast<std::size_t>(w)] >= 0) forbidden |= 1U << greedy[static_cast<std::size_t>(w)];
    });
    int c = 0;
    while (forbidden & (1U << c)) ++c;
    greedy[static_cast<std::size_t>(v)] = c;
    upper = std::max(upper, c + 1);
  }

  const int lower = max_clique_exact(g, cap).size();
  ColoringSearch search(g, order);
  for (int k = lower; k < upper; ++k) {
    if (search.try_colors(k)) return {k, to_coloring(g, search.colors())};
  }
  return {upper, to_coloring(g, greedy)};
}

CliqueWitness max_clique_exact(const Graph& g, int cap) {
  check_cap(g, cap);
  CliqueSearch search(g);
  return CliqueWitness{g.ids_of(search.run())};
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(std::max(c.num_colors, 0)), false);
  for (const auto& [v, color] : c.assignment) {
    if (!g.contains(v) || color < 0 || color >= c.num_colors) return false;
    seen[static_cast<std::size_t>(color)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (c.assignment.at(u) == c.assignment.at(v)) return false;
  }
  return true;
}

bool verify_coloring(const Graph& g, const Coloring& c, const CliqueWitness& q) {
  if (!is_proper_coloring(g, c)) return false;
  for (VertexId v : q.members) {
    if (!g.contains(v)) return false;
  }
  VertexSet members = q.members;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
  if (!g.is_clique(g.mask_of(members))) return false;
  return c.num_colors == q.size();
}

std::optional<std::pair<VertexId, VertexId>> find_any_even_pair(const Graph& g, int cap,
                                                                std::uint64_t budget) {
  check_cap(g, cap);
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent_at(u, v)) continue;
      if (is_even_pair(g, g.id(u), g.id(v), budget)) return std::make_pair(g.id(u), g.id(v));
    }
  }
  return std::nullopt;
}

} // namespace grenoble
