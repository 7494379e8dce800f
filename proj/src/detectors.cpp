#include "grenoble/detectors.hpp"

#include <algorithm>

namespace grenoble {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "square", "odd_hole", "odd_antihole", "odd_prism", "even_prism", "even_pair", "none"};

struct IndexPrism {
  std::array<int, 3> a{};
  std::array<int, 3> b{};
  std::array<IndexPath, 3> paths;
};

using Triangle = std::array<int, 3>;

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int i = 0; i < g.size(); ++i) {
    for_each_bit(g.neighbors(i) & above(i), [&](int j) {
      for_each_bit(g.neighbors(i) & g.neighbors(j) & above(j),
                   [&](int k) { out.push_back({i, j, k}); });
    });
  }
  return out;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

/// Visits every prism of g: triangle pairs in lexicographic order, then the
/// six corner matchings, then the connecting paths in DFS order.
template <typename Visit>
class PrismEnumerator {
public:
  PrismEnumerator(const Graph& g, Budget& budget, Visit& visit)
      : g_(g), budget_(budget), visit_(visit) {}

  void run() {
    const auto tris = triangles(g_);
    for (std::size_t s = 0; s < tris.size(); ++s) {
      const Mask ta = bit(tris[s][0]) | bit(tris[s][1]) | bit(tris[s][2]);
      for (std::size_t t = s + 1; t < tris.size(); ++t) {
        const Mask tb = bit(tris[t][0]) | bit(tris[t][1]) | bit(tris[t][2]);
        if ((ta & tb) != 0) continue;
        for (const auto& perm : kPermutations) {
          current_.a = tris[s];
          for (int i = 0; i < 3; ++i) current_.b[static_cast<std::size_t>(i)] = tris[t][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          if (!corners_compatible()) continue;
          corners_ = ta | tb;
          if (!build(0, 0)) return;
        }
      }
    }
  }

private:
  bool corners_compatible() const {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j && g_.adjacent_at(current_.a[i], current_.b[j])) return false;
      }
    }
    return true;
  }

  bool build(std::size_t i, Mask built) {
    if (i == 3) return visit_(static_cast<const IndexPrism&>(current_));
    const int a = current_.a[i];
    const int b = current_.b[i];
    Mask near = 0;
    for_each_bit(built | (corners_ & ~bit(a) & ~bit(b)), [&](int v) { near |= g_.neighbors(v); });
    const Mask interior = g_.all() & ~corners_ & ~built & ~near;
    return detail::for_each_chordless_path(g_, a, bit(b), interior, budget_,
                                           [&](const IndexPath& p) {
                                             current_.paths[i] = p;
                                             return build(i + 1, built | mask_of(p));
                                           });
  }

  const Graph& g_;
  Budget& budget_;
  Visit& visit_;
  IndexPrism current_;
  Mask corners_ = 0;
};

template <typename Visit>
void for_each_prism(const Graph& g, Budget& budget, Visit&& visit) {
  PrismEnumerator<std::remove_reference_t<Visit>> e(g, budget, visit);
  e.run();
}

int path_length(const IndexPath& p) { return static_cast<int>(p.size()) - 1; }

Prism to_prism(const Graph& g, const IndexPrism& ip) {
  Prism p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.triangle_a[i] = g.id(ip.a[i]);
    p.triangle_b[i] = g.id(ip.b[i]);
    p.paths[i] = to_path(g, ip.paths[i]);
  }
  p.parity = path_length(ip.paths[0]) % 2 == 0 ? Parity::even : Parity::odd;
  return p;
}

/// Parity of all three paths, or nullopt when they disagree.
std::optional<Parity> common_parity(const IndexPrism& ip) {
  const int p0 = path_length(ip.paths[0]) % 2;
  if (path_length(ip.paths[1]) % 2 != p0 || path_length(ip.paths[2]) % 2 != p0) return std::nullopt;
  return p0 == 0 ? Parity::even : Parity::odd;
}

/// Two paths of different parity together with the triangle edges at both
/// ends form an odd hole.
Witness mismatched_hole(const Graph& g, const IndexPrism& ip) {
  std::size_t i = 0;
  std::size_t j = 1;
  while (path_length(ip.paths[i]) % 2 == path_length(ip.paths[j]) % 2) {
    if (++j == 3) j = ++i + 1;
  }
  IndexPath cycle = ip.paths[i];
  cycle.insert(cycle.end(), ip.paths[j].rbegin(), ip.paths[j].rend());
  Witness w;
  w.kind = WitnessKind::odd_hole;
  w.vertices = to_path(g, cycle).vertices;
  return w;
}

} // namespace

std::string_view to_string(WitnessKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

WitnessKind witness_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<WitnessKind>(i);
  }
  throw InputError("unknown witness kind '" + std::string(name) + "'");
}

VertexSet Prism::vertices() const {
  VertexSet out;
  for (const auto& p : paths) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

Witness Prism::to_witness() const {
  Witness w;
  w.kind = parity == Parity::odd ? WitnessKind::odd_prism : WitnessKind::even_prism;
  w.vertices = {triangle_a[0], triangle_a[1], triangle_a[2],
                triangle_b[0], triangle_b[1], triangle_b[2]};
  w.paths.assign(paths.begin(), paths.end());
  return w;
}

std::optional<Witness> find_square(const Graph& g) {
  for (int u = 0; u < g.size(); ++u) {
    std::optional<Witness> found;
    for_each_bit(g.all() & above(u) & ~g.neighbors(u), [&](int w) {
      if (found) return;
      const Mask common = g.neighbors(u) & g.neighbors(w);
      for_each_bit(common, [&](int x) {
        if (found) return;
        const Mask opposite = common & above(x) & ~g.neighbors(x);
        if (opposite != 0) {
          found = Witness{WitnessKind::square, {g.id(u), g.id(x), g.id(w), g.id(lowest(opposite))}, {}};
        }
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> find_odd_hole(const Graph& g, std::uint64_t budget) {
  Budget steps(budget);
  std::optional<Witness> found;
  detail::for_each_hole(g, steps, [&](const IndexPath& c) {
    if (c.size() % 2 == 0) return true;
    found = Witness{WitnessKind::odd_hole, to_path(g, c).vertices, {}};
    return false;
  });
  return found;
}

BergeResult is_berge(const Graph& g, std::uint64_t budget) {
  if (auto hole = find_odd_hole(g, budget)) return {false, std::move(hole)};
  if (auto anti = find_odd_hole(g.complement(), budget)) {
    anti->kind = WitnessKind::odd_antihole;
    return {false, std::move(anti)};
  }
  return {true, std::nullopt};
}

PrismSearch find_prism(const Graph& g, std::uint64_t budget) {
  Budget steps(budget);
  std::optional<IndexPrism> even;
  std::optional<IndexPrism> other;
  for_each_prism(g, steps, [&](const IndexPrism& ip) {
    if (common_parity(ip) == Parity::even) {
      even = ip;
      return false;
    }
    if (!other) other = ip;
    return true;
  });
  PrismSearch out;
  if (even) {
    out.prism = to_prism(g, *even);
  } else if (other) {
    if (common_parity(*other)) {
      out.prism = to_prism(g, *other);
    } else {
      out.odd_hole = mismatched_hole(g, *other);
    }
  }
  return out;
}

std::optional<Prism> find_prism_with_parity(const Graph& g, Parity parity, std::uint64_t budget) {
  if (parity == Parity::any) throw InputError("a prism parity must be odd or even");
  Budget steps(budget);
  std::optional<Prism> found;
  for_each_prism(g, steps, [&](const IndexPrism& ip) {
    if (common_parity(ip) != parity) return true;
    found = to_prism(g, ip);
    return false;
  });
  return found;
}

bool is_even_pair(const Graph& g, VertexId a, VertexId b, std::uint64_t budget) {
  const int ai = g.index(a);
  const int bi = g.index(b);
  if (ai == bi) throw InputError("an even pair needs two distinct vertices");
  if (g.adjacent_at(ai, bi)) throw InputError("an even pair needs two non-adjacent vertices");
  Budget steps(budget);
  bool even = true;
  detail::for_each_chordless_path(g, ai, bit(bi), g.all(), steps, [&](const IndexPath& p) {
    if (p.size() % 2 == 0) even = false;  // odd number of edges
    return even;
  });
  return even;
}

Classification classify(const Graph& g, std::uint64_t budget) {
  if (auto sq = find_square(g)) return {false, std::move(sq)};
  if (auto berge = is_berge(g, budget); !berge.berge) return {false, std::move(berge.witness)};
  if (auto prism = find_prism_with_parity(g, Parity::odd, budget)) {
    return {false, prism->to_witness()};
  }
  return {true, std::nullopt};
}

bool validate_prism(const Graph& g, const Prism& p) {
  for (VertexId v : p.vertices()) {
    if (!g.contains(v)) return false;
  }
  std::array<IndexPath, 3> paths;
  Mask used = 0;
  int total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    paths[i] = to_index_path(g, p.paths[i]);
    if (paths[i].size() < 2 || !is_chordless_path(g, paths[i])) return false;
    if (p.paths[i].front() != p.triangle_a[i] || p.paths[i].back() != p.triangle_b[i]) return false;
    used |= mask_of(paths[i]);
    total += static_cast<int>(paths[i].size());
  }
  if (popcount(used) != total) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      for (int u : paths[i]) {
        for (int v : paths[j]) {
          const bool allowed = (u == paths[i].front() && v == paths[j].front()) ||
                               (u == paths[i].back() && v == paths[j].back());
          if (g.adjacent_at(u, v) != allowed) return false;
        }
      }
    }
  }
  const int parity = path_length(paths[0]) % 2;
  for (const auto& path : paths) {
    if (path_length(path) % 2 != parity) return false;
  }
  return (parity == 1) == (p.parity == Parity::odd);
}

bool validate_witness(const Graph& g, const Witness& w) {
  for (VertexId v : w.vertices) {
    if (!g.contains(v)) return false;
  }
  const auto cycle = [&](const Graph& h) {
    IndexPath c;
    for (VertexId v : w.vertices) c.push_back(h.index(v));
    return c;
  };
  switch (w.kind) {
  case WitnessKind::square:
    return w.vertices.size() == 4 && is_hole(g, cycle(g));
  case WitnessKind::odd_hole:
    return w.vertices.size() >= 5 && w.vertices.size() % 2 == 1 && is_hole(g, cycle(g));
  case WitnessKind::odd_antihole: {
    const Graph co = g.complement();
    return w.vertices.size() >= 5 && w.vertices.size() % 2 == 1 && is_hole(co, cycle(co));
  }
  case WitnessKind::odd_prism:
  case WitnessKind::even_prism: {
    if (w.vertices.size() != 6 || w.paths.size() != 3) return false;
    Prism p;
    for (std::size_t i = 0; i < 3; ++i) {
      p.triangle_a[i] = w.vertices[i];
      p.triangle_b[i] = w.vertices[i + 3];
      p.paths[i] = w.paths[i];
    }
    p.parity = w.kind == WitnessKind::odd_prism ? Parity::odd : Parity::even;
    return validate_prism(g, p);
  }
  case WitnessKind::even_pair:
    return w.vertices.size() == 2 && w.vertices[0] != w.vertices[1] &&
           !g.adjacent(w.vertices[0], w.vertices[1]) &&
           is_even_pair(g, w.vertices[0], w.vertices[1]);
  case WitnessKind::none:
    return w.vertices.empty();
  }
  return false;
}

} // namespace grenoble
