#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace grenoble::testing {

namespace {

bool adj(const Graph& g, VertexId u, VertexId v) { return g.adjacent(u, v); }

bool chordless_extension(const Graph& g, const IdPath& p, VertexId next) {
  if (std::find(p.begin(), p.end(), next) != p.end()) return false;
  if (!adj(g, p.back(), next)) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (adj(g, p[k], next)) return false;
  }
  return true;
}

bool induced_cycle(const Graph& g, const VertexSet& s) {
  if (s.size() < 3) return false;
  for (VertexId v : s) {
    int d = 0;
    for (VertexId w : s) d += w != v && adj(g, v, w);
    if (d != 2) return false;
  }
  // Connected: walk from the first vertex.
  std::set<VertexId> seen{s[0]};
  std::vector<VertexId> stack{s[0]};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : s) {
      if (w != v && adj(g, v, w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == s.size();
}

bool color_from(const Graph& g, const std::vector<VertexId>& order, std::size_t at, int k, int used,
                std::vector<std::pair<VertexId, int>>& colors) {
  if (at == order.size()) return true;
  const VertexId v = order[at];
  // A fresh color is only tried once: the names of unused colors are
  // interchangeable.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (const auto& [w, cw] : colors) clash = clash || (cw == c && adj(g, v, w));
    if (clash) continue;
    colors.emplace_back(v, c);
    if (color_from(g, order, at + 1, k, std::max(used, c + 1), colors)) return true;
    colors.pop_back();
  }
  return false;
}

VertexSet largest_clique(const Graph& g) {
  VertexSet best;
  VertexSet q;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (q.size() > best.size()) best = q;
    for (std::size_t i = from; i < g.ids().size(); ++i) {
      const VertexId v = g.ids()[i];
      if (std::all_of(q.begin(), q.end(), [&](VertexId w) { return adj(g, v, w); })) {
        q.push_back(v);
        grow(i + 1);
        q.pop_back();
      }
    }
  };
  grow(0);
  return best;
}

// A largest clique first, then repeatedly the vertex with the most
// neighbors already placed.
std::vector<VertexId> coloring_order(const Graph& g) {
  std::vector<VertexId> order = largest_clique(g);
  std::set<VertexId> placed(order.begin(), order.end());
  while (order.size() < g.ids().size()) {
    VertexId pick = -1;
    int most = -1;
    for (VertexId v : g.ids()) {
      if (placed.count(v)) continue;
      int seen = 0;
      for (VertexId w : order) seen += adj(g, v, w);
      if (seen > most) {
        most = seen;
        pick = v;
      }
    }
    order.push_back(pick);
    placed.insert(pick);
  }
  return order;
}

} // namespace

std::vector<IdPath> naive_chordless_paths(const Graph& g, VertexId a, VertexId b) {
  std::vector<IdPath> out;
  std::function<void(IdPath&)> grow = [&](IdPath& p) {
    for (VertexId v : g.ids()) {
      if (!chordless_extension(g, p, v)) continue;
      p.push_back(v);
      if (v == b) {
        out.push_back(p);
      } else {
        grow(p);
      }
      p.pop_back();
    }
  };
  IdPath start{a};
  grow(start);
  return out;
}

std::vector<VertexSet> subset_holes(const Graph& g, int min_len) {
  std::vector<VertexSet> out;
  const int n = g.size();
  for (Mask m = 0; m < bit(n); ++m) {
    if (popcount(m) < std::max(min_len, 4)) continue;
    const VertexSet s = g.ids_of(m);
    if (induced_cycle(g, s)) out.push_back(s);
  }
  return out;
}

bool subset_has_square(const Graph& g) {
  const auto& ids = g.ids();
  const std::size_t n = ids.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          if (induced_cycle(g, {ids[a], ids[b], ids[c], ids[d]})) return true;
        }
      }
    }
  }
  return false;
}

bool subset_has_odd_hole(const Graph& g) {
  for (const auto& h : subset_holes(g, 5)) {
    if (h.size() % 2 == 1) return true;
  }
  return false;
}

bool subset_is_berge(const Graph& g) {
  return !subset_has_odd_hole(g) && !subset_has_odd_hole(g.complement());
}

bool naive_even_pair(const Graph& g, VertexId a, VertexId b) {
  for (const auto& p : naive_chordless_paths(g, a, b)) {
    if (p.size() % 2 == 0) return false;
  }
  return true;
}

int plain_chromatic_number(const Graph& g) {
  if (g.empty()) return 0;
  const auto order = coloring_order(g);
  for (int k = 1;; ++k) {
    std::vector<std::pair<VertexId, int>> colors;
    if (color_from(g, order, 0, k, 0, colors)) return k;
  }
}

int plain_clique_number(const Graph& g) { return static_cast<int>(largest_clique(g).size()); }

bool is_clique_ids(const Graph& g, const VertexSet& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (!adj(g, q[i], q[j])) return false;
    }
  }
  return true;
}

bool proper(const Graph& g, const std::vector<std::pair<VertexId, int>>& colors) {
  for (const auto& [u, cu] : colors) {
    for (const auto& [v, cv] : colors) {
      if (u != v && cu == cv && adj(g, u, v)) return false;
    }
  }
  return true;
}

Graph hand_contract(const Graph& g, VertexId a, VertexId b, VertexId fresh) {
  std::vector<VertexId> ids;
  for (VertexId v : g.ids()) {
    if (v != a && v != b) ids.push_back(v);
  }
  ids.push_back(fresh);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [u, v] : g.edges()) {
    if (u == a || u == b) u = fresh;
    if (v == a || v == b) v = fresh;
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(ids.begin(), ids.end());
  return Graph(ids, edges);
}

bool naive_order_less(const Graph& g, Mask removed, VertexId base, VertexId x, VertexId y) {
  const Graph h = g.induced(g.all() & ~removed);
  for (const auto& p : naive_chordless_paths(h, x, base)) {
    if (p.size() % 2 == 0 && p.size() >= 2 && p[1] == y) return true;
  }
  return false;
}

int subset_prism_parities(const Graph& g) {
  std::vector<VertexSet> triangles;
  const auto& ids = g.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      for (std::size_t k = j + 1; k < ids.size(); ++k) {
        if (is_clique_ids(g, {ids[i], ids[j], ids[k]})) triangles.push_back({ids[i], ids[j], ids[k]});
      }
    }
  }
  int parities = 0;
  for (const auto& s : triangles) {
    for (const auto& t : triangles) {
      if (std::any_of(s.begin(), s.end(), [&](VertexId v) {
            return std::find(t.begin(), t.end(), v) != t.end();
          })) {
        continue;
      }
      VertexSet perm = t;
      do {
        // Path i joins s[i] to perm[i]; the triangle edges are the only
        // edges allowed between different paths.
        std::vector<std::vector<IdPath>> options(3);
        for (int i = 0; i < 3; ++i) options[i] = naive_chordless_paths(g, s[i], perm[i]);
        for (const auto& p0 : options[0]) {
          for (const auto& p1 : options[1]) {
            for (const auto& p2 : options[2]) {
              const std::array<const IdPath*, 3> ps{&p0, &p1, &p2};
              bool ok = true;
              for (int i = 0; i < 3 && ok; ++i) {
                for (int j = i + 1; j < 3 && ok; ++j) {
                  for (std::size_t x = 0; x < ps[i]->size() && ok; ++x) {
                    for (std::size_t y = 0; y < ps[j]->size() && ok; ++y) {
                      const VertexId u = (*ps[i])[x];
                      const VertexId v = (*ps[j])[y];
                      if (u == v) {
                        ok = false;
                      } else if (adj(g, u, v)) {
                        const bool ends_a = x == 0 && y == 0;
                        const bool ends_b = x + 1 == ps[i]->size() && y + 1 == ps[j]->size();
                        ok = ends_a || ends_b;
                      }
                    }
                  }
                }
              }
              if (!ok) continue;
              // Paths of length 0 would merge the triangles.
              if (p0.size() < 2 || p1.size() < 2 || p2.size() < 2) continue;
              const int par0 = static_cast<int>(p0.size() - 1) % 2;
              const int par1 = static_cast<int>(p1.size() - 1) % 2;
              const int par2 = static_cast<int>(p2.size() - 1) % 2;
              parities |= par0 == par1 && par1 == par2 ? (par0 == 0 ? 1 : 2) : 4;
            }
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return parities;
}

namespace {

bool in(const VertexSet& s, VertexId v) { return std::find(s.begin(), s.end(), v) != s.end(); }

bool distinct_members(const Graph& g, const VertexSet& vs) {
  std::set<VertexId> seen;
  for (VertexId v : vs) {
    if (!g.contains(v) || !seen.insert(v).second) return false;
  }
  return true;
}

// Cycle v0 v1 ... v(k-1) where consecutive vertices are adjacent exactly
// when `edges` is true.
bool cyclic(const Graph& g, const VertexSet& vs, bool edges) {
  const std::size_t k = vs.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (adj(g, vs[i], vs[j]) != (consecutive == edges)) return false;
    }
  }
  return true;
}

bool chordless_path(const Graph& g, const IdPath& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (adj(g, p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

} // namespace

bool witness_by_hand(const Graph& g, const Witness& w) {
  const VertexSet& vs = w.vertices;
  switch (w.kind) {
  case WitnessKind::square:
    return vs.size() == 4 && distinct_members(g, vs) && cyclic(g, vs, true);
  case WitnessKind::odd_hole:
    return vs.size() >= 5 && vs.size() % 2 == 1 && distinct_members(g, vs) && cyclic(g, vs, true);
  case WitnessKind::odd_antihole:
    return vs.size() >= 5 && vs.size() % 2 == 1 && distinct_members(g, vs) && cyclic(g, vs, false);
  case WitnessKind::odd_prism:
  case WitnessKind::even_prism: {
    if (vs.size() != 6 || w.paths.size() != 3) return false;
    VertexSet all;
    for (int i = 0; i < 3; ++i) {
      const IdPath& p = w.paths[static_cast<std::size_t>(i)].vertices;
      if (p.size() < 2 || p.front() != vs[static_cast<std::size_t>(i)] ||
          p.back() != vs[static_cast<std::size_t>(i + 3)] || !chordless_path(g, p)) {
        return false;
      }
      const bool odd = (p.size() - 1) % 2 == 1;
      if (odd != (w.kind == WitnessKind::odd_prism)) return false;
      all.insert(all.end(), p.begin(), p.end());
    }
    if (!distinct_members(g, all)) return false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const IdPath& p = w.paths[static_cast<std::size_t>(i)].vertices;
        const IdPath& q = w.paths[static_cast<std::size_t>(j)].vertices;
        for (std::size_t x = 0; x < p.size(); ++x) {
          for (std::size_t y = 0; y < q.size(); ++y) {
            const bool triangle = (x == 0 && y == 0) || (x + 1 == p.size() && y + 1 == q.size());
            if (adj(g, p[x], q[y]) != triangle) return false;
          }
        }
      }
    }
    return true;
  }
  default:
    return false;
  }
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  std::set<VertexId> seen(removed.begin(), removed.end());
  for (VertexId s : g.ids()) {
    if (seen.count(s)) continue;
    VertexSet comp{s};
    seen.insert(s);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (VertexId w : g.ids()) {
        if (!seen.count(w) && adj(g, comp[k], w)) {
          seen.insert(w);
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

std::vector<IdPath> paths_through(const Graph& g, VertexId a, VertexId b, const VertexSet& interior) {
  std::vector<IdPath> out;
  IdPath p{a};
  std::function<void()> grow = [&] {
    for (VertexId next : g.ids()) {
      if (next != b && !in(interior, next)) continue;
      if (!chordless_extension(g, p, next)) continue;
      p.push_back(next);
      if (next == b) {
        out.push_back(p);
      } else {
        grow();
      }
      p.pop_back();
    }
  };
  if (a != b) grow();
  return out;
}

VertexSet naive_majors(const Graph& g, const std::array<VertexSet, 9>& sets) {
  VertexSet inside;
  for (const auto& s : sets) inside.insert(inside.end(), s.begin(), s.end());
  std::array<std::vector<IdPath>, 3> rungs;
  for (std::size_t i = 0; i < 3; ++i) {
    for (VertexId a : sets[3 * i]) {
      for (VertexId b : sets[3 * i + 2]) {
        for (auto& r : paths_through(g, a, b, sets[3 * i + 1])) rungs[i].push_back(std::move(r));
      }
    }
  }
  VertexSet out;
  for (VertexId x : g.ids()) {
    if (in(inside, x)) continue;
    // Per strip, which (sees the A end, sees the B end) patterns occur.
    std::array<std::array<bool, 4>, 3> patterns{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& r : rungs[i]) {
        patterns[i][static_cast<std::size_t>(adj(g, x, r.front()) + 2 * adj(g, x, r.back()))] = true;
      }
    }
    bool major = false;
    for (int p0 = 0; p0 < 4 && !major; ++p0) {
      for (int p1 = 0; p1 < 4 && !major; ++p1) {
        for (int p2 = 0; p2 < 4 && !major; ++p2) {
          if (!patterns[0][p0] || !patterns[1][p1] || !patterns[2][p2]) continue;
          const int as = (p0 & 1) + (p1 & 1) + (p2 & 1);
          const int bs = (p0 >> 1) + (p1 >> 1) + (p2 >> 1);
          major = as >= 2 && bs >= 2;
        }
      }
    }
    if (major) out.push_back(x);
  }
  return out;
}

} // namespace grenoble::testing
