#include "grenoble/hyperprism.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace grenoble {

namespace {

Mask neighborhood(const Graph& g, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int v) { out |= g.neighbors(v); });
  return out & ~s;
}

std::vector<IndexPath> collect_rungs(const Graph& g, const Strip& s, Budget& budget) {
  std::vector<IndexPath> rungs;
  for_each_bit(s.a, [&](int a) {
    detail::for_each_chordless_path(g, a, s.b, s.c, budget, [&](const IndexPath& p) {
      rungs.push_back(p);
      return true;
    });
  });
  return rungs;
}

bool odd(const IndexPath& p) { return p.size() % 2 == 0; }

/// Witness for an odd rung r of strip i, using the first rung of each other
/// strip: either an odd hole (parities differ) or an odd prism.
Witness odd_rung_witness(const Graph& g, const Hyperprism& h, int i, const IndexPath& r,
                         Budget& budget) {
  std::array<IndexPath, 3> chosen;
  chosen[static_cast<std::size_t>(i)] = r;
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    auto rungs = collect_rungs(g, h[j], budget);
    if (rungs.empty()) {
      throw LemmaViolation("hyperprism", "strip " + std::to_string(j) + " has no rung");
    }
    if (!odd(rungs.front())) {
      IndexPath cycle = r;
      cycle.insert(cycle.end(), rungs.front().rbegin(), rungs.front().rend());
      return Witness{WitnessKind::odd_hole, to_path(g, cycle).vertices, {}};
    }
    chosen[static_cast<std::size_t>(j)] = rungs.front();
  }
  Prism p;
  for (std::size_t k = 0; k < 3; ++k) {
    p.triangle_a[k] = g.id(chosen[k].front());
    p.triangle_b[k] = g.id(chosen[k].back());
    p.paths[k] = to_path(g, chosen[k]);
  }
  p.parity = Parity::odd;
  return p.to_witness();
}

HyperprismReport failure(const Graph& g, std::string axiom, Mask vertices, std::string detail) {
  return HyperprismReport{false, std::move(axiom), g.ids_of(vertices), std::move(detail)};
}

std::optional<HyperprismReport> check_sets(const Graph& g, const Hyperprism& h) {
  Mask seen = 0;
  static constexpr std::array<const char*, 3> kNames = {"A", "C", "B"};
  for (int i = 0; i < 3; ++i) {
    const std::array<Mask, 3> sets = {h[i].a, h[i].c, h[i].b};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string name = std::string(kNames[k]) + std::to_string(i);
      if (sets[k] == 0) return failure(g, "nonempty", 0, name + " is empty");
      if ((sets[k] & ~g.all()) != 0) return failure(g, "nonempty", 0, name + " has unknown vertices");
      if ((sets[k] & seen) != 0) return failure(g, "disjoint", sets[k] & seen, name + " overlaps");
      seen |= sets[k];
    }
  }
  return std::nullopt;
}

std::optional<HyperprismReport> check_cross_edges(const Graph& g, const Hyperprism& h) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      bool bad = false;
      Mask where = 0;
      for_each_bit(h[i].all(), [&](int u) {
        if (bad) return;
        Mask allowed = 0;
        if (has(h[i].a, u)) allowed |= h[j].a;
        if (has(h[i].b, u)) allowed |= h[j].b;
        if ((g.neighbors(u) & allowed) != allowed) {
          bad = true;
          where = bit(u) | (allowed & ~g.neighbors(u));
        } else if ((g.neighbors(u) & h[j].all() & ~allowed) != 0) {
          bad = true;
          where = bit(u) | (g.neighbors(u) & h[j].all() & ~allowed);
        }
      });
      if (bad) {
        return failure(g, "cross edges", where,
                       "strips " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  return std::nullopt;
}

Hyperprism place(const Hyperprism& h, int i, Mask into_a, Mask into_c, Mask into_b) {
  Hyperprism out = h;
  out[i].a |= into_a;
  out[i].c |= into_c;
  out[i].b |= into_b;
  return out;
}

struct Candidate {
  int fresh = 0;
  VertexSet ids;
  int strip = 0;
  Mask into_a = 0;
  Mask into_c = 0;
  Mask into_b = 0;
};

/// One growth step: the smallest chain of outside vertices that extends one
/// strip along a new rung and keeps every axiom.
std::optional<Hyperprism> grow_step(const Graph& g, const Hyperprism& h, std::uint64_t budget) {
  const Mask outside = g.all() & ~h.vertices();
  if (outside == 0) return std::nullopt;
  std::vector<Candidate> candidates;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const Mask ends_a = h[j].a | h[k].a;
    const Mask ends_b = h[j].b | h[k].b;
    const Mask others = h[j].all() | h[k].all();
    Mask pool_a = 0;
    Mask pool_b = 0;
    Mask pool_c = 0;
    for_each_bit(outside, [&](int x) {
      const Mask nx = g.neighbors(x) & others;
      if (nx == 0) pool_c |= bit(x);
      else if (nx == ends_a) pool_a |= bit(x);
      else if (nx == ends_b) pool_b |= bit(x);
    });
    if ((pool_a | pool_b | pool_c) == 0) continue;
    Budget steps(budget);
    for_each_bit(h[i].a | pool_a, [&](int a) {
      detail::for_each_chordless_path(
          g, a, h[i].b | pool_b, h[i].c | pool_c, steps, [&](const IndexPath& p) {
            const Mask m = mask_of(p);
            if ((m & outside) == 0) return true;
            Candidate c;
            c.fresh = popcount(m & outside);
            c.ids = g.ids_of(m);
            c.strip = i;
            c.into_a = m & pool_a;
            c.into_b = m & pool_b;
            c.into_c = m & pool_c;
            candidates.push_back(std::move(c));
            return true;
          });
    });
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.fresh, x.ids, x.strip) < std::tie(y.fresh, y.ids, y.strip);
  });
  for (const auto& c : candidates) {
    Hyperprism next = place(h, c.strip, c.into_a, c.into_c, c.into_b);
    if (validate_hyperprism(g, next, budget).ok) return next;
  }
  return std::nullopt;
}

} // namespace

Hyperprism Hyperprism::from_ids(const Graph& g, const std::array<VertexSet, 9>& sets) {
  Hyperprism h;
  for (std::size_t i = 0; i < 3; ++i) {
    h.strips[i].a = g.mask_of(sets[3 * i]);
    h.strips[i].c = g.mask_of(sets[3 * i + 1]);
    h.strips[i].b = g.mask_of(sets[3 * i + 2]);
  }
  return h;
}

std::array<VertexSet, 9> Hyperprism::to_ids(const Graph& g) const {
  std::array<VertexSet, 9> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[3 * i] = g.ids_of(strips[i].a);
    out[3 * i + 1] = g.ids_of(strips[i].c);
    out[3 * i + 2] = g.ids_of(strips[i].b);
  }
  return out;
}

Hyperprism Hyperprism::from_prism(const Graph& g, const Prism& p) {
  Hyperprism h;
  for (std::size_t i = 0; i < 3; ++i) {
    const IndexPath ip = to_index_path(g, p.paths[i]);
    if (ip.size() < 3) throw InputError("prism path " + std::to_string(i) + " has no interior");
    h.strips[i].a = bit(ip.front());
    h.strips[i].b = bit(ip.back());
    h.strips[i].c = mask_of(ip) & ~h.strips[i].a & ~h.strips[i].b;
  }
  return h;
}

Hyperprism Hyperprism::flipped() const {
  Hyperprism h = *this;
  for (auto& s : h.strips) std::swap(s.a, s.b);
  return h;
}

bool precedes(const Hyperprism& lhs, const Hyperprism& rhs) {
  const auto sub = [](Mask x, Mask y) { return (x & ~y) == 0; };
  if (!sub(lhs.c_side(), rhs.c_side())) return false;
  const bool straight = sub(lhs.a_side(), rhs.a_side()) && sub(lhs.b_side(), rhs.b_side());
  const bool crossed = sub(lhs.a_side(), rhs.b_side()) && sub(lhs.b_side(), rhs.a_side());
  return (straight || crossed) && lhs.vertices() != rhs.vertices();
}

HyperprismReport validate_hyperprism(const Graph& g, const Hyperprism& h, std::uint64_t budget) {
  if (auto r = check_sets(g, h)) return *r;
  if (auto r = check_cross_edges(g, h)) return *r;
  Budget steps(budget);
  std::array<std::vector<IndexPath>, 3> rungs;
  for (int i = 0; i < 3; ++i) {
    rungs[static_cast<std::size_t>(i)] = collect_rungs(g, h[i], steps);
    Mask covered = 0;
    for (const auto& r : rungs[static_cast<std::size_t>(i)]) covered |= mask_of(r);
    if (covered != h[i].all()) {
      return failure(g, "rung coverage", h[i].all() & ~covered,
                     "strip " + std::to_string(i) + " has vertices on no rung");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (const auto& r : rungs[static_cast<std::size_t>(i)]) {
      if (odd(r)) {
        return failure(g, "even rungs", mask_of(r),
                       "strip " + std::to_string(i) + " has an odd rung");
      }
    }
  }
  return {};
}

std::vector<Path> enumerate_rungs(const Graph& g, const Hyperprism& h, int strip,
                                  std::uint64_t budget) {
  if (strip < 0 || strip > 2) throw InputError("strip index must be 0, 1 or 2");
  Budget steps(budget);
  std::vector<Path> out;
  for (const auto& r : collect_rungs(g, h[strip], steps)) {
    if (odd(r)) {
      throw ClassViolation(odd_rung_witness(g, h, strip, r, steps),
                           "odd rung in strip " + std::to_string(strip));
    }
    out.push_back(to_path(g, r));
  }
  return out;
}

Mask find_major_neighbors(const Graph& g, const Hyperprism& h, std::uint64_t budget) {
  Budget steps(budget);
  std::array<std::vector<std::pair<int, int>>, 3> ends;
  for (int i = 0; i < 3; ++i) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& r : collect_rungs(g, h[i], steps)) pairs.emplace(r.front(), r.back());
    ends[static_cast<std::size_t>(i)].assign(pairs.begin(), pairs.end());
  }
  Mask majors = 0;
  for_each_bit(g.all() & ~h.vertices(), [&](int x) {
    // Per strip, which (a adjacent, b adjacent) combinations some end pair offers.
    std::array<unsigned, 3> kinds{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& [a, b] : ends[i]) {
        kinds[i] |= 1U << (2 * int(g.adjacent_at(x, a)) + int(g.adjacent_at(x, b)));
      }
    }
    for (unsigned k0 = 0; k0 < 4; ++k0) {
      for (unsigned k1 = 0; k1 < 4; ++k1) {
        for (unsigned k2 = 0; k2 < 4; ++k2) {
          if (!(kinds[0] >> k0 & 1U) || !(kinds[1] >> k1 & 1U) || !(kinds[2] >> k2 & 1U)) continue;
          const unsigned as = (k0 >> 1) + (k1 >> 1) + (k2 >> 1);
          const unsigned bs = (k0 & 1U) + (k1 & 1U) + (k2 & 1U);
          if (as >= 2 && bs >= 2) majors |= bit(x);
        }
      }
    }
  });
  return majors;
}

Mask major_certificate(const Graph& g, const Hyperprism& h) {
  Mask out = 0;
  for_each_bit(g.all() & ~h.vertices(), [&](int x) {
    int as = 0;
    int bs = 0;
    for (int i = 0; i < 3; ++i) {
      as += (g.neighbors(x) & h[i].a) == h[i].a;
      bs += (g.neighbors(x) & h[i].b) == h[i].b;
    }
    if (as >= 2 && bs >= 2) out |= bit(x);
  });
  return out;
}

Hyperprism grow_maximal(const Graph& g, const Prism& seed, std::uint64_t budget) {
  if (!validate_prism(g, seed)) throw InputError("seed is not a prism of the graph");
  if (seed.parity != Parity::even) throw InputError("seed prism must be even");
  return grow_maximal(g, Hyperprism::from_prism(g, seed), budget);
}

Hyperprism grow_maximal(const Graph& g, const Hyperprism& seed, std::uint64_t budget) {
  const auto report = validate_hyperprism(g, seed, budget);
  if (!report.ok) throw InputError("seed is not a hyperprism: " + report.axiom + ", " + report.detail);
  Hyperprism h = seed;
  while (auto next = grow_step(g, h, budget)) h = *next;
  return h;
}

bool is_good_strip(const Graph& g, const Hyperprism& h, Mask majors, int strip) {
  const Strip& s = h[strip];
  if (!g.is_clique(s.a) || !g.is_clique(s.b)) return false;
  bool complete = true;
  for_each_bit(majors, [&](int m) {
    complete = complete && (g.neighbors(m) & (s.a | s.b)) == (s.a | s.b);
  });
  return complete;
}

int select_good_strip(const Graph& g, const Hyperprism& h, Mask majors) {
  int best = -1;
  for (int i = 0; i < 3; ++i) {
    if (!is_good_strip(g, h, majors, i)) continue;
    if (best < 0 || popcount(h[i].all()) < popcount(h[best].all())) best = i;
  }
  if (best < 0) throw LemmaViolation("good strip", "no strip of the hyperprism is good");
  return best;
}

bool is_local(const Hyperprism& h, Mask x) {
  const auto inside = [x](Mask s) { return (x & ~s) == 0; };
  return inside(h[0].all()) || inside(h[1].all()) || inside(h[2].all()) || inside(h.a_side()) ||
         inside(h.b_side());
}

AttachmentReport check_local_attachments(const Graph& g, const Hyperprism& h, Mask majors) {
  AttachmentReport report;
  Mask rest = g.all() & ~h.vertices() & ~majors;
  while (rest != 0) {
    const Mask comp = detail::component_of(g, lowest(rest), rest);
    rest &= ~comp;
    const Mask attach = neighborhood(g, comp) & h.vertices();
    if (!is_local(h, attach)) {
      report.ok = false;
      report.violations.push_back({g.ids_of(comp), g.ids_of(attach)});
    }
  }
  return report;
}

std::vector<VertexSet> cutset_components(const Graph& g, const Hyperprism& h, Mask majors) {
  std::vector<VertexSet> out;
  Mask rest = g.all() & ~majors & ~h.a_side() & ~h.b_side();
  while (rest != 0) {
    const Mask comp = detail::component_of(g, lowest(rest), rest);
    rest &= ~comp;
    int met = 0;
    for (int i = 0; i < 3; ++i) met += (comp & h[i].c) != 0;
    if (met > 1) {
      throw LemmaViolation("cutset", "a component of G - (M u A u B) meets two strips");
    }
    out.push_back(g.ids_of(comp));
  }
  return out;
}

} // namespace grenoble
