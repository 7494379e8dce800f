#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "grenoble/graph.hpp"

namespace grenoble {

/// Default number of partial extensions an enumeration may explore.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Process-wide default budget used when callers pass none. The CLI sets it
/// from GRENOBLE_BUDGET.
std::uint64_t default_budget();
void set_default_budget(std::uint64_t steps);

/// Step counter shared by one enumeration call (and its sub-searches).
class Budget {
public:
  explicit Budget(std::uint64_t limit = default_budget()) : limit_(limit) {}

  void spend() {
    if (++used_ > limit_) {
      throw ResourceError("enumeration budget of " + std::to_string(limit_) +
                          " steps exceeded");
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

enum class Parity { odd, even, any };

inline bool parity_matches(Parity p, int length) {
  return p == Parity::any || (length % 2 == 1) == (p == Parity::odd);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Throws InputError if x is in t or either is unknown.
bool is_complete_to(const Graph& g, VertexId x, const VertexSet& t);
bool is_anticomplete_to(const Graph& g, VertexId x, const VertexSet& t);

/// Every chordless a-b path, each exactly once, in DFS order (ascending ids).
std::vector<Path> enumerate_chordless_paths(const Graph& g, VertexId a, VertexId b,
                                            std::uint64_t budget = default_budget());

/// Every hole of length >= min_len and matching parity, once per cycle. Each
/// cycle starts at its smallest id and its second vertex is smaller than its
/// last.
std::vector<Path> enumerate_chordless_cycles(const Graph& g, int min_len, Parity parity,
                                             std::uint64_t budget = default_budget());

/// Components of g minus `removed`, each sorted, ordered by smallest id.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed = {});

namespace detail {

/// Depth-first enumeration of chordless paths that start at `from`, continue
/// through `interior`, and stop at the first vertex of `targets` reached.
/// `visit(path)` returns false to abort. Returns false iff aborted.
template <typename Visit>
class ChordlessPathSearch {
public:
  ChordlessPathSearch(const Graph& g, Mask targets, Mask interior, Budget& budget,
                      Visit& visit)
      : g_(g), targets_(targets), interior_(interior & ~targets), budget_(budget),
        visit_(visit) {}

  bool run(int from) {
    path_.assign(1, from);
    return extend(bit(from), 0);
  }

private:
  // `blocked` is the union of closed neighborhoods of every path vertex but
  // the last one.
  bool extend(Mask on_path, Mask blocked) {
    budget_.spend();
    const int last = path_.back();
    if ((targets_ & ~blocked & ~on_path) == 0) return true;
    const Mask candidates = g_.neighbors(last) & ~blocked & ~on_path;
    bool keep_going = true;
    for_each_bit(candidates & targets_, [&](int t) {
      if (!keep_going) return;
      path_.push_back(t);
      keep_going = visit_(static_cast<const IndexPath&>(path_));
      path_.pop_back();
    });
    if (!keep_going) return false;
    const Mask next_blocked = blocked | g_.neighbors(last) | bit(last);
    for_each_bit(candidates & interior_, [&](int v) {
      if (!keep_going) return;
      path_.push_back(v);
      keep_going = extend(on_path | bit(v), next_blocked);
      path_.pop_back();
    });
    return keep_going;
  }

  const Graph& g_;
  Mask targets_;
  Mask interior_;
  Budget& budget_;
  Visit& visit_;
  IndexPath path_;
};

template <typename Visit>
bool for_each_chordless_path(const Graph& g, int from, Mask targets, Mask interior,
                             Budget& budget, Visit&& visit) {
  ChordlessPathSearch<std::remove_reference_t<Visit>> search(g, targets & ~bit(from),
                                                             interior & ~bit(from), budget,
                                                             visit);
  return search.run(from);
}

/// Enumerates holes (length >= 4) with the canonical orientation described
/// at enumerate_chordless_cycles. `visit(cycle)` returns false to abort.
template <typename Visit>
bool for_each_hole(const Graph& g, Budget& budget, Visit&& visit) {
  const int n = g.size();
  IndexPath cycle;
  for (int s = 0; s < n; ++s) {
    const Mask higher = above(s) & g.all();
    const Mask ns = g.neighbors(s) & higher;
    const Mask interior = higher & ~g.neighbors(s);
    bool keep_going = true;
    for_each_bit(ns, [&](int x) {
      if (!keep_going) return;
      const Mask targets = ns & above(x) & ~g.neighbors(x);
      if (targets == 0) return;
      keep_going = for_each_chordless_path(g, x, targets, interior, budget,
                                           [&](const IndexPath& p) {
                                             cycle.assign(1, s);
                                             cycle.insert(cycle.end(), p.begin(), p.end());
                                             return visit(static_cast<const IndexPath&>(cycle));
                                           });
    });
    if (!keep_going) return false;
  }
  return true;
}

/// Component of `start` in the subgraph induced by `within`.
Mask component_of(const Graph& g, int start, Mask within);

/// Shortest path from `from` to `to` inside `within` (both endpoints must be
/// in `within`); empty if unreachable.
IndexPath shortest_path(const Graph& g, int from, int to, Mask within);

} // namespace detail
} // namespace grenoble
