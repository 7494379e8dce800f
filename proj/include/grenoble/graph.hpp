#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grenoble/errors.hpp"

namespace grenoble {

using VertexId = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Set of local vertex positions inside one Graph (bit i = i-th smallest id).
using Mask = std::uint64_t;

/// Hard cap on the number of vertices of any Graph.
inline constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }
inline int lowest(Mask m) { return std::countr_zero(m); }
/// Positions strictly above i.
inline Mask above(int i) { return i >= 63 ? Mask{0} : ~((Mask{1} << (i + 1)) - 1); }

/// Calls f(i) for every set bit i of m, in increasing order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    m &= m - 1;
    f(i);
  }
}

/// Immutable simple undirected graph on an ordered set of vertex ids.
///
/// Vertices are addressed either by id (stable across induced subgraphs) or
/// by local index (position in the ascending id list). Adjacency is stored
/// as one 64-bit row per vertex, which caps graphs at kMaxVertices.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from explicit ids and an edge list over those ids.
  /// Throws InputError on duplicate ids, unknown endpoints, self-loops or
  /// more than kMaxVertices vertices. Parallel edges are merged.
  Graph(std::vector<VertexId> ids,
        std::span<const std::pair<VertexId, VertexId>> edges,
        std::string name = {});

  /// Graph on ids 0..n-1.
  static Graph with_vertices(int n,
                             std::span<const std::pair<VertexId, VertexId>> edges,
                             std::string name = {});

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<VertexId>& ids() const { return ids_; }
  VertexId id(int index) const { return ids_[static_cast<std::size_t>(index)]; }
  bool contains(VertexId v) const;
  /// Local index of v; throws InputError if v is not a vertex.
  int index(VertexId v) const;

  Mask all() const { return ids_.size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  Mask neighbors(int index) const { return adj_[static_cast<std::size_t>(index)]; }
  bool adjacent_at(int i, int j) const { return has(adj_[static_cast<std::size_t>(i)], j); }
  bool adjacent(VertexId u, VertexId v) const { return adjacent_at(index(u), index(v)); }
  int degree(int index) const { return popcount(neighbors(index)); }
  int edge_count() const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  Mask mask_of(std::span<const VertexId> vs) const;
  VertexSet ids_of(Mask m) const;

  bool is_clique(Mask m) const;
  bool is_clique() const { return is_clique(all()); }

  /// Subgraph induced on the vertices of m; ids are preserved.
  Graph induced(Mask m) const;
  Graph complement() const;

  VertexId max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

private:
  std::vector<VertexId> ids_;
  std::vector<Mask> adj_;
  std::string name_;
};

/// Ordered vertex sequence. Consecutive vertices are adjacent.
struct Path {
  std::vector<VertexId> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  bool odd() const { return length() % 2 == 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  Path reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Local-index path, the internal working form of Path.
using IndexPath = std::vector<int>;

Path to_path(const Graph& g, const IndexPath& p);
IndexPath to_index_path(const Graph& g, const Path& p);
Mask mask_of(const IndexPath& p);

/// True iff consecutive vertices are adjacent, vertices are distinct and no
/// two non-consecutive vertices are adjacent.
bool is_chordless_path(const Graph& g, const IndexPath& p);
/// True iff p (read cyclically, |p| >= 4) is an induced cycle.
bool is_hole(const Graph& g, const IndexPath& p);

/// 64-bit FNV-1a hash of the sorted edge structure; stable across runs.
std::uint64_t structural_hash(const Graph& g);

} // namespace grenoble
