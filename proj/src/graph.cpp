#include "grenoble/graph.hpp"

#include <algorithm>

namespace grenoble {

Graph::Graph(std::vector<VertexId> ids,
             std::span<const std::pair<VertexId, VertexId>> edges,
             std::string name)
    : ids_(std::move(ids)), name_(std::move(name)) {
  if (ids_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("graph has " + std::to_string(ids_.size()) +
                     " vertices; the cap is " + std::to_string(kMaxVertices));
  }
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InputError("duplicate vertex id");
  }
  for (VertexId v : ids_) {
    if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
  }
  adj_.assign(ids_.size(), 0);
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    const int i = index(u);
    const int j = index(v);
    adj_[static_cast<std::size_t>(i)] |= bit(j);
    adj_[static_cast<std::size_t>(j)] |= bit(i);
  }
}

Graph Graph::with_vertices(int n, std::span<const std::pair<VertexId, VertexId>> edges,
                           std::string name) {
  std::vector<VertexId> ids(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  return Graph(std::move(ids), edges, std::move(name));
}

bool Graph::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

int Graph::index(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw InputError("unknown vertex id " + std::to_string(v));
  }
  return static_cast<int>(it - ids_.begin());
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int i = 0; i < size(); ++i) {
    for_each_bit(neighbors(i) & above(i), [&](int j) { out.emplace_back(id(i), id(j)); });
  }
  return out;
}

Mask Graph::mask_of(std::span<const VertexId> vs) const {
  Mask m = 0;
  for (VertexId v : vs) m |= bit(index(v));
  return m;
}

VertexSet Graph::ids_of(Mask m) const {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int i) { out.push_back(id(i)); });
  return out;
}

bool Graph::is_clique(Mask m) const {
  bool ok = true;
  for_each_bit(m, [&](int i) {
    if ((m & ~bit(i) & ~neighbors(i)) != 0) ok = false;
  });
  return ok;
}

Graph Graph::induced(Mask m) const {
  Graph h;
  h.name_ = name_;
  h.ids_ = ids_of(m);
  h.adj_.reserve(h.ids_.size());
  // Compress rows: local index k in h corresponds to the k-th set bit of m.
  std::vector<int> position(ids_.size(), -1);
  int k = 0;
  for_each_bit(m, [&](int i) { position[static_cast<std::size_t>(i)] = k++; });
  for_each_bit(m, [&](int i) {
    Mask row = 0;
    for_each_bit(neighbors(i) & m, [&](int j) { row |= bit(position[static_cast<std::size_t>(j)]); });
    h.adj_.push_back(row);
  });
  return h;
}

Graph Graph::complement() const {
  Graph h = *this;
  for (int i = 0; i < size(); ++i) {
    h.adj_[static_cast<std::size_t>(i)] = all() & ~adj_[static_cast<std::size_t>(i)] & ~bit(i);
  }
  return h;
}

Path to_path(const Graph& g, const IndexPath& p) {
  Path out;
  out.vertices.reserve(p.size());
  for (int i : p) out.vertices.push_back(g.id(i));
  return out;
}

IndexPath to_index_path(const Graph& g, const Path& p) {
  IndexPath out;
  out.reserve(p.vertices.size());
  for (VertexId v : p.vertices) out.push_back(g.index(v));
  return out;
}

Mask mask_of(const IndexPath& p) {
  Mask m = 0;
  for (int i : p) m |= bit(i);
  return m;
}

bool is_chordless_path(const Graph& g, const IndexPath& p) {
  if (p.empty()) return false;
  if (popcount(mask_of(p)) != static_cast<int>(p.size())) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (g.adjacent_at(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_hole(const Graph& g, const IndexPath& p) {
  const std::size_t n = p.size();
  if (n < 4 || popcount(mask_of(p)) != static_cast<int>(n)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent_at(p[i], p[j]) != consecutive) return false;
    }
  }
  return true;
}

std::uint64_t structural_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.size()));
  for (VertexId v : g.ids()) mix(static_cast<std::uint64_t>(v));
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

} // namespace grenoble
