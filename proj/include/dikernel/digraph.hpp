#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dikernel {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Sorted ascending list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// Loopless simple digraph on vertices 0..n-1. Immutable once built; arcs are
/// kept in lexicographic order and every neighbour list is ascending.
class Digraph {
 public:
  Digraph() = default;

  /// Throws LoopArc, DuplicateArc or VertexOutOfRange.
  static Digraph build(std::size_t vertex_count, const std::vector<Arc>& arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const noexcept {
    return u < n_ && v < n_ && adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint8_t> adjacency_;
};

inline Digraph build_digraph(std::size_t vertex_count, const std::vector<Arc>& arcs) {
  return Digraph::build(vertex_count, arcs);
}

/// Directed distance: a non-negative length or Unreachable, which compares
/// greater than every finite value.
class Distance {
 public:
  constexpr Distance() noexcept = default;
  constexpr explicit Distance(std::uint32_t value) noexcept : value_(value), reachable_(true) {}

  static constexpr Distance unreachable() noexcept { return Distance(); }

  constexpr bool is_reachable() const noexcept { return reachable_; }
  /// Only meaningful when reachable.
  constexpr std::uint32_t value() const noexcept { return value_; }

  /// d <= bound; Unreachable never is.
  constexpr bool within(std::uint32_t bound) const noexcept {
    return reachable_ && value_ <= bound;
  }
  /// d >= bound; Unreachable always is.
  constexpr bool at_least(std::uint32_t bound) const noexcept {
    return !reachable_ || value_ >= bound;
  }

  friend constexpr bool operator==(Distance a, Distance b) noexcept {
    return a.reachable_ == b.reachable_ && (!a.reachable_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) noexcept {
    if (a.reachable_ != b.reachable_) {
      return a.reachable_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!a.reachable_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint32_t value_ = 0;
  bool reachable_ = false;
};

/// All-pairs distances; row u holds d(u, ·).
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return std::span<const Distance>(data_).subspan(static_cast<std::size_t>(u) * n_, n_);
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// Breadth-first distances from `source` to every vertex.
std::vector<Distance> distances_from(const Digraph& d, Vertex source);

Distance distance(const Digraph& d, Vertex u, Vertex v);

/// |V| breadth-first searches.
DistanceMatrix distance_matrix(const Digraph& d);

/// The empty digraph and a single vertex are strongly connected.
bool is_strongly_connected(const Digraph& d);

struct InducedSubdigraph {
  Digraph digraph;
  /// new id -> original id (ascending, equals the inducing set).
  std::vector<Vertex> to_original;
  /// original id -> new id, absent when the vertex was dropped.
  std::vector<std::optional<Vertex>> from_original;

  VertexSet lift(const VertexSet& inner) const;
};

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& subset);

/// D - v.
InducedSubdigraph remove_vertex(const Digraph& d, Vertex v);

/// Vertices u outside `subset` with d(u, v) == distance for some v in it.
/// Throws EmptySet on an empty subset.
VertexSet in_neighborhood_at_distance(const Digraph& d, const VertexSet& subset,
                                      std::uint32_t distance);
VertexSet in_neighborhood_at_distance(const DistanceMatrix& dist, const VertexSet& subset,
                                      std::uint32_t distance);

/// Vertices v with 0 < d(u, v) <= radius for some u in `subset`.
/// Throws EmptySet on an empty subset.
VertexSet out_cone(const Digraph& d, const VertexSet& subset, std::uint32_t radius);
VertexSet out_cone(const DistanceMatrix& dist, const VertexSet& subset, std::uint32_t radius);

/// Throws VertexOutOfRange / InvalidVertexSet unless `subset` is sorted,
/// distinct and inside 0..n-1.
void validate_vertex_set(std::size_t vertex_count, const VertexSet& subset);

/// Sorts and deduplicates.
VertexSet normalize_vertex_set(VertexSet subset);

bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// 0..n-1.
VertexSet all_vertices(std::size_t vertex_count);

/// One shortest (u, v)-path including both ends, or nothing if unreachable.
std::optional<std::vector<Vertex>> shortest_path(const Digraph& d, Vertex u, Vertex v);

}  // namespace dikernel
