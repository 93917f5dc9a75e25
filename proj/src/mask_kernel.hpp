#pragma once

// Bitmask kernel search shared by the solver and the perfection checks.
// Vertices are bit positions, so digraphs are limited to 64 vertices.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dikernel/digraph.hpp"

namespace dikernel::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask low_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n)) - 1); }

struct MaskDigraph {
  std::size_t n = 0;
  std::vector<Mask> out;

  explicit MaskDigraph(const Digraph& d);
};

/// Vertices reachable from u by a walk of at most `radius` arcs staying in
/// `within` (u included).
Mask reach_within(const MaskDigraph& g, Mask within, Vertex u, std::uint32_t radius);

/// Lexicographically least (k, l)-kernel of the subdigraph induced by
/// `within`, or nothing.
std::optional<Mask> least_kernel(const MaskDigraph& g, Mask within, std::uint32_t k,
                                 std::uint32_t l, std::uint64_t* examined = nullptr);

VertexSet to_vertex_set(Mask m);
Mask to_mask(const VertexSet& s);

/// Visits nonempty subsets of `universe` in lexicographic order of their
/// sorted member lists; stops when `visit` returns false.
template <class Visit>
bool for_each_subset_lex(Mask universe, Mask current, int last, Visit&& visit) {
  Mask rest = universe & ~low_mask(static_cast<std::size_t>(last + 1));
  while (rest != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    rest &= rest - 1;
    Mask next = current | bit(v);
    if (!visit(next)) return false;
    if (!for_each_subset_lex(universe, next, static_cast<int>(v), visit)) return false;
  }
  return true;
}

}  // namespace dikernel::detail
