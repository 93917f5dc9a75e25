#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "dikernel/digraph.hpp"

namespace dikernel {

/// (k, l)-kernel parameters: k-independent, l-absorbent.
struct KernelQuery {
  std::uint32_t k = 2;
  std::uint32_t l = 1;

  /// Classic kernel: independent and absorbent by single arcs.
  static constexpr KernelQuery kernel() { return {2, 1}; }
  /// k-kernel = (k, k-1)-kernel.
  static constexpr KernelQuery k_kernel(std::uint32_t k) { return {k, k - 1}; }

  friend bool operator==(const KernelQuery&, const KernelQuery&) = default;
};

struct KernelResult {
  bool found = false;
  std::optional<VertexSet> witness;
  std::uint64_t subsets_examined = 0;
};

struct SearchLimits {
  /// Largest digraph the subset search accepts (SizeBound beyond it).
  std::size_t max_vertices = 24;
};

/// Perfection checks enumerate 2^n induced subdigraphs.
struct PerfectionLimits {
  std::size_t max_vertices = 16;
};

struct PerfectionResult {
  bool perfect = true;
  /// First vertex set (lexicographic order) whose induced subdigraph fails.
  std::optional<VertexSet> counterexample;
};

/// Same vertex set; arc (u, v) whenever 1 <= d(u, v) <= k.
Digraph k_closure(const Digraph& d, std::uint32_t k);

/// Every ordered pair of distinct members at distance >= k (Unreachable counts).
bool is_k_independent(const Digraph& d, const VertexSet& s, std::uint32_t k);
bool is_k_independent(const DistanceMatrix& dist, const VertexSet& s, std::uint32_t k);

/// Every non-member reaches some member within distance l.
bool is_l_absorbent(const Digraph& d, const VertexSet& s, std::uint32_t l);
bool is_l_absorbent(const DistanceMatrix& dist, const VertexSet& s, std::uint32_t l);

bool is_kl_kernel(const Digraph& d, const VertexSet& s, KernelQuery q);
bool is_kl_kernel(const DistanceMatrix& dist, const VertexSet& s, KernelQuery q);

/// Lexicographically least (k, l)-kernel by pruned subset search.
KernelResult find_kl_kernel(const Digraph& d, KernelQuery q, const SearchLimits& limits = {});

/// Kernel of C^(k-1)(D); when found it is a k-kernel of D.
KernelResult find_kernel_via_closure(const Digraph& d, std::uint32_t k,
                                     const SearchLimits& limits = {});

/// Every nonempty induced subdigraph has a kernel.
PerfectionResult is_kernel_perfect(const Digraph& d, const PerfectionLimits& limits = {});

/// Every proper nonempty induced subdigraph has a 3-kernel.
PerfectionResult is_quasi_3_kernel_perfect(const Digraph& d, const PerfectionLimits& limits = {});

/// Quasi-3-kernel-perfect and D itself has a 3-kernel.
PerfectionResult is_3_kernel_perfect(const Digraph& d, const PerfectionLimits& limits = {});

}  // namespace dikernel
