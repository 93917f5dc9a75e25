#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dikernel/cycles.hpp"
#include "dikernel/digraph.hpp"
#include "dikernel/kernels.hpp"

namespace dikernel {

/// splitmix64 (Steele, Lea, Flood). Bit-reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform-ish in [0, bound); bound > 0.
  std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Seed for trial `index` of a campaign seeded with `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(seed ^ index).next();
}

/// Every ordered pair (u, v), u != v, in lexicographic order, kept with
/// probability arc_prob.
Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed);

/// Random Hamiltonian cycle (Fisher-Yates permutation) plus each remaining
/// ordered pair with probability extra_arc_prob. Always strongly connected.
Digraph random_strongly_connected(std::size_t n, double extra_arc_prob, std::uint64_t seed);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 (no arcs for n < 2; a digon for n = 2).
Digraph directed_cycle(std::size_t n);

/// Labeled loopless digraphs on n <= 4 vertices: 2^(n(n-1)) of them.
inline constexpr std::size_t kMaxExhaustiveVertices = 4;
std::uint64_t labeled_digraph_count(std::size_t n);
/// Bit i of `code` selects the i-th ordered pair (lexicographic).
Digraph labeled_digraph(std::size_t n, std::uint64_t code);
/// Visits in arc-bitmask order; return false to stop. Throws SizeBound for n > 4.
void for_each_labeled_digraph(std::size_t n, const std::function<bool(const Digraph&)>& visit);
std::vector<Digraph> enumerate_labeled_digraphs(std::size_t n);

enum class HypothesisClass {
  /// check_cycle_hypothesis(condition, min_cycle_len) holds.
  CycleCondition,
  /// Circuit condition at max_len = |A| plus quasi-3-kernel-perfect.
  CircuitPlusQuasi,
  /// Every cycle has a symmetric arc.
  Duchet,
};

struct ClassId {
  HypothesisClass kind = HypothesisClass::Duchet;
  CycleCondition condition = CycleCondition::ThreeWithCrossing;
  std::size_t min_cycle_len = 2;

  std::string to_string() const;
};

struct ClassLimits {
  std::uint64_t budget = 1'000'000;
  PerfectionLimits perfection;
};

/// Class predicate. BudgetExceeded / SizeBound propagate.
bool in_hypothesis_class(const Digraph& d, const ClassId& id, const ClassLimits& limits = {});

struct ClassSample {
  ClassId id;
  std::vector<Digraph> instances;
  std::uint64_t tried = 0;
  std::uint64_t accepted = 0;
};

/// Draws `trials` digraphs from random_strongly_connected(n, extra_arc_prob,
/// trial_seed(seed, t)) and keeps the members of the class.
ClassSample sample_hypothesis_class(const ClassId& id, std::size_t n, std::uint64_t trials,
                                    std::uint64_t seed, double extra_arc_prob,
                                    const ClassLimits& limits = {});

/// Exhaustive variant over strongly connected labeled digraphs on n vertices.
ClassSample scan_hypothesis_class(const ClassId& id, std::size_t n, const ClassLimits& limits = {});

}  // namespace dikernel
