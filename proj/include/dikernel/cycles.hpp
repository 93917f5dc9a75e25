#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dikernel/digraph.hpp"

namespace dikernel {

/// Simple directed cycle (c_0, ..., c_{n-1}); c_0 is the smallest vertex.
struct Cycle {
  std::vector<Vertex> vertices;
  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Closed trail: arcs pairwise distinct, vertices may repeat. Stored as the
/// lexicographically least rotation of its vertex sequence.
struct Circuit {
  std::vector<Vertex> vertices;
  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Arc (c_tail_pos, c_head_pos) of the host digraph that is not an arc of the
/// cycle/circuit. `length` = (head_pos - tail_pos) mod |C|.
struct Chord {
  std::size_t tail_pos = 0;
  std::size_t head_pos = 0;
  std::size_t length = 0;
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

struct EnumerationOptions {
  std::size_t min_len = 2;
  /// 0 means |V| for cycles. Circuits require an explicit bound.
  std::size_t max_len = 0;
  /// Hard cap on yielded items; hitting it raises BudgetExceeded.
  std::uint64_t budget = 1'000'000;
  /// Hard cap on search-tree nodes (BudgetExceeded as well).
  std::uint64_t step_budget = 200'000'000;
};

/// Return false to stop the enumeration early.
using CycleVisitor = std::function<bool(const Cycle&)>;
using CircuitVisitor = std::function<bool(const Circuit&)>;

/// Visits every simple cycle with min_len <= length <= max_len exactly once,
/// ordered by length and then lexicographically.
void for_each_cycle(const Digraph& d, const EnumerationOptions& opts, const CycleVisitor& visit);
std::vector<Cycle> enumerate_cycles(const Digraph& d, const EnumerationOptions& opts = {});

/// Same contract for closed trails (every cycle is also a circuit).
void for_each_circuit(const Digraph& d, const EnumerationOptions& opts,
                      const CircuitVisitor& visit);
std::vector<Circuit> enumerate_circuits(const Digraph& d, const EnumerationOptions& opts);

/// Position-indexed chords of a closed walk given by its vertex sequence.
std::vector<Chord> chords_of(const Digraph& d, std::span<const Vertex> walk);
inline std::vector<Chord> chords_of(const Digraph& d, const Cycle& c) { return chords_of(d, c.vertices); }
inline std::vector<Chord> chords_of(const Digraph& d, const Circuit& c) { return chords_of(d, c.vertices); }

inline bool is_short_chord(const Chord& ch) noexcept { return ch.length == 2; }

/// b is consecutive to a: the head position of a is the tail position of b.
inline bool are_consecutive(const Chord& a, const Chord& b) noexcept {
  return a.head_pos == b.tail_pos;
}

/// a crosses b: j < j' < j+k < j'+k' for some lift of the positions, where
/// a = (c_j, c_{j+k}) and b = (c_{j'}, c_{j'+k'}) on a walk of length n.
bool are_crossed(const Chord& a, const Chord& b, std::size_t n) noexcept;

enum class CycleCondition { TwoConsecutive, ThreeWithCrossing };

std::string to_string(CycleCondition c);

struct HypothesisViolation {
  std::vector<Vertex> walk;
  std::string reason;
  std::vector<Chord> chords;
};

struct HypothesisReport {
  bool satisfied = true;
  std::vector<HypothesisViolation> violations;
  std::uint64_t examined = 0;
};

struct HypothesisOptions {
  EnumerationOptions enumeration;
  /// 0 = collect every violation; otherwise stop after this many.
  std::size_t max_violations = 0;
};

/// Short chords of a cycle of length >= 3 that satisfy the condition for
/// its residue mod 3. Returns an empty string when satisfied, else a reason.
std::string cycle_condition_failure(const Digraph& d, const Cycle& c, CycleCondition condition);

/// Every cycle of length >= min_cycle_len: |C| = 0 mod 3 needs a short chord,
/// otherwise two consecutive short chords (and, for ThreeWithCrossing, a third
/// one crossing either of them).
HypothesisReport check_cycle_hypothesis(const Digraph& d, CycleCondition condition,
                                        std::size_t min_cycle_len = 2,
                                        const HypothesisOptions& opts = {});

/// Every circuit with min_circuit_len <= |C| <= max_len and |C| != 0 mod 3
/// has at least four distinct short chords.
HypothesisReport check_circuit_hypothesis(const Digraph& d, std::size_t max_len,
                                          std::size_t min_circuit_len = 2,
                                          const HypothesisOptions& opts = {});

/// Every simple cycle contains an arc whose reverse is also an arc.
HypothesisReport every_cycle_has_symmetric_arc(const Digraph& d,
                                               const HypothesisOptions& opts = {});

}  // namespace dikernel
