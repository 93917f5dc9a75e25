#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dikernel/digraph.hpp"
#include "dikernel/kernels.hpp"

namespace dikernel {

/// Sets produced by round k of a 3-substitution sequence.
struct SubstitutionRound {
  VertexSet added;           ///< N_{3k}: joins the pre-3-kernel
  VertexSet removed_near;    ///< N_{3k+1}: kernel vertices at distance 1 from N_{3k}
  VertexSet removed_far;     ///< N_{3k+2}: kernel vertices at distance 2 from N_{3k}
  VertexSet candidates;      ///< M_{3k}: the pool N_{3k} was chosen from
};

/// Intermediate sets for round k < p.
struct IntermediateRound {
  VertexSet near;  ///< N'_{3k+1}
  VertexSet far;   ///< N'_{3k+2}
};

/// Full record of one run of the 3-substitution method from x0 and a
/// 3-kernel of D - x0. Rounds 0..p are stored; N_{3p+1} = N_{3p+2} = {}.
struct SubstitutionTrace {
  Digraph digraph;
  DistanceMatrix distances;
  Vertex x0 = 0;
  VertexSet kernel;
  std::vector<SubstitutionRound> rounds;
  std::size_t p = 0;
  std::vector<IntermediateRound> intermediates;

  /// N_i; empty beyond the last round.
  const VertexSet& n(std::size_t i) const;
  /// N'_i for i not divisible by 3; empty outside the computed range.
  const VertexSet& n_prime(std::size_t i) const;
  /// Index i with v in N_i.
  std::optional<std::size_t> index_of(Vertex v) const;
};

/// Which set a road vertex was matched to.
struct SetLabel {
  enum class Kind { Substitution, Intermediate, None };
  Kind kind = Kind::None;
  std::size_t index = 0;

  std::string to_string() const;
  friend bool operator==(const SetLabel&, const SetLabel&) = default;
};

/// (v, x0)-path (t_s, ..., t_0) with a label per position (same order).
struct Road {
  std::vector<Vertex> path;
  std::vector<SetLabel> labels;

  std::size_t s() const noexcept { return path.empty() ? 0 : path.size() - 1; }
  /// t_j.
  Vertex at(std::size_t j) const { return path[path.size() - 1 - j]; }
};

struct RoadCheck {
  bool is_path = false;    ///< distinct vertices, consecutive arcs, ends at x0
  bool start_in_n_s = false;       ///< t_s in N_s, s <= 3p
  bool biconditional = false;      ///< t_{3i+1} in N_{3i+1} <=> t_{3i+2} in N'_{3i+2}
  bool multiples_in_n = false;     ///< t_{3i} in N_{3i}
  bool skip_arcs_labelled = false; ///< (t_i, t_{i-2}) arcs join N'_{3j+1} to N'_{3j-1}
  std::vector<std::string> problems;

  bool ok() const noexcept {
    return is_path && start_in_n_s && biconditional && multiples_in_n && skip_arcs_labelled;
  }
};

struct InternalPath {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> path;
};

struct PreKernelReport {
  VertexSet pre_kernel;
  bool two_absorbent = true;
  VertexSet unabsorbed;
  /// Every (a, b) in N x N with a path of length <= 2.
  std::vector<InternalPath> short_paths;
  /// The subset of short_paths not running N_{3k'} -> N_{3k}, k' <= k.
  std::vector<InternalPath> violations;

  bool ok() const noexcept { return two_absorbent && violations.empty(); }
};

struct TraceInvariantReport {
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty(); }
};

struct UniqueChordReport {
  /// Positions i with (t_i, t_{i-2}) an arc.
  std::vector<std::size_t> skip_positions;
  /// True when some skip arc has 2 < i < s.
  bool applicable = false;
  bool unique = true;
  /// Positions 3k'+2 beyond the skip arc whose vertex is not in N_{3k'+2}.
  std::vector<std::size_t> label_violations;

  bool ok() const noexcept { return unique && label_violations.empty(); }
};

struct AdditiveInverseCheck {
  std::size_t position = 0;
  Vertex vertex = 0;
  Distance distance;
  bool ok = false;
};

struct AdditiveInverseReport {
  std::vector<AdditiveInverseCheck> checks;
  bool ok() const noexcept;
};

struct MethodOutcome {
  VertexSet pre_3_kernel;
  bool is_3_kernel = false;
  bool two_absorbent = false;
  SubstitutionTrace trace;
  /// Shortest path of length <= 2 between two pre-3-kernel members.
  std::optional<std::vector<Vertex>> failure_witness;
};

/// Builds the 3-substitution sequence. Throws NotAKernel if `kernel` is not a
/// 3-kernel of D - x0 and SubkernelMissing if some D[M_{3k+3}] has none.
SubstitutionTrace build_substitution_sequence(const Digraph& d, Vertex x0, const VertexSet& kernel,
                                              const SearchLimits& limits = {});

/// N'_{3k+1} = N^-(N_{3k}) \ N_{3k+1}, N'_{3k+2} = N^{2-}(N_{3k}) \ N_{3k+2}, k < p.
std::vector<IntermediateRound> intermediate_sets(const SubstitutionTrace& trace);

/// (K minus every removed set) union every added set.
VertexSet assemble_pre_3_kernel(const SubstitutionTrace& trace);

/// Disjointness, N_0 = M_0 = {x0}, removed sets inside K, added sets outside K
/// and minimality of p.
TraceInvariantReport check_trace_invariants(const SubstitutionTrace& trace);

SetLabel label_of(const SubstitutionTrace& trace, Vertex v, std::size_t position);

/// Evaluates every road condition independently; never throws.
RoadCheck validate_road(const SubstitutionTrace& trace, const std::vector<Vertex>& path);

/// Backtracking search for a road of length s starting at v. Throws
/// InvalidArgument unless v is in N_s, NoRoadFound when none exists.
Road find_road(const SubstitutionTrace& trace, Vertex v, std::size_t s);

/// Like find_road but returns nothing instead of throwing NoRoadFound.
std::optional<Road> try_find_road(const SubstitutionTrace& trace, Vertex v, std::size_t s);

/// Every road of length s from v (up to `cap`), in search order.
std::vector<Road> enumerate_roads(const SubstitutionTrace& trace, Vertex v, std::size_t s,
                                  std::size_t cap = 10'000);

PreKernelReport check_pre_kernel_properties(const SubstitutionTrace& trace);

UniqueChordReport check_unique_short_chord(const SubstitutionTrace& trace, const Road& road);

/// d(x0, t_j) = -j mod 3 for every position j != 1 of the road.
AdditiveInverseReport check_additive_inverse_property(const SubstitutionTrace& trace,
                                                      const Road& road);

/// Base kernel = least 3-kernel of D - x0 (NoBaseKernel when none), then the
/// full method.
MethodOutcome run_substitution_method(const Digraph& d, Vertex x0, const SearchLimits& limits = {});

}  // namespace dikernel
