#include "dikernel/substitution.hpp"

#include <algorithm>
#include <string>

#include "dikernel/error.hpp"

namespace dikernel {

namespace {

const VertexSet kEmpty;

std::string set_name(std::size_t i) { return "N_" + std::to_string(i); }

}  // namespace

const VertexSet& SubstitutionTrace::n(std::size_t i) const {
  const std::size_t k = i / 3;
  if (k >= rounds.size()) return kEmpty;
  switch (i % 3) {
    case 0: return rounds[k].added;
    case 1: return rounds[k].removed_near;
    default: return rounds[k].removed_far;
  }
}

const VertexSet& SubstitutionTrace::n_prime(std::size_t i) const {
  const std::size_t k = i / 3;
  if (i % 3 == 0 || k >= intermediates.size()) return kEmpty;
  return i % 3 == 1 ? intermediates[k].near : intermediates[k].far;
}

std::optional<std::size_t> SubstitutionTrace::index_of(Vertex v) const {
  for (std::size_t i = 0; i < 3 * rounds.size(); ++i) {
    if (contains(n(i), v)) return i;
  }
  return std::nullopt;
}

std::string SetLabel::to_string() const {
  switch (kind) {
    case Kind::Substitution: return "N_" + std::to_string(index);
    case Kind::Intermediate: return "N'_" + std::to_string(index);
    case Kind::None: break;
  }
  return "-";
}

std::vector<IntermediateRound> intermediate_sets(const SubstitutionTrace& trace) {
  std::vector<IntermediateRound> out;
  for (std::size_t k = 0; k < trace.p; ++k) {
    const auto& base = trace.n(3 * k);
    IntermediateRound round;
    if (!base.empty()) {
      round.near = set_difference(in_neighborhood_at_distance(trace.distances, base, 1),
                                  trace.n(3 * k + 1));
      round.far = set_difference(in_neighborhood_at_distance(trace.distances, base, 2),
                                 trace.n(3 * k + 2));
    }
    out.push_back(std::move(round));
  }
  return out;
}

SubstitutionTrace build_substitution_sequence(const Digraph& d, Vertex x0, const VertexSet& kernel,
                                              const SearchLimits& limits) {
  if (x0 >= d.vertex_count()) {
    throw Error(ErrorKind::VertexOutOfRange, "x0 = " + std::to_string(x0));
  }
  validate_vertex_set(d.vertex_count(), kernel);
  if (contains(kernel, x0)) {
    throw Error(ErrorKind::NotAKernel, "base kernel must not contain x0");
  }
  {
    auto rest = remove_vertex(d, x0);
    VertexSet inner;
    for (Vertex v : kernel) inner.push_back(*rest.from_original[v]);
    if (!is_kl_kernel(rest.digraph, inner, KernelQuery::k_kernel(3))) {
      throw Error(ErrorKind::NotAKernel, "base set is not a 3-kernel of D - x0");
    }
  }

  SubstitutionTrace trace;
  trace.digraph = d;
  trace.distances = distance_matrix(d);
  trace.x0 = x0;
  trace.kernel = kernel;
  const auto& dist = trace.distances;

  trace.rounds.push_back({{x0}, {}, {}, {x0}});
  VertexSet removed;
  VertexSet added_so_far{x0};
  VertexSet pooled{x0};

  for (std::size_t k = 0;; ++k) {
    const VertexSet base = trace.rounds[k].added;
    VertexSet near, far;
    if (!base.empty()) {
      near = set_difference(set_intersection(in_neighborhood_at_distance(dist, base, 1), kernel),
                            removed);
      // A vertex at distance 1 from one member and 2 from another stays in N_{3k+1}.
      far = set_difference(set_intersection(in_neighborhood_at_distance(dist, base, 2), kernel),
                           set_union(removed, near));
    }
    trace.rounds[k].removed_near = near;
    trace.rounds[k].removed_far = far;
    if (near.empty() && far.empty()) {
      trace.p = k;
      break;
    }
    removed = set_union(removed, set_union(near, far));

    // Vertices left unabsorbed by the surviving kernel and by earlier additions.
    VertexSet pool;
    for (Vertex x = 0; x < d.vertex_count(); ++x) {
      if (contains(pooled, x) || contains(kernel, x)) continue;
      const auto cone = out_cone(dist, {x}, 2);
      if (!std::ranges::includes(removed, set_intersection(cone, kernel))) continue;
      if (!set_intersection(cone, added_so_far).empty()) continue;
      pool.push_back(x);
    }

    VertexSet chosen;
    if (!pool.empty()) {
      auto sub = induced_subdigraph(d, pool);
      auto found = find_kl_kernel(sub.digraph, KernelQuery::k_kernel(3), limits);
      if (!found.found) {
        throw Error(ErrorKind::SubkernelMissing,
                    "candidate set for " + set_name(3 * k + 3) + " induces no 3-kernel");
      }
      chosen = sub.lift(*found.witness);
    }
    pooled = set_union(pooled, pool);
    added_so_far = set_union(added_so_far, chosen);
    trace.rounds.push_back({chosen, {}, {}, pool});
  }

  trace.intermediates = intermediate_sets(trace);
  return trace;
}

VertexSet assemble_pre_3_kernel(const SubstitutionTrace& trace) {
  VertexSet removed, added;
  for (const auto& r : trace.rounds) {
    removed = set_union(removed, set_union(r.removed_near, r.removed_far));
    added = set_union(added, r.added);
  }
  return set_union(set_difference(trace.kernel, removed), added);
}

TraceInvariantReport check_trace_invariants(const SubstitutionTrace& trace) {
  TraceInvariantReport report;
  auto fail = [&](std::string msg) { report.problems.push_back(std::move(msg)); };

  if (trace.rounds.empty()) {
    fail("trace has no rounds");
    return report;
  }
  if (trace.rounds[0].added != VertexSet{trace.x0}) fail("N_0 != {x0}");
  if (trace.rounds[0].candidates != VertexSet{trace.x0}) fail("M_0 != {x0}");
  if (trace.p + 1 != trace.rounds.size()) fail("round count does not match p");

  std::vector<int> owner(trace.digraph.vertex_count(), -1);
  for (std::size_t i = 0; i < 3 * trace.rounds.size(); ++i) {
    for (Vertex v : trace.n(i)) {
      if (owner[v] >= 0) {
        fail("vertex " + std::to_string(v) + " in both " + set_name(static_cast<std::size_t>(owner[v])) +
             " and " + set_name(i));
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const auto& r = trace.rounds[k];
    if (!std::ranges::includes(trace.kernel, r.removed_near) ||
        !std::ranges::includes(trace.kernel, r.removed_far)) {
      fail(set_name(3 * k + 1) + " or " + set_name(3 * k + 2) + " leaves the base kernel");
    }
    if (k >= 1 && !set_intersection(r.added, trace.kernel).empty()) {
      fail(set_name(3 * k) + " meets the base kernel");
    }
    if (!std::ranges::includes(r.candidates, r.added)) {
      fail(set_name(3 * k) + " is not inside M_" + std::to_string(3 * k));
    }
    const bool empty = r.removed_near.empty() && r.removed_far.empty();
    if (k < trace.p && empty) fail("p is not minimal");
    if (k == trace.p && !empty) fail("last round still removes vertices");
  }
  if (!contains(assemble_pre_3_kernel(trace), trace.x0)) fail("x0 missing from the pre-3-kernel");
  return report;
}

SetLabel label_of(const SubstitutionTrace& trace, Vertex v, std::size_t position) {
  if (auto i = trace.index_of(v)) return {SetLabel::Kind::Substitution, *i};
  if (contains(trace.n_prime(position), v)) return {SetLabel::Kind::Intermediate, position};
  for (std::size_t i = 0; i < 3 * trace.intermediates.size(); ++i) {
    if (contains(trace.n_prime(i), v)) return {SetLabel::Kind::Intermediate, i};
  }
  return {};
}

namespace {

/// Road conditions that involve only positions j..s of the partial road
/// (t_s..t_j known), evaluated at the newest position j.
class RoadRules {
 public:
  RoadRules(const SubstitutionTrace& trace, std::size_t s) : trace_(trace), s_(s) {}

  /// t_{3i} in N_{3i}.
  bool multiple_ok(std::size_t j, Vertex t) const {
    return j % 3 != 0 || contains(trace_.n(j), t);
  }

  /// For j = 3i+1 with 3i+2 <= s: t_j in N_j <=> t_{j+1} in N'_{j+1}.
  bool biconditional_ok(std::size_t j, Vertex tj, Vertex tj1) const {
    if (j % 3 != 1 || j + 1 > s_) return true;
    return contains(trace_.n(j), tj) == contains(trace_.n_prime(j + 1), tj1);
  }

  /// If (t_{i}, t_{i-2}) is an arc, t_i in N'_{3j+1} and t_{i-2} in N'_{3j-1}
  /// for some 1 <= j with 3j < s.
  bool skip_ok(Vertex ti, Vertex ti2) const {
    if (!trace_.digraph.has_arc(ti, ti2)) return true;
    for (std::size_t j = 1; 3 * j < s_; ++j) {
      if (contains(trace_.n_prime(3 * j + 1), ti) && contains(trace_.n_prime(3 * j - 1), ti2)) {
        return true;
      }
    }
    return false;
  }

 private:
  const SubstitutionTrace& trace_;
  std::size_t s_;
};

}  // namespace

RoadCheck validate_road(const SubstitutionTrace& trace, const std::vector<Vertex>& path) {
  RoadCheck check;
  if (path.empty()) {
    check.problems.push_back("empty path");
    return check;
  }
  const std::size_t n = trace.digraph.vertex_count();
  const std::size_t s = path.size() - 1;
  auto t = [&](std::size_t j) { return path[s - j]; };

  check.is_path = t(0) == trace.x0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= n) {
      check.is_path = false;
      check.problems.push_back("vertex " + std::to_string(path[i]) + " out of range");
      return check;
    }
    if (i + 1 < path.size() && !trace.digraph.has_arc(path[i], path[i + 1])) check.is_path = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (path[j] == path[i]) check.is_path = false;
    }
  }
  if (!check.is_path) check.problems.push_back("not a path ending at x0");

  check.start_in_n_s = s <= 3 * trace.p && contains(trace.n(s), t(s));
  if (!check.start_in_n_s) check.problems.push_back("t_s not in " + set_name(s));

  RoadRules rules(trace, s);
  check.biconditional = true;
  for (std::size_t i = 0; 3 * i + 2 <= s; ++i) {
    if (!rules.biconditional_ok(3 * i + 1, t(3 * i + 1), t(3 * i + 2))) {
      check.biconditional = false;
      check.problems.push_back("biconditional fails at position " + std::to_string(3 * i + 1));
    }
  }
  check.multiples_in_n = true;
  for (std::size_t j = 0; j <= s; j += 3) {
    if (!rules.multiple_ok(j, t(j))) {
      check.multiples_in_n = false;
      check.problems.push_back("t_" + std::to_string(j) + " not in " + set_name(j));
    }
  }
  check.skip_arcs_labelled = true;
  for (std::size_t i = 2; i <= s; ++i) {
    if (!rules.skip_ok(t(i), t(i - 2))) {
      check.skip_arcs_labelled = false;
      check.problems.push_back("skip arc at position " + std::to_string(i) +
                               " outside the allowed intermediate sets");
    }
  }
  return check;
}

namespace {

class RoadSearch {
 public:
  RoadSearch(const SubstitutionTrace& trace, std::size_t s)
      : trace_(trace), rules_(trace, s), s_(s), on_path_(trace.digraph.vertex_count(), false) {}

  std::optional<Road> run(Vertex v) {
    path_.assign(1, v);
    on_path_[v] = true;
    if (!extend()) return std::nullopt;
    return current_road();
  }

  /// Every road from v, up to `cap` of them.
  std::vector<Road> collect(Vertex v, std::size_t cap) {
    std::vector<Road> roads;
    collected_ = &roads;
    cap_ = cap;
    path_.assign(1, v);
    on_path_[v] = true;
    extend();
    collected_ = nullptr;
    return roads;
  }

 private:
  Vertex t(std::size_t j) const { return path_[s_ - j]; }

  Road current_road() const {
    Road road;
    road.path = path_;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      road.labels.push_back(label_of(trace_, path_[i], s_ - i));
    }
    return road;
  }

  /// True stops the search (first road found, or the collection cap hit).
  bool extend() {
    const std::size_t j = s_ + 1 - path_.size();  // position of the newest vertex
    if (j == 0) {
      if (!validate_road(trace_, path_).ok()) return false;
      if (collected_ == nullptr) return true;
      collected_->push_back(current_road());
      return collected_->size() >= cap_;
    }
    const std::size_t next = j - 1;
    for (Vertex w : trace_.digraph.out_neighbors(path_.back())) {
      if (on_path_[w]) continue;
      if (!trace_.distances(w, trace_.x0).within(static_cast<std::uint32_t>(next))) continue;
      if (!rules_.multiple_ok(next, w)) continue;
      if (next % 3 == 1 && next + 1 <= s_ && !rules_.biconditional_ok(next, w, t(next + 1))) {
        continue;
      }
      if (next + 2 <= s_ && !rules_.skip_ok(t(next + 2), w)) continue;
      path_.push_back(w);
      on_path_[w] = true;
      bool done = extend();
      if (done) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const SubstitutionTrace& trace_;
  RoadRules rules_;
  std::size_t s_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  std::vector<Road>* collected_ = nullptr;
  std::size_t cap_ = 0;
};

}  // namespace

std::vector<Road> enumerate_roads(const SubstitutionTrace& trace, Vertex v, std::size_t s,
                                  std::size_t cap) {
  if (!contains(trace.n(s), v)) {
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(v) + " is not in " + set_name(s));
  }
  return RoadSearch(trace, s).collect(v, cap);
}

std::optional<Road> try_find_road(const SubstitutionTrace& trace, Vertex v, std::size_t s) {
  if (!contains(trace.n(s), v)) {
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(v) + " is not in " + set_name(s));
  }
  return RoadSearch(trace, s).run(v);
}

Road find_road(const SubstitutionTrace& trace, Vertex v, std::size_t s) {
  auto road = try_find_road(trace, v, s);
  if (!road) {
    throw Error(ErrorKind::NoRoadFound,
                "no road of length " + std::to_string(s) + " from vertex " + std::to_string(v));
  }
  return *road;
}

PreKernelReport check_pre_kernel_properties(const SubstitutionTrace& trace) {
  PreKernelReport report;
  report.pre_kernel = assemble_pre_3_kernel(trace);
  const auto& n = report.pre_kernel;
  const auto& dist = trace.distances;

  for (Vertex u = 0; u < trace.digraph.vertex_count(); ++u) {
    if (contains(n, u)) continue;
    const bool absorbed = std::ranges::any_of(n, [&](Vertex v) { return dist(u, v).within(2); });
    if (!absorbed) report.unabsorbed.push_back(u);
  }
  report.two_absorbent = report.unabsorbed.empty();

  for (Vertex a : n) {
    for (Vertex b : n) {
      if (a == b || !dist(a, b).within(2)) continue;
      InternalPath ip{a, b, *shortest_path(trace.digraph, a, b)};
      const auto ia = trace.index_of(a);
      const auto ib = trace.index_of(b);
      const bool allowed = ia && ib && *ia % 3 == 0 && *ib % 3 == 0 && *ia <= *ib;
      if (!allowed) report.violations.push_back(ip);
      report.short_paths.push_back(std::move(ip));
    }
  }
  return report;
}

UniqueChordReport check_unique_short_chord(const SubstitutionTrace& trace, const Road& road) {
  UniqueChordReport report;
  const std::size_t s = road.s();
  std::optional<std::size_t> first_inner;
  for (std::size_t i = 2; i <= s; ++i) {
    if (!trace.digraph.has_arc(road.at(i), road.at(i - 2))) continue;
    report.skip_positions.push_back(i);
    if (i > 2 && i < s && !first_inner) first_inner = i;
  }
  if (!first_inner) return report;
  report.applicable = true;
  report.unique = report.skip_positions.size() == 1;
  for (std::size_t q = 2; q <= s; q += 3) {
    if (q > *first_inner && !contains(trace.n(q), road.at(q))) report.label_violations.push_back(q);
  }
  return report;
}

bool AdditiveInverseReport::ok() const noexcept {
  return std::ranges::all_of(checks, [](const AdditiveInverseCheck& c) { return c.ok; });
}

AdditiveInverseReport check_additive_inverse_property(const SubstitutionTrace& trace,
                                                      const Road& road) {
  AdditiveInverseReport report;
  for (std::size_t j = 0; j <= road.s(); ++j) {
    if (j == 1) continue;
    AdditiveInverseCheck c;
    c.position = j;
    c.vertex = road.at(j);
    c.distance = trace.distances(trace.x0, c.vertex);
    c.ok = c.distance.is_reachable() && (c.distance.value() + j) % 3 == 0;
    report.checks.push_back(c);
  }
  return report;
}

MethodOutcome run_substitution_method(const Digraph& d, Vertex x0, const SearchLimits& limits) {
  auto rest = remove_vertex(d, x0);
  auto base = find_kl_kernel(rest.digraph, KernelQuery::k_kernel(3), limits);
  if (!base.found) {
    throw Error(ErrorKind::NoBaseKernel, "D - " + std::to_string(x0) + " has no 3-kernel");
  }
  MethodOutcome outcome;
  outcome.trace = build_substitution_sequence(d, x0, rest.lift(*base.witness), limits);
  outcome.pre_3_kernel = assemble_pre_3_kernel(outcome.trace);
  const auto& dist = outcome.trace.distances;
  outcome.two_absorbent = is_l_absorbent(dist, outcome.pre_3_kernel, 2);
  for (Vertex a : outcome.pre_3_kernel) {
    for (Vertex b : outcome.pre_3_kernel) {
      if (a != b && dist(a, b).within(2)) {
        outcome.failure_witness = shortest_path(d, a, b);
        break;
      }
    }
    if (outcome.failure_witness) break;
  }
  outcome.is_3_kernel = !outcome.failure_witness && outcome.two_absorbent;
  return outcome;
}

}  // namespace dikernel
