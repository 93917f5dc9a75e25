#include "dikernel/cycles.hpp"

#include <algorithm>
#include <queue>

#include "dikernel/error.hpp"

namespace dikernel {

namespace {

constexpr std::uint32_t kFar = ~std::uint32_t{0};

/// Distances to `target` using only vertices >= target.
std::vector<std::uint32_t> distances_to_within_suffix(const Digraph& d, Vertex target) {
  std::vector<std::uint32_t> dist(d.vertex_count(), kFar);
  std::queue<Vertex> frontier;
  dist[target] = 0;
  frontier.push(target);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : d.in_neighbors(v)) {
      if (u >= target && dist[u] == kFar) {
        dist[u] = dist[v] + 1;
        frontier.push(u);
      }
    }
  }
  return dist;
}

struct Counter {
  std::uint64_t items = 0;
  std::uint64_t steps = 0;
  const EnumerationOptions* opts;

  void step() {
    if (++steps > opts->step_budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "search exceeded " + std::to_string(opts->step_budget) + " steps");
    }
  }
  void item() {
    if (++items > opts->budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeded " + std::to_string(opts->budget) + " items");
    }
  }
};

class CycleSearch {
 public:
  CycleSearch(const Digraph& d, Counter& counter, const CycleVisitor& visit)
      : d_(d), counter_(counter), visit_(visit), on_path_(d.vertex_count(), false) {}

  /// Returns false when the visitor asked to stop.
  bool run(Vertex start, std::size_t length) {
    start_ = start;
    length_ = length;
    back_ = distances_to_within_suffix(d_, start);
    path_.assign(1, start);
    on_path_[start] = true;
    bool keep = extend();
    on_path_[start] = false;
    return keep;
  }

 private:
  bool extend() {
    counter_.step();
    Vertex last = path_.back();
    if (path_.size() == length_) {
      if (!d_.has_arc(last, start_)) return true;
      counter_.item();
      return visit_(Cycle{path_});
    }
    for (Vertex w : d_.out_neighbors(last)) {
      if (w <= start_ || on_path_[w]) continue;
      // After adding w, length_ - size arcs remain to close the cycle.
      if (back_[w] == kFar || back_[w] > length_ - path_.size()) continue;
      path_.push_back(w);
      on_path_[w] = true;
      bool keep = extend();
      on_path_[w] = false;
      path_.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  const Digraph& d_;
  Counter& counter_;
  const CycleVisitor& visit_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  std::vector<std::uint32_t> back_;
  Vertex start_ = 0;
  std::size_t length_ = 0;
};

class CircuitSearch {
 public:
  CircuitSearch(const Digraph& d, Counter& counter, const CircuitVisitor& visit)
      : d_(d),
        counter_(counter),
        visit_(visit),
        used_(d.vertex_count() * d.vertex_count(), 0) {}

  bool run(Vertex start, std::size_t length) {
    start_ = start;
    length_ = length;
    back_ = distances_to_within_suffix(d_, start);
    seq_.assign(1, start);
    return extend();
  }

 private:
  char& used(Vertex u, Vertex v) { return used_[static_cast<std::size_t>(u) * d_.vertex_count() + v]; }

  bool is_least_rotation() const {
    const std::size_t n = seq_.size();
    for (std::size_t r = 1; r < n; ++r) {
      if (seq_[r] != start_) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Vertex rotated = seq_[(r + i) % n];
        if (rotated < seq_[i]) return false;
        if (rotated > seq_[i]) break;
      }
    }
    return true;
  }

  bool extend() {
    counter_.step();
    Vertex last = seq_.back();
    if (seq_.size() == length_) {
      if (!d_.has_arc(last, start_) || used(last, start_)) return true;
      if (!is_least_rotation()) return true;
      counter_.item();
      return visit_(Circuit{seq_});
    }
    for (Vertex w : d_.out_neighbors(last)) {
      if (w < start_ || used(last, w)) continue;
      if (back_[w] == kFar || back_[w] > length_ - seq_.size()) continue;
      used(last, w) = 1;
      seq_.push_back(w);
      bool keep = extend();
      seq_.pop_back();
      used(last, w) = 0;
      if (!keep) return false;
    }
    return true;
  }

  const Digraph& d_;
  Counter& counter_;
  const CircuitVisitor& visit_;
  std::vector<char> used_;
  std::vector<Vertex> seq_;
  std::vector<std::uint32_t> back_;
  Vertex start_ = 0;
  std::size_t length_ = 0;
};

void check_lengths(std::size_t min_len, std::size_t max_len) {
  if (min_len < 2) throw Error(ErrorKind::InvalidArgument, "min_len must be at least 2");
  if (max_len != 0 && max_len < min_len) {
    throw Error(ErrorKind::InvalidArgument, "max_len must not be below min_len");
  }
}

}  // namespace

void for_each_cycle(const Digraph& d, const EnumerationOptions& opts, const CycleVisitor& visit) {
  check_lengths(opts.min_len, opts.max_len);
  const std::size_t n = d.vertex_count();
  const std::size_t max_len = opts.max_len == 0 ? n : std::min(opts.max_len, n);
  Counter counter{0, 0, &opts};
  CycleSearch search(d, counter, visit);
  for (std::size_t len = opts.min_len; len <= max_len; ++len) {
    for (Vertex s = 0; s < n; ++s) {
      if (!search.run(s, len)) return;
    }
  }
}

std::vector<Cycle> enumerate_cycles(const Digraph& d, const EnumerationOptions& opts) {
  std::vector<Cycle> out;
  for_each_cycle(d, opts, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void for_each_circuit(const Digraph& d, const EnumerationOptions& opts,
                      const CircuitVisitor& visit) {
  check_lengths(opts.min_len, opts.max_len);
  if (opts.max_len == 0) {
    throw Error(ErrorKind::InvalidArgument, "circuit enumeration needs an explicit max_len");
  }
  // A closed trail cannot be longer than the arc set.
  const std::size_t max_len = std::min(opts.max_len, d.arc_count());
  Counter counter{0, 0, &opts};
  CircuitSearch search(d, counter, visit);
  for (std::size_t len = opts.min_len; len <= max_len; ++len) {
    for (Vertex s = 0; s < d.vertex_count(); ++s) {
      if (!search.run(s, len)) return;
    }
  }
}

std::vector<Circuit> enumerate_circuits(const Digraph& d, const EnumerationOptions& opts) {
  std::vector<Circuit> out;
  for_each_circuit(d, opts, [&](const Circuit& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Chord> chords_of(const Digraph& d, std::span<const Vertex> walk) {
  const std::size_t n = walk.size();
  std::vector<Arc> own;
  own.reserve(n);
  for (std::size_t i = 0; i < n; ++i) own.emplace_back(walk[i], walk[(i + 1) % n]);
  std::sort(own.begin(), own.end());

  std::vector<Chord> chords;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (walk[i] == walk[j] || !d.has_arc(walk[i], walk[j])) continue;
      if (std::binary_search(own.begin(), own.end(), Arc{walk[i], walk[j]})) continue;
      chords.push_back(Chord{i, j, (j + n - i) % n, walk[i], walk[j]});
    }
  }
  return chords;
}

bool are_crossed(const Chord& a, const Chord& b, std::size_t n) noexcept {
  if (n == 0) return false;
  // Lift b's tail to the first position after a's tail; any other lift
  // overshoots j + k since k < n.
  const std::size_t delta = (b.tail_pos + n - a.tail_pos) % n;
  return 0 < delta && delta < a.length && a.length < delta + b.length;
}

std::string to_string(CycleCondition c) {
  return c == CycleCondition::TwoConsecutive ? "two-consecutive" : "three-with-crossing";
}

namespace {

std::vector<Chord> short_chords(const Digraph& d, std::span<const Vertex> walk) {
  auto all = chords_of(d, walk);
  std::erase_if(all, [](const Chord& c) { return !is_short_chord(c); });
  return all;
}

bool crossed_either_way(const Chord& a, const Chord& b, std::size_t n) {
  return are_crossed(a, b, n) || are_crossed(b, a, n);
}

}  // namespace

std::string cycle_condition_failure(const Digraph& d, const Cycle& c, CycleCondition condition) {
  const std::size_t n = c.length();
  auto chords = short_chords(d, c.vertices);
  if (n % 3 == 0) {
    return chords.empty() ? "length divisible by 3 without a short chord" : "";
  }
  bool has_pair = false;
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = 0; b < chords.size(); ++b) {
      if (a == b || !are_consecutive(chords[a], chords[b])) continue;
      has_pair = true;
      if (condition == CycleCondition::TwoConsecutive) return "";
      for (std::size_t x = 0; x < chords.size(); ++x) {
        if (x == a || x == b) continue;
        if (crossed_either_way(chords[x], chords[a], n) ||
            crossed_either_way(chords[x], chords[b], n)) {
          return "";
        }
      }
    }
  }
  if (!has_pair) return "length not divisible by 3 without two consecutive short chords";
  return "length not divisible by 3 without a short chord crossing a consecutive pair";
}

namespace {

bool record(HypothesisReport& report, const HypothesisOptions& opts, HypothesisViolation v) {
  report.satisfied = false;
  report.violations.push_back(std::move(v));
  return opts.max_violations == 0 || report.violations.size() < opts.max_violations;
}

}  // namespace

HypothesisReport check_cycle_hypothesis(const Digraph& d, CycleCondition condition,
                                        std::size_t min_cycle_len,
                                        const HypothesisOptions& opts) {
  HypothesisReport report;
  EnumerationOptions enumeration = opts.enumeration;
  enumeration.min_len = std::max(enumeration.min_len, min_cycle_len);
  enumeration.max_len = 0;
  for_each_cycle(d, enumeration, [&](const Cycle& c) {
    ++report.examined;
    auto reason = cycle_condition_failure(d, c, condition);
    if (reason.empty()) return true;
    return record(report, opts, {c.vertices, reason, short_chords(d, c.vertices)});
  });
  return report;
}

HypothesisReport check_circuit_hypothesis(const Digraph& d, std::size_t max_len,
                                          std::size_t min_circuit_len,
                                          const HypothesisOptions& opts) {
  HypothesisReport report;
  if (max_len < min_circuit_len) return report;
  EnumerationOptions enumeration = opts.enumeration;
  enumeration.min_len = std::max(enumeration.min_len, min_circuit_len);
  enumeration.max_len = max_len;
  for_each_circuit(d, enumeration, [&](const Circuit& c) {
    ++report.examined;
    if (c.length() % 3 == 0) return true;
    auto chords = short_chords(d, c.vertices);
    if (chords.size() >= 4) return true;
    return record(report, opts,
                  {c.vertices,
                   "length not divisible by 3 with " + std::to_string(chords.size()) +
                       " short chords",
                   chords});
  });
  return report;
}

HypothesisReport every_cycle_has_symmetric_arc(const Digraph& d, const HypothesisOptions& opts) {
  HypothesisReport report;
  EnumerationOptions enumeration = opts.enumeration;
  enumeration.max_len = 0;
  for_each_cycle(d, enumeration, [&](const Cycle& c) {
    ++report.examined;
    const std::size_t n = c.length();
    for (std::size_t i = 0; i < n; ++i) {
      if (d.has_arc(c.vertices[(i + 1) % n], c.vertices[i])) return true;
    }
    return record(report, opts, {c.vertices, "cycle without a symmetric arc", {}});
  });
  return report;
}

}  // namespace dikernel
