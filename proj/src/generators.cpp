#include "dikernel/generators.hpp"

#include <numeric>

#include "dikernel/error.hpp"

namespace dikernel {

namespace {

std::vector<Arc> ordered_pairs(std::size_t n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "probability outside [0, 1]");
}

}  // namespace

Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed) {
  check_probability(arc_prob);
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (const auto& pair : ordered_pairs(n)) {
    if (rng.next_unit() < arc_prob) arcs.push_back(pair);
  }
  return Digraph::build(n, arcs);
}

Digraph random_strongly_connected(std::size_t n, double extra_arc_prob, std::uint64_t seed) {
  check_probability(extra_arc_prob);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "strongly connected generator needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.next_below(i + 1)]);
  }
  std::vector<std::uint8_t> taken(n * n, 0);
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      Vertex u = order[i], v = order[(i + 1) % n];
      arcs.emplace_back(u, v);
      taken[static_cast<std::size_t>(u) * n + v] = 1;
    }
  }
  for (const auto& [u, v] : ordered_pairs(n)) {
    if (taken[static_cast<std::size_t>(u) * n + v] != 0) continue;
    if (rng.next_unit() < extra_arc_prob) arcs.emplace_back(u, v);
  }
  return Digraph::build(n, arcs);
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (Vertex i = 0; i < n; ++i) arcs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  }
  return Digraph::build(n, arcs);
}

std::uint64_t labeled_digraph_count(std::size_t n) {
  if (n > kMaxExhaustiveVertices) {
    throw Error(ErrorKind::SizeBound, "exhaustive enumeration supports n <= 4");
  }
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)));
}

Digraph labeled_digraph(std::size_t n, std::uint64_t code) {
  if (code >= labeled_digraph_count(n)) {
    throw Error(ErrorKind::InvalidArgument, "digraph code out of range");
  }
  const auto pairs = ordered_pairs(n);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((code >> i) & 1U) arcs.push_back(pairs[i]);
  }
  return Digraph::build(n, arcs);
}

void for_each_labeled_digraph(std::size_t n, const std::function<bool(const Digraph&)>& visit) {
  const std::uint64_t count = labeled_digraph_count(n);
  for (std::uint64_t code = 0; code < count; ++code) {
    if (!visit(labeled_digraph(n, code))) return;
  }
}

std::vector<Digraph> enumerate_labeled_digraphs(std::size_t n) {
  std::vector<Digraph> out;
  for_each_labeled_digraph(n, [&](const Digraph& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

std::string ClassId::to_string() const {
  switch (kind) {
    case HypothesisClass::CycleCondition:
      return "cycle-condition(" + dikernel::to_string(condition) +
             ",min_cycle_len=" + std::to_string(min_cycle_len) + ")";
    case HypothesisClass::CircuitPlusQuasi: return "circuit-condition+quasi-3-kernel-perfect";
    case HypothesisClass::Duchet: return "every-cycle-has-symmetric-arc";
  }
  return "unknown";
}

bool in_hypothesis_class(const Digraph& d, const ClassId& id, const ClassLimits& limits) {
  HypothesisOptions opts;
  opts.max_violations = 1;
  opts.enumeration.budget = limits.budget;
  switch (id.kind) {
    case HypothesisClass::CycleCondition:
      return check_cycle_hypothesis(d, id.condition, id.min_cycle_len, opts).satisfied;
    case HypothesisClass::CircuitPlusQuasi:
      return check_circuit_hypothesis(d, d.arc_count(), 2, opts).satisfied &&
             is_quasi_3_kernel_perfect(d, limits.perfection).perfect;
    case HypothesisClass::Duchet:
      return every_cycle_has_symmetric_arc(d, opts).satisfied;
  }
  return false;
}

ClassSample sample_hypothesis_class(const ClassId& id, std::size_t n, std::uint64_t trials,
                                    std::uint64_t seed, double extra_arc_prob,
                                    const ClassLimits& limits) {
  ClassSample sample;
  sample.id = id;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto d = random_strongly_connected(n, extra_arc_prob, trial_seed(seed, t));
    ++sample.tried;
    if (in_hypothesis_class(d, id, limits)) {
      ++sample.accepted;
      sample.instances.push_back(std::move(d));
    }
  }
  return sample;
}

ClassSample scan_hypothesis_class(const ClassId& id, std::size_t n, const ClassLimits& limits) {
  ClassSample sample;
  sample.id = id;
  for_each_labeled_digraph(n, [&](const Digraph& d) {
    if (!is_strongly_connected(d)) return true;
    ++sample.tried;
    if (in_hypothesis_class(d, id, limits)) {
      ++sample.accepted;
      sample.instances.push_back(d);
    }
    return true;
  });
  return sample;
}

}  // namespace dikernel
