#include "doctest.h"

#include <set>

#include "dikernel/substitution.hpp"
#include "support.hpp"

using namespace dikernel;
using support::kind_of;

namespace {

using Labels = std::vector<std::string>;

Labels label_strings(const Road& r) {
  Labels out;
  for (const auto& l : r.labels) out.push_back(l.to_string());
  return out;
}

void check_against_oracle(const SubstitutionTrace& got, const oracle::Trace& want) {
  REQUIRE(static_cast<int>(got.p) == want.p);
  for (int i = 0; i <= 3 * want.p + 2; ++i) {
    INFO("N_" << i);
    CHECK(support::to_oracle(got.n(static_cast<std::size_t>(i))) == want.at(i));
  }
  for (int k = 1; k <= want.p; ++k) {
    CHECK(support::to_oracle(got.rounds[k].candidates) == want.m.at(3 * k));
  }
  for (int i = 1; i < 3 * want.p; ++i) {
    if (i % 3 == 0) continue;
    INFO("N'_" << i);
    CHECK(support::to_oracle(got.n_prime(static_cast<std::size_t>(i))) == want.prime(i));
  }
}

}  // namespace

TEST_CASE("C6 trace from x0 = 0 with K = {2, 5}") {
  auto c6 = directed_cycle(6);
  auto t = build_substitution_sequence(c6, 0, {2, 5});
  CHECK(t.n(0) == VertexSet{0});
  CHECK(t.n(1) == VertexSet{5});
  CHECK(t.n(2).empty());
  CHECK(t.rounds[1].candidates == VertexSet{3});
  CHECK(t.n(3) == VertexSet{3});
  CHECK(t.n(4) == VertexSet{2});
  CHECK(t.n(5).empty());
  CHECK(t.rounds[2].candidates.empty());
  CHECK(t.n(6).empty());
  CHECK(t.p == 2);

  auto inter = intermediate_sets(t);
  REQUIRE(inter.size() == 2);
  CHECK(inter[0].near.empty());
  CHECK(inter[0].far == VertexSet{4});
  CHECK(t.n_prime(4).empty());
  CHECK(t.n_prime(5) == VertexSet{1});

  CHECK(assemble_pre_3_kernel(t) == VertexSet{0, 3});
  CHECK(check_trace_invariants(t).ok());

  auto road = find_road(t, 3, 3);
  CHECK(road.path == std::vector<Vertex>{3, 4, 5, 0});
  CHECK(label_strings(road) == Labels{"N_3", "N'_2", "N_1", "N_0"});
  CHECK(validate_road(t, road.path).ok());

  auto short_road = find_road(t, 5, 1);
  CHECK(short_road.path == std::vector<Vertex>{5, 0});
  CHECK(validate_road(t, {5, 0}).ok());
  CHECK(find_road(t, 0, 0).path == std::vector<Vertex>{0});

  auto bad = validate_road(t, {4, 5, 0});
  CHECK_FALSE(bad.start_in_n_s);
  CHECK_FALSE(bad.ok());

  auto props = check_pre_kernel_properties(t);
  CHECK(props.two_absorbent);
  CHECK(props.short_paths.empty());
  CHECK(props.ok());

  auto inverse = check_additive_inverse_property(t, road);
  CHECK(inverse.ok());
  REQUIRE(inverse.checks.size() == 3);
  CHECK(inverse.checks[1].position == 2);
  CHECK(inverse.checks[1].distance == Distance(4));

  auto chord = check_unique_short_chord(t, road);
  CHECK_FALSE(chord.applicable);
  CHECK(chord.ok());
}

TEST_CASE("C3 and single-vertex traces") {
  auto t = build_substitution_sequence(directed_cycle(3), 0, {2});
  CHECK(t.n(1) == VertexSet{2});
  CHECK(t.n(2).empty());
  CHECK(t.rounds[1].candidates.empty());
  CHECK(t.n(3).empty());
  CHECK(t.p == 1);
  CHECK(t.n_prime(1).empty());
  CHECK(t.n_prime(2) == VertexSet{1});
  CHECK(assemble_pre_3_kernel(t) == VertexSet{0});

  auto single = build_substitution_sequence(build_digraph(1, {}), 0, {});
  CHECK(single.p == 0);
  CHECK(single.n(1).empty());
  CHECK(single.n(2).empty());
  CHECK(intermediate_sets(single).empty());
  CHECK(assemble_pre_3_kernel(single) == VertexSet{0});
  CHECK(check_pre_kernel_properties(single).ok());
}

TEST_CASE("C4 from x0 = 0 with K = {3}") {
  auto t = build_substitution_sequence(directed_cycle(4), 0, {3});
  CHECK(t.n(1) == VertexSet{3});
  CHECK(t.rounds[1].candidates == VertexSet{1});
  CHECK(t.n(3) == VertexSet{1});
  CHECK(t.p == 1);
  CHECK(assemble_pre_3_kernel(t) == VertexSet{0, 1});
  auto props = check_pre_kernel_properties(t);
  REQUIRE(props.short_paths.size() == 1);
  CHECK(props.short_paths[0].path == std::vector<Vertex>{0, 1});
  CHECK(props.violations.empty());
}

TEST_CASE("method on the worked cycles") {
  auto c6 = run_substitution_method(directed_cycle(6), 0);
  CHECK(c6.trace.kernel == VertexSet{2, 5});
  CHECK(c6.pre_3_kernel == VertexSet{0, 3});
  CHECK(c6.is_3_kernel);

  auto c3 = run_substitution_method(directed_cycle(3), 0);
  CHECK(c3.pre_3_kernel == VertexSet{0});
  CHECK(c3.is_3_kernel);

  auto c4 = run_substitution_method(directed_cycle(4), 0);
  CHECK(c4.pre_3_kernel == VertexSet{0, 1});
  CHECK_FALSE(c4.is_3_kernel);
  REQUIRE(c4.failure_witness);
  CHECK(*c4.failure_witness == std::vector<Vertex>{0, 1});

  auto single = run_substitution_method(build_digraph(1, {}), 0);
  CHECK(single.pre_3_kernel == VertexSet{0});
  CHECK(single.is_3_kernel);
}

TEST_CASE("precondition errors") {
  auto c6 = directed_cycle(6);
  CHECK(kind_of([&] { build_substitution_sequence(c6, 0, {2}); }) == ErrorKind::NotAKernel);
  auto t = build_substitution_sequence(c6, 0, {2, 5});
  CHECK(kind_of([&] { find_road(t, 4, 2); }) == ErrorKind::InvalidArgument);
  // D - 0 is a 4-cycle, which has no 3-kernel.
  auto no_base = build_digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(kind_of([&] { run_substitution_method(no_base, 0); }) == ErrorKind::NoBaseKernel);
}

TEST_CASE("traces agree with a set-by-set recomputation") {
  std::size_t built = 0, missing = 0;
  for (const auto& d : support::corpus(200, 7, 61)) {
    auto g = oracle::from(d);
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      oracle::Set keep;
      for (int v = 0; v < g.n; ++v) {
        if (v != static_cast<int>(x0)) keep.push_back(v);
      }
      auto base = oracle::least_kernel(oracle::induced(g, keep), 3, 2);
      if (!base) {
        CHECK(kind_of([&] { run_substitution_method(d, x0); }) == ErrorKind::NoBaseKernel);
        continue;
      }
      oracle::Set kernel;
      for (int i : *base) kernel.push_back(keep[i]);
      auto want = oracle::trace(g, static_cast<int>(x0), kernel);
      if (want.subkernel_missing) {
        ++missing;
        CHECK(kind_of([&] { run_substitution_method(d, x0); }) == ErrorKind::SubkernelMissing);
        continue;
      }
      ++built;
      auto outcome = run_substitution_method(d, x0);
      CHECK(support::to_oracle(outcome.trace.kernel) == kernel);
      check_against_oracle(outcome.trace, want);
      CHECK(support::to_oracle(outcome.pre_3_kernel) == oracle::pre_kernel(want));
      auto dist = oracle::floyd(g);
      CHECK(outcome.is_3_kernel == oracle::is_kl_kernel(dist, oracle::pre_kernel(want), 3, 2));
      CHECK(check_trace_invariants(outcome.trace).ok());
    }
  }
  CHECK(built > 300);
  MESSAGE("traces built: " << built << ", subkernel missing: " << missing);
}

TEST_CASE("road search finds exactly the brute-force roads") {
  std::size_t roads = 0;
  for (const auto& d : support::corpus(160, 7, 62)) {
    auto g = oracle::from(d);
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      std::optional<MethodOutcome> outcome;
      try {
        outcome = run_substitution_method(d, x0);
      } catch (const Error&) {
        continue;
      }
      const auto& t = outcome->trace;
      auto want_trace = oracle::trace(g, static_cast<int>(x0), support::to_oracle(t.kernel));
      for (std::size_t s = 0; s <= 3 * t.p; ++s) {
        for (Vertex v : t.n(s)) {
          auto want = oracle::roads(g, want_trace, static_cast<int>(v), static_cast<int>(s));
          std::set<std::vector<int>> got;
          for (const auto& r : enumerate_roads(t, v, s)) {
            got.insert({r.path.begin(), r.path.end()});
            CHECK(validate_road(t, r.path).ok());
          }
          CHECK(got == want);
          CHECK(try_find_road(t, v, s).has_value() == !want.empty());
          roads += want.size();
        }
      }
    }
  }
  CHECK(roads > 300);
}

TEST_CASE("road validation agrees with the literal conditions on arbitrary paths") {
  for (const auto& d : support::corpus(80, 6, 63)) {
    auto g = oracle::from(d);
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      std::optional<MethodOutcome> outcome;
      try {
        outcome = run_substitution_method(d, x0);
      } catch (const Error&) {
        continue;
      }
      const auto& t = outcome->trace;
      auto want_trace = oracle::trace(g, static_cast<int>(x0), support::to_oracle(t.kernel));
      // Every walk of length <= 4 ending at x0 (vertices may repeat).
      std::vector<int> path{static_cast<int>(x0)};
      auto rec = [&](auto&& self) -> void {
        std::vector<Vertex> lib(path.rbegin(), path.rend());
        std::vector<int> forward(path.rbegin(), path.rend());
        CHECK(validate_road(t, lib).ok() == oracle::is_road(g, want_trace, forward));
        if (path.size() == 5) return;
        for (int w = 0; w < g.n; ++w) {
          if (!g.arc(w, path.back())) continue;
          path.push_back(w);
          self(self);
          path.pop_back();
        }
      };
      rec(rec);
    }
  }
}

TEST_CASE("pre-kernel report agrees with the definition") {
  for (const auto& d : support::corpus(150, 7, 64)) {
    auto g = oracle::from(d);
    auto dist = oracle::floyd(g);
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      std::optional<MethodOutcome> outcome;
      try {
        outcome = run_substitution_method(d, x0);
      } catch (const Error&) {
        continue;
      }
      const auto& t = outcome->trace;
      auto n = support::to_oracle(outcome->pre_3_kernel);
      auto report = check_pre_kernel_properties(t);
      bool absorbent = true;
      for (int v = 0; v < g.n; ++v) {
        if (oracle::member(n, v)) continue;
        bool hit = false;
        for (int b : n) hit = hit || dist[v][b] <= 2;
        absorbent = absorbent && hit;
      }
      CHECK(report.two_absorbent == absorbent);
      std::size_t pairs = 0, bad = 0;
      for (int a : n) {
        for (int b : n) {
          if (a == b || dist[a][b] > 2) continue;
          ++pairs;
          std::optional<int> ka, kb;
          for (int k = 0; k <= static_cast<int>(t.p); ++k) {
            if (oracle::member(support::to_oracle(t.n(3 * k)), a)) ka = k;
            if (oracle::member(support::to_oracle(t.n(3 * k)), b)) kb = k;
          }
          if (!(ka && kb && *ka <= *kb)) ++bad;
        }
      }
      CHECK(report.short_paths.size() == pairs);
      CHECK(report.violations.size() == bad);
    }
  }
}

TEST_CASE("unique-chord checker flags a second skip arc") {
  // Path 5 -> 4 -> 3 -> 2 -> 1 -> 0 with skip arcs (4, 2) and (3, 1).
  auto d = build_digraph(6, {{5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}, {4, 2}, {3, 1}});
  SubstitutionTrace t;
  t.digraph = d;
  t.distances = distance_matrix(d);
  t.x0 = 0;
  Road road;
  road.path = {5, 4, 3, 2, 1, 0};
  auto report = check_unique_short_chord(t, road);
  CHECK(report.applicable);
  CHECK(report.skip_positions == std::vector<std::size_t>{3, 4});
  CHECK_FALSE(report.unique);
  CHECK_FALSE(report.ok());

  auto single = build_digraph(6, {{5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}, {3, 1}});
  t.digraph = single;
  auto one = check_unique_short_chord(t, road);
  CHECK(one.applicable);
  CHECK(one.unique);
  // Position 5 lies beyond the skip arc and is not in N_5.
  CHECK(one.label_violations == std::vector<std::size_t>{5});
}

TEST_CASE("additive inverse check") {
  auto t = build_substitution_sequence(directed_cycle(6), 0, {2, 5});
  Road origin;
  origin.path = {0};
  auto r = check_additive_inverse_property(t, origin);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].ok);
  auto five = check_additive_inverse_property(t, find_road(t, 5, 1));
  CHECK(five.checks.size() == 1);
  CHECK(five.ok());
}

TEST_CASE("traces are deterministic") {
  for (const auto& d : support::corpus(40, 7, 65)) {
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      try {
        auto a = run_substitution_method(d, x0);
        auto b = run_substitution_method(d, x0);
        CHECK(a.pre_3_kernel == b.pre_3_kernel);
        for (std::size_t i = 0; i <= 3 * a.trace.p + 2; ++i) CHECK(a.trace.n(i) == b.trace.n(i));
      } catch (const Error&) {
      }
    }
  }
}
