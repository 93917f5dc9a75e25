#include "doctest.h"

#include <set>

#include "dikernel/generators.hpp"
#include "support.hpp"

using namespace dikernel;
using support::kind_of;

TEST_CASE("splitmix64 reference outputs") {
  // Published outputs for seed 0 and seed 1234567.
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 other(1234567);
  CHECK(other.next() == 6457827717110365317ULL);
  CHECK(other.next() == 3203168211198807973ULL);

  SplitMix64 unit(7);
  for (int i = 0; i < 1000; ++i) {
    double x = unit.next_unit();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
  }
}

TEST_CASE("random digraphs") {
  CHECK(random_digraph(6, 0.0, 1).arc_count() == 0);
  CHECK(random_digraph(6, 1.0, 1).arc_count() == 30);
  CHECK(random_digraph(8, 0.3, 99) == random_digraph(8, 0.3, 99));
  CHECK_FALSE(random_digraph(8, 0.3, 99) == random_digraph(8, 0.3, 100));
}

TEST_CASE("random strongly connected digraphs") {
  auto ham = random_strongly_connected(7, 0.0, 5);
  CHECK(ham.arc_count() == 7);
  CHECK(is_strongly_connected(ham));
  CHECK(enumerate_cycles(ham).size() == 1);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto d = random_strongly_connected(1 + s % 9, 0.1 * static_cast<double>(s % 5), s);
    REQUIRE(is_strongly_connected(d));
  }
  CHECK(random_strongly_connected(8, 0.2, 3) == random_strongly_connected(8, 0.2, 3));
  CHECK(kind_of([] { random_strongly_connected(0, 0.1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("directed cycles") {
  CHECK(directed_cycle(6).arcs() ==
        std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(directed_cycle(2).arc_count() == 2);
  CHECK(directed_cycle(1).arc_count() == 0);
}

TEST_CASE("labeled digraph enumeration") {
  CHECK(enumerate_labeled_digraphs(1).size() == 1);
  CHECK(enumerate_labeled_digraphs(2).size() == 4);
  CHECK(enumerate_labeled_digraphs(3).size() == 64);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Arc>> seen;
    std::uint64_t count = 0;
    for_each_labeled_digraph(n, [&](const Digraph& d) {
      seen.insert(d.arcs());
      ++count;
      return true;
    });
    CHECK(count == labeled_digraph_count(n));
    CHECK(seen.size() == count);
  }
  CHECK(labeled_digraph_count(4) == 4096);
  CHECK(labeled_digraph(2, 1).arcs() == std::vector<Arc>{{0, 1}});
  CHECK(labeled_digraph(2, 2).arcs() == std::vector<Arc>{{1, 0}});
  CHECK(kind_of([] { enumerate_labeled_digraphs(5); }) == ErrorKind::SizeBound);
}

TEST_CASE("hypothesis class samples") {
  auto triangle = build_digraph(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(in_hypothesis_class(triangle, {HypothesisClass::Duchet}));
  CHECK(in_hypothesis_class(directed_cycle(6), {HypothesisClass::CircuitPlusQuasi}));
  CHECK(oracle::all_induced_have_kernel(oracle::from(directed_cycle(6)), 3, 2, true));
  CHECK_FALSE(in_hypothesis_class(directed_cycle(4), {HypothesisClass::CircuitPlusQuasi}));

  // Among strongly connected digraphs on 2..4 vertices nothing satisfies the
  // crossing condition once digons count as cycles.
  for (std::size_t n = 2; n <= 4; ++n) {
    auto scan = scan_hypothesis_class(
        {HypothesisClass::CycleCondition, CycleCondition::ThreeWithCrossing, 2}, n);
    CHECK(scan.tried > 0);
    CHECK(scan.accepted == 0);
  }

  for (auto id : {ClassId{HypothesisClass::Duchet},
                  ClassId{HypothesisClass::CircuitPlusQuasi},
                  ClassId{HypothesisClass::CycleCondition, CycleCondition::TwoConsecutive, 3}}) {
    auto sample = sample_hypothesis_class(id, 6, 150, 17, 0.15);
    CHECK(sample.tried == 150);
    CHECK(sample.accepted == sample.instances.size());
    for (const auto& d : sample.instances) {
      CHECK(is_strongly_connected(d));
      CHECK(in_hypothesis_class(d, id));
    }
  }
  auto sample = sample_hypothesis_class({HypothesisClass::Duchet}, 4, 30, 3, 0.5);
  CHECK(sample.accepted > 0);
}
