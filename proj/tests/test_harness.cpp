#include "doctest.h"

#include "dikernel/harness.hpp"
#include "dikernel/text_format.hpp"
#include "support.hpp"

using namespace dikernel;
using support::kind_of;

namespace {

CampaignParams small(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
  CampaignParams p;
  p.n = n;
  p.trials = trials;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("catalog") {
  std::vector<std::string> ids;
  for (const auto& info : property_catalog()) ids.push_back(info.id);
  CHECK(ids == std::vector<std::string>{"closure-lemma", "closure-distance", "duchet",
                                        "reverse-path", "theorem2", "pre-kernel-props", "roads",
                                        "unique-chord", "additive-inverse", "theorem4"});
  CHECK(kind_of([] { run_verification("nope", {}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("every campaign runs and its body is reproducible") {
  for (const auto& info : property_catalog()) {
    INFO(info.id);
    auto params = small(5, 20, 3);
    auto a = run_verification(info.id, params);
    auto b = run_verification(info.id, params);
    CHECK(a.body().dump() == b.body().dump());
    CHECK(a.body()["property"] == info.id);
    CHECK(a.to_json()["footer"].contains("wall_time_seconds"));
    CHECK(a.failures.size() <= params.max_failures);
    CHECK(a.failure_count >= a.failures.size());
    CHECK((a.failure_count == 0) == a.passed());
  }
}

TEST_CASE("closure campaigns on random digraphs") {
  auto lemma = run_verification("closure-lemma", small(6, 200, 7));
  CHECK(lemma.passed());
  CHECK(lemma.instances_checked == 200);
  CHECK(lemma.statistics["subsets_checked"] == 200 * 64);
  auto law = run_verification("closure-distance", small(10, 50, 1));
  CHECK(law.passed());
}

TEST_CASE("exhaustive duchet campaign") {
  auto p = small(4, 0, 0);
  p.exhaustive = true;
  auto r = run_verification("duchet", p);
  CHECK(r.passed());
  CHECK_FALSE(r.vacuous);
  CHECK(r.status() == "pass");
  p.n = 5;
  CHECK(kind_of([&] { run_verification("duchet", p); }) == ErrorKind::SizeBound);
}

TEST_CASE("cycle-condition campaigns report occupancy per convention") {
  auto r = run_verification("theorem2", small(4, 50, 2));
  const auto& occ = r.statistics["occupancy"];
  REQUIRE(occ.size() == 2);
  CHECK(occ[0]["min_cycle_len"] == 2);
  CHECK(occ[0]["accepted"] == 0);
  CHECK(occ[0]["vacuous"] == true);

  auto only = small(4, 50, 2);
  only.min_cycle_len = 2;
  auto vac = run_verification("theorem2", only);
  CHECK(vac.vacuous);
  CHECK(vac.status() == "vacuous");
  CHECK(vac.passed());
}

TEST_CASE("theorem4 always includes the fixed cycles") {
  auto r = run_verification("theorem4", small(6, 10, 11));
  const auto& fixed = r.statistics["fixed_instances"];
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[1]["name"] == "C6");
  CHECK(fixed[1]["accepted"] == true);
  CHECK(theorem4_fixed_instances()[1].second == directed_cycle(6));
}

TEST_CASE("failures carry replayable instances") {
  auto p = small(8, 100, 1);
  p.max_failures = 3;
  auto r = run_verification("pre-kernel-props", p);
  if (r.failure_count == 0) return;
  CHECK(r.failures.size() == std::min<std::uint64_t>(3, r.failure_count));
  for (const auto& f : r.failures) {
    auto d = parse_digraph_text(f.instance);
    Vertex x0 = f.detail["x0"].get<Vertex>();
    auto outcome = run_substitution_method(d, x0);
    CHECK_FALSE(check_pre_kernel_properties(outcome.trace).ok());
  }
}
