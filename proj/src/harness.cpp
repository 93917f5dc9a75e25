#include "dikernel/harness.hpp"

#include <array>
#include <chrono>
#include <functional>

#include "dikernel/error.hpp"
#include "dikernel/generators.hpp"
#include "dikernel/text_format.hpp"

namespace dikernel {

namespace {

constexpr std::array<double, 6> kArcPalette{0.0, 0.05, 0.1, 0.15, 0.25, 0.4};

enum class Source {
  Any,                // random_digraph, exact n
  StronglyConnected,  // random_strongly_connected, n drawn from [2, n]
  Mixed,              // even trials strongly connected, odd trials arbitrary
};

using InstanceVisitor = std::function<void(std::uint64_t, const Digraph&)>;

void for_each_instance(const CampaignParams& params, Source source, const InstanceVisitor& visit) {
  if (params.exhaustive) {
    if (params.n > kMaxExhaustiveVertices) {
      throw Error(ErrorKind::SizeBound, "exhaustive campaigns need n <= 4");
    }
    std::uint64_t index = 0;
    for (std::size_t n = 1; n <= params.n; ++n) {
      for_each_labeled_digraph(n, [&](const Digraph& d) {
        if (source != Source::StronglyConnected || is_strongly_connected(d)) visit(index, d);
        ++index;
        return true;
      });
    }
    return;
  }
  for (std::uint64_t t = 0; t < params.trials; ++t) {
    SplitMix64 rng(trial_seed(params.seed, t));
    std::size_t n = params.n;
    bool strong = source == Source::StronglyConnected || (source == Source::Mixed && t % 2 == 0);
    if (source != Source::Any && n > 2) n = 2 + rng.next_below(n - 1);
    double p = params.arc_prob ? *params.arc_prob : kArcPalette[rng.next_below(kArcPalette.size())];
    std::uint64_t gen_seed = rng.next();
    if (strong) {
      visit(t, random_strongly_connected(n, p, gen_seed));
    } else {
      visit(t, random_digraph(n, p, gen_seed));
    }
  }
}

class Campaign {
 public:
  Campaign(std::string_view id, std::string statement, const CampaignParams& params) {
    report_.property_id = std::string(id);
    report_.statement = std::move(statement);
    report_.parameters = params;
  }

  void fail(std::uint64_t trial, const Digraph& d, Json detail,
            std::optional<std::string> label = std::nullopt) {
    ++report_.failure_count;
    if (report_.failures.size() < report_.parameters.max_failures) {
      report_.failures.push_back({trial, std::move(label), format_digraph(d), std::move(detail)});
    }
  }

  void checked() { ++report_.instances_checked; }
  Json& stats() { return report_.statistics; }
  void count(const std::string& key, std::uint64_t by = 1) {
    auto& slot = report_.statistics[key];
    slot = (slot.is_null() ? 0 : slot.get<std::uint64_t>()) + by;
  }

  VerificationReport finish(bool vacuous) {
    report_.vacuous = vacuous;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

void require_n(const CampaignParams& params, std::size_t limit) {
  if (params.n > limit) {
    throw Error(ErrorKind::SizeBound,
                "n = " + std::to_string(params.n) + " exceeds " + std::to_string(limit));
  }
}

std::vector<std::size_t> conventions(const CampaignParams& params) {
  if (params.min_cycle_len) return {*params.min_cycle_len};
  return {2, 3};
}

ClassLimits class_limits(const CampaignParams& params) {
  ClassLimits limits;
  limits.budget = params.budget;
  return limits;
}

/// Class membership, with nullopt when the enumeration ran out of budget.
std::optional<bool> classify(const Digraph& d, const ClassId& id, const ClassLimits& limits) {
  try {
    return in_hypothesis_class(d, id, limits);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return std::nullopt;
    throw;
  }
}

Json subset_json(std::uint64_t mask, std::size_t n) {
  Json out = Json::array();
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

VerificationReport closure_lemma(const CampaignParams& params, std::string statement) {
  require_n(params, 16);
  Campaign c("closure-lemma", std::move(statement), params);
  std::uint64_t subsets = 0, kernels = 0;
  for_each_instance(params, Source::Any, [&](std::uint64_t t, const Digraph& d) {
    c.checked();
    std::size_t n = d.vertex_count();
    auto dist = distance_matrix(d);
    auto closure_dist = distance_matrix(k_closure(d, 2));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1U) s.push_back(static_cast<Vertex>(v));
      }
      bool direct = is_kl_kernel(dist, s, {3, 2});
      bool reduced = is_kl_kernel(closure_dist, s, {2, 1});
      ++subsets;
      if (direct) ++kernels;
      if (direct != reduced) {
        c.fail(t, d,
               {{"subset", subset_json(mask, n)},
                {"is_32_kernel_of_D", direct},
                {"is_kernel_of_closure", reduced}});
      }
    }
  });
  c.stats()["subsets_checked"] = subsets;
  c.stats()["three_kernels_found"] = kernels;
  return c.finish(false);
}

VerificationReport closure_distance(const CampaignParams& params, std::string statement) {
  require_n(params, 512);
  Campaign c("closure-distance", std::move(statement), params);
  std::uint64_t pairs = 0;
  for_each_instance(params, Source::Any, [&](std::uint64_t t, const Digraph& d) {
    c.checked();
    auto dist = distance_matrix(d);
    for (std::uint32_t k : {2U, 3U}) {
      auto closure_dist = distance_matrix(k_closure(d, k));
      for (std::size_t u = 0; u < d.vertex_count(); ++u) {
        for (std::size_t v = 0; v < d.vertex_count(); ++v) {
          Distance base = dist(u, v), got = closure_dist(u, v);
          Distance want = base.is_reachable() ? Distance((base.value() + k - 1) / k) : Distance{};
          ++pairs;
          if (got != want) {
            c.fail(t, d,
                   {{"k", k},
                    {"u", u},
                    {"v", v},
                    {"distance", to_json(base)},
                    {"closure_distance", to_json(got)}});
          }
        }
      }
    }
  });
  c.stats()["pairs_checked"] = pairs;
  return c.finish(false);
}

VerificationReport duchet(const CampaignParams& params, std::string statement) {
  require_n(params, 12);
  Campaign c("duchet", std::move(statement), params);
  ClassId id{HypothesisClass::Duchet};
  auto limits = class_limits(params);
  std::uint64_t tried = 0, accepted = 0, skipped = 0;
  for_each_instance(params, Source::StronglyConnected, [&](std::uint64_t t, const Digraph& d) {
    ++tried;
    auto member = classify(d, id, limits);
    if (!member) {
      ++skipped;
      return;
    }
    if (!*member) return;
    ++accepted;
    c.checked();
    auto r = is_kernel_perfect(d, limits.perfection);
    if (!r.perfect) c.fail(t, d, {{"kernel_free_induced_subset", *r.counterexample}});
  });
  c.stats()["tried"] = tried;
  c.stats()["accepted"] = accepted;
  c.stats()["skipped_budget"] = skipped;
  return c.finish(accepted == 0);
}

/// Shared loop of the two cycle-condition campaigns.
VerificationReport cycle_condition_campaign(
    std::string_view property, std::string statement, const CampaignParams& params,
    CycleCondition condition,
    const std::function<std::optional<Json>(const Digraph&)>& check) {
  require_n(params, 12);
  Campaign c(property, std::move(statement), params);
  auto limits = class_limits(params);
  auto convs = conventions(params);
  std::vector<std::uint64_t> tried(convs.size()), accepted(convs.size()), skipped(convs.size());
  for_each_instance(params, Source::StronglyConnected, [&](std::uint64_t t, const Digraph& d) {
    for (std::size_t i = 0; i < convs.size(); ++i) {
      ClassId id{HypothesisClass::CycleCondition, condition, convs[i]};
      ++tried[i];
      auto member = classify(d, id, limits);
      if (!member) {
        ++skipped[i];
        continue;
      }
      if (!*member) continue;
      ++accepted[i];
      c.checked();
      if (auto detail = check(d)) {
        (*detail)["min_cycle_len"] = convs[i];
        c.fail(t, d, std::move(*detail));
      }
    }
  });
  Json occupancy = Json::array();
  bool any = false;
  for (std::size_t i = 0; i < convs.size(); ++i) {
    occupancy.push_back({{"min_cycle_len", convs[i]},
                         {"tried", tried[i]},
                         {"accepted", accepted[i]},
                         {"skipped_budget", skipped[i]},
                         {"vacuous", accepted[i] == 0}});
    any = any || accepted[i] > 0;
  }
  c.stats()["condition"] = to_string(condition);
  c.stats()["occupancy"] = occupancy;
  return c.finish(!any);
}

VerificationReport reverse_path(const CampaignParams& params, std::string statement) {
  return cycle_condition_campaign(
      "reverse-path", std::move(statement), params, CycleCondition::TwoConsecutive,
      [](const Digraph& d) -> std::optional<Json> {
        auto dist = distance_matrix(d);
        for (auto [u, v] : d.arcs()) {
          if (!dist(v, u).within(2)) {
            return Json{{"arc", {u, v}}, {"reverse_distance", to_json(dist(v, u))}};
          }
        }
        return std::nullopt;
      });
}

VerificationReport theorem2(const CampaignParams& params, std::string statement) {
  return cycle_condition_campaign(
      "theorem2", std::move(statement), params, CycleCondition::ThreeWithCrossing,
      [](const Digraph& d) -> std::optional<Json> {
        if (find_kl_kernel(d, KernelQuery::k_kernel(3)).found) return std::nullopt;
        return Json{{"reason", "no (3,2)-kernel"}};
      });
}

/// Runs the method from every x0, handing each built trace to `visit`.
void for_each_trace(Campaign& c, const Digraph& d,
                    const std::function<void(const MethodOutcome&)>& visit) {
  for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
    try {
      auto outcome = run_substitution_method(d, x0);
      c.count("traces");
      visit(outcome);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoBaseKernel) {
        c.count("skipped_no_base_kernel");
      } else if (e.kind() == ErrorKind::SubkernelMissing) {
        c.count("skipped_subkernel_missing");
      } else {
        throw;
      }
    }
  }
}

Json trace_detail(const SubstitutionTrace& trace) {
  return Json{{"x0", trace.x0}, {"trace", trace_to_json(trace)}};
}

VerificationReport pre_kernel_props(const CampaignParams& params, std::string statement) {
  require_n(params, 12);
  Campaign c("pre-kernel-props", std::move(statement), params);
  for_each_instance(params, Source::Mixed, [&](std::uint64_t t, const Digraph& d) {
    for_each_trace(c, d, [&](const MethodOutcome& outcome) {
      c.checked();
      if (outcome.is_3_kernel) c.count("pre_kernel_is_3_kernel");
      auto invariants = check_trace_invariants(outcome.trace);
      auto props = check_pre_kernel_properties(outcome.trace);
      if (!invariants.ok() || !props.ok()) {
        auto detail = trace_detail(outcome.trace);
        detail["trace_invariants"] = invariants.problems;
        detail["pre_kernel_properties"] = to_json(props);
        c.fail(t, d, std::move(detail));
      }
    });
  });
  return c.finish(false);
}

VerificationReport roads(const CampaignParams& params, std::string statement) {
  require_n(params, 12);
  Campaign c("roads", std::move(statement), params);
  for_each_instance(params, Source::Mixed, [&](std::uint64_t t, const Digraph& d) {
    for_each_trace(c, d, [&](const MethodOutcome& outcome) {
      c.checked();
      const auto& trace = outcome.trace;
      for (std::size_t s = 0; s <= 3 * trace.p; ++s) {
        for (Vertex v : trace.n(s)) {
          c.count("roads_requested");
          auto road = try_find_road(trace, v, s);
          if (!road) {
            auto detail = trace_detail(trace);
            detail["vertex"] = v;
            detail["s"] = s;
            detail["reason"] = "no road";
            c.fail(t, d, std::move(detail));
            continue;
          }
          auto chord = check_unique_short_chord(trace, *road);
          if (!chord.skip_positions.empty()) c.count("roads_with_skip_arc");
          if (chord.applicable && !chord.ok()) {
            auto detail = trace_detail(trace);
            detail["road"] = to_json(*road);
            detail["unique_short_chord"] = to_json(chord);
            detail["reason"] = "unique short chord";
            c.fail(t, d, std::move(detail));
          }
        }
      }
    });
  });
  return c.finish(false);
}

VerificationReport unique_chord(const CampaignParams& params, std::string statement) {
  require_n(params, 12);
  Campaign c("unique-chord", std::move(statement), params);
  for_each_instance(params, Source::Mixed, [&](std::uint64_t t, const Digraph& d) {
    for_each_trace(c, d, [&](const MethodOutcome& outcome) {
      const auto& trace = outcome.trace;
      for (std::size_t s = 0; s <= 3 * trace.p; ++s) {
        for (Vertex v : trace.n(s)) {
          for (const auto& road : enumerate_roads(trace, v, s)) {
            c.count("roads");
            auto chord = check_unique_short_chord(trace, road);
            if (!chord.applicable) continue;
            c.count("applicable_roads");
            c.checked();
            if (!chord.ok()) {
              auto detail = trace_detail(trace);
              detail["road"] = to_json(road);
              detail["unique_short_chord"] = to_json(chord);
              c.fail(t, d, std::move(detail));
            }
          }
        }
      }
    });
  });
  return c.finish(c.stats().value("applicable_roads", 0) == 0);
}

/// Checks every road of every trace of `d` with the additive-inverse test.
/// Returns the failure details.
std::vector<Json> additive_inverse_failures(Campaign& c, const Digraph& d) {
  std::vector<Json> out;
  for_each_trace(c, d, [&](const MethodOutcome& outcome) {
    const auto& trace = outcome.trace;
    for (std::size_t s = 0; s <= 3 * trace.p; ++s) {
      for (Vertex v : trace.n(s)) {
        auto road = try_find_road(trace, v, s);
        if (!road) {
          auto detail = trace_detail(trace);
          detail["vertex"] = v;
          detail["s"] = s;
          detail["reason"] = "no road";
          out.push_back(std::move(detail));
          continue;
        }
        c.count("roads_checked");
        auto r = check_additive_inverse_property(trace, *road);
        if (!r.ok()) {
          auto detail = trace_detail(trace);
          detail["road"] = to_json(*road);
          detail["additive_inverse"] = to_json(r);
          detail["reason"] = "additive inverse";
          out.push_back(std::move(detail));
        }
      }
    }
  });
  return out;
}

VerificationReport additive_inverse(const CampaignParams& params, std::string statement) {
  require_n(params, 10);
  Campaign c("additive-inverse", std::move(statement), params);
  ClassId id{HypothesisClass::CircuitPlusQuasi};
  auto limits = class_limits(params);
  std::uint64_t tried = 0, accepted = 0, skipped = 0;
  for_each_instance(params, Source::StronglyConnected, [&](std::uint64_t t, const Digraph& d) {
    ++tried;
    auto member = classify(d, id, limits);
    if (!member) {
      ++skipped;
      return;
    }
    if (!*member) return;
    ++accepted;
    c.checked();
    for (auto& detail : additive_inverse_failures(c, d)) c.fail(t, d, std::move(detail));
  });
  c.stats()["tried"] = tried;
  c.stats()["accepted"] = accepted;
  c.stats()["skipped_budget"] = skipped;
  return c.finish(accepted == 0);
}

VerificationReport theorem4(const CampaignParams& params, std::string statement) {
  require_n(params, 10);
  Campaign c("theorem4", std::move(statement), params);
  ClassId id{HypothesisClass::CircuitPlusQuasi};
  auto limits = class_limits(params);
  std::uint64_t tried = 0, accepted = 0, skipped = 0;

  auto check = [&](std::uint64_t t, const Digraph& d, const std::optional<std::string>& label) {
    ++tried;
    auto member = classify(d, id, limits);
    if (!member) {
      ++skipped;
      return std::optional<bool>{};
    }
    if (!*member) return std::optional<bool>{false};
    ++accepted;
    c.checked();
    auto perfect = is_3_kernel_perfect(d, limits.perfection);
    if (!perfect.perfect) {
      c.fail(t, d, {{"reason", "not 3-kernel-perfect"}, {"counterexample", *perfect.counterexample}},
             label);
    }
    for (Vertex x0 = 0; x0 < d.vertex_count(); ++x0) {
      try {
        auto outcome = run_substitution_method(d, x0);
        if (!outcome.is_3_kernel) {
          auto detail = trace_detail(outcome.trace);
          detail["reason"] = "pre-3-kernel is not a 3-kernel";
          detail["pre_3_kernel"] = outcome.pre_3_kernel;
          detail["failure_witness"] =
              outcome.failure_witness ? Json(*outcome.failure_witness) : Json(nullptr);
          c.fail(t, d, std::move(detail), label);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoBaseKernel && e.kind() != ErrorKind::SubkernelMissing) throw;
        c.fail(t, d, {{"reason", std::string(e.what())}, {"x0", x0}}, label);
      }
    }
    for (auto& detail : additive_inverse_failures(c, d)) c.fail(t, d, std::move(detail), label);
    return std::optional<bool>{true};
  };

  Json fixed = Json::array();
  std::uint64_t index = 0;
  for (const auto& [name, d] : theorem4_fixed_instances()) {
    auto member = check(index++, d, name);
    fixed.push_back({{"name", name}, {"accepted", member ? Json(*member) : Json("skipped")}});
  }
  for_each_instance(params, Source::StronglyConnected, [&](std::uint64_t t, const Digraph& d) {
    check(t, d, std::nullopt);
  });
  c.stats()["fixed_instances"] = fixed;
  c.stats()["tried"] = tried;
  c.stats()["accepted"] = accepted;
  c.stats()["skipped_budget"] = skipped;
  return c.finish(accepted == 0);
}

using Runner = VerificationReport (*)(const CampaignParams&, std::string);

struct Entry {
  PropertyInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"closure-lemma", "S is a (3,2)-kernel of D iff S is a kernel of C^2(D), for every S"},
       closure_lemma},
      {{"closure-distance", "d in C^k(D) equals ceil(d_D / k) for k in {2, 3}"}, closure_distance},
      {{"duchet", "strongly connected, every cycle has a symmetric arc => kernel-perfect"},
       duchet},
      {{"reverse-path",
        "two consecutive short chords on every cycle => every arc (u,v) has d(v,u) <= 2"},
       reverse_path},
      {{"theorem2",
        "strongly connected, every cycle has the crossing chord condition => (3,2)-kernel exists"},
       theorem2},
      {{"pre-kernel-props",
        "pre-3-kernel is 2-absorbent and its internal short paths run N_3k' -> N_3k, k' <= k"},
       pre_kernel_props},
      {{"roads", "every vertex of N_s has a road of length s"}, roads},
      {{"unique-chord", "a road carries at most one position-skip arc, with N labels beyond it"},
       unique_chord},
      {{"additive-inverse", "circuit hypothesis => d(x0, t_j) = -j mod 3 on every road, j != 1"},
       additive_inverse},
      {{"theorem4",
        "strongly connected, quasi-3-kernel-perfect, circuit hypothesis => 3-kernel-perfect"},
       theorem4},
  };
  return table;
}

Json params_json(const CampaignParams& p) {
  return Json{{"n", p.n},
              {"trials", p.trials},
              {"seed", p.seed},
              {"exhaustive", p.exhaustive},
              {"arc_prob", p.arc_prob ? Json(*p.arc_prob) : Json(nullptr)},
              {"min_cycle_len", p.min_cycle_len ? Json(*p.min_cycle_len) : Json(nullptr)},
              {"max_failures", p.max_failures},
              {"budget", p.budget}};
}

}  // namespace

std::string VerificationReport::status() const {
  if (!passed()) return "fail";
  return vacuous ? "vacuous" : "pass";
}

Json VerificationReport::body() const {
  Json fails = Json::array();
  for (const auto& f : failures) {
    Json entry{{"trial", f.trial}, {"instance", f.instance}, {"detail", f.detail}};
    if (f.label) entry["label"] = *f.label;
    fails.push_back(std::move(entry));
  }
  return Json{{"property", property_id},
              {"statement", statement},
              {"status", status()},
              {"parameters", params_json(parameters)},
              {"instances_checked", instances_checked},
              {"failure_count", failure_count},
              {"failures", fails},
              {"vacuous", vacuous},
              {"statistics", statistics}};
}

Json VerificationReport::to_json() const {
  return Json{{"report", body()}, {"footer", {{"wall_time_seconds", wall_time_seconds}}}};
}

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> catalog = [] {
    std::vector<PropertyInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

std::vector<std::pair<std::string, Digraph>> theorem4_fixed_instances() {
  return {{"C3", directed_cycle(3)}, {"C6", directed_cycle(6)}};
}

VerificationReport run_verification(std::string_view property_id, const CampaignParams& params) {
  for (const auto& e : entries()) {
    if (e.info.id != property_id) continue;
    auto start = std::chrono::steady_clock::now();
    auto report = e.run(params, e.info.statement);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown property '" + std::string(property_id) + "'");
}

}  // namespace dikernel
