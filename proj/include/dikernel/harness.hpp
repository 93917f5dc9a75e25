#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dikernel/serialize.hpp"

namespace dikernel {

struct CampaignParams {
  /// Largest instance size. Sampled campaigns draw n uniformly from [2, n],
  /// except closure-lemma and closure-distance which use n as given.
  std::size_t n = 6;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  /// Enumerate every labeled digraph on 1..n vertices instead (n <= 4).
  bool exhaustive = false;
  /// Fixed arc probability; otherwise drawn per trial from a fixed palette.
  std::optional<double> arc_prob;
  /// Restrict cycle-condition campaigns to one digon convention.
  std::optional<std::size_t> min_cycle_len;
  std::size_t max_failures = 10;
  /// Enumeration cap handed to cycle/circuit searches.
  std::uint64_t budget = 1'000'000;
};

struct Failure {
  std::uint64_t trial = 0;
  /// Set for fixed instances, which have no trial index of their own.
  std::optional<std::string> label;
  /// Canonical text of the offending digraph.
  std::string instance;
  Json detail;
};

struct VerificationReport {
  std::string property_id;
  std::string statement;
  CampaignParams parameters;
  std::uint64_t instances_checked = 0;
  std::uint64_t failure_count = 0;
  /// The first `max_failures` failures in trial order.
  std::vector<Failure> failures;
  /// No instance satisfied the hypothesis being tested.
  bool vacuous = false;
  Json statistics = Json::object();
  double wall_time_seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
  /// "fail", "vacuous" or "pass".
  std::string status() const;
  /// Deterministic part of the report.
  Json body() const;
  /// body plus a "footer" holding wall time.
  Json to_json() const;
};

struct PropertyInfo {
  std::string id;
  std::string statement;
};

const std::vector<PropertyInfo>& property_catalog();

/// Throws InvalidArgument for an unknown id; SizeBound for oversize params.
VerificationReport run_verification(std::string_view property_id, const CampaignParams& params);

/// Instances the theorem4 campaign always includes ahead of sampled ones.
std::vector<std::pair<std::string, Digraph>> theorem4_fixed_instances();

}  // namespace dikernel
