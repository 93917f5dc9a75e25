#pragma once

#include "json.hpp"

#include "dikernel/cycles.hpp"
#include "dikernel/digraph.hpp"
#include "dikernel/kernels.hpp"
#include "dikernel/substitution.hpp"

namespace dikernel {

using Json = nlohmann::json;

Json to_json(Distance d);
Json to_json(const Chord& c);
Json to_json(const HypothesisReport& r);
Json to_json(const KernelResult& r);
Json to_json(const PerfectionResult& r);
Json to_json(const RoadCheck& c);
Json to_json(const Road& r);
Json to_json(const PreKernelReport& r);
Json to_json(const UniqueChordReport& r);
Json to_json(const AdditiveInverseReport& r);

/// x0, kernel, p, rounds[{k, N_3k, N_3k+1, N_3k+2, M_3k}],
/// intermediates[{k, N'_3k+1, N'_3k+2}].
Json trace_to_json(const SubstitutionTrace& t);

/// Outcome plus, when `with_roads`, one road per member of every N_s and the
/// per-lemma check results.
Json outcome_to_json(const MethodOutcome& outcome, bool with_roads);

}  // namespace dikernel
