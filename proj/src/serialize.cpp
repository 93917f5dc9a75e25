#include "dikernel/serialize.hpp"

#include "dikernel/error.hpp"

namespace dikernel {

Json to_json(Distance d) {
  if (!d.is_reachable()) return "unreachable";
  return d.value();
}

Json to_json(const Chord& c) {
  return Json{{"tail_pos", c.tail_pos}, {"head_pos", c.head_pos}, {"length", c.length},
              {"tail", c.tail},         {"head", c.head}};
}

Json to_json(const HypothesisReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json chords = Json::array();
    for (const auto& c : v.chords) chords.push_back(to_json(c));
    violations.push_back({{"walk", v.walk}, {"reason", v.reason}, {"short_chords", chords}});
  }
  return Json{{"satisfied", r.satisfied}, {"examined", r.examined}, {"violations", violations}};
}

Json to_json(const KernelResult& r) {
  return Json{{"found", r.found},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
              {"subsets_examined", r.subsets_examined}};
}

Json to_json(const PerfectionResult& r) {
  return Json{{"perfect", r.perfect},
              {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}};
}

Json to_json(const RoadCheck& c) {
  return Json{{"is_path", c.is_path},
              {"start_in_n_s", c.start_in_n_s},
              {"biconditional", c.biconditional},
              {"multiples_in_n", c.multiples_in_n},
              {"skip_arcs_labelled", c.skip_arcs_labelled},
              {"ok", c.ok()},
              {"problems", c.problems}};
}

Json to_json(const Road& r) {
  Json labels = Json::array();
  for (const auto& l : r.labels) labels.push_back(l.to_string());
  return Json{{"s", r.s()}, {"path", r.path}, {"labels", labels}};
}

namespace {

Json to_json(const InternalPath& p) {
  return Json{{"from", p.from}, {"to", p.to}, {"path", p.path}};
}

}  // namespace

Json to_json(const PreKernelReport& r) {
  Json shorts = Json::array(), bad = Json::array();
  for (const auto& p : r.short_paths) shorts.push_back(to_json(p));
  for (const auto& p : r.violations) bad.push_back(to_json(p));
  return Json{{"pre_kernel", r.pre_kernel},     {"two_absorbent", r.two_absorbent},
              {"unabsorbed", r.unabsorbed},     {"short_paths", shorts},
              {"violations", bad},              {"ok", r.ok()}};
}

Json to_json(const UniqueChordReport& r) {
  return Json{{"skip_positions", r.skip_positions},
              {"applicable", r.applicable},
              {"unique", r.unique},
              {"label_violations", r.label_violations},
              {"ok", r.ok()}};
}

Json to_json(const AdditiveInverseReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"position", c.position},
                      {"vertex", c.vertex},
                      {"distance", to_json(c.distance)},
                      {"ok", c.ok}});
  }
  return Json{{"checks", checks}, {"ok", r.ok()}};
}

Json trace_to_json(const SubstitutionTrace& t) {
  Json rounds = Json::array();
  for (std::size_t k = 0; k < t.rounds.size(); ++k) {
    const auto& r = t.rounds[k];
    rounds.push_back({{"k", k},
                      {"N_3k", r.added},
                      {"N_3k+1", r.removed_near},
                      {"N_3k+2", r.removed_far},
                      {"M_3k", r.candidates}});
  }
  Json inter = Json::array();
  for (std::size_t k = 0; k < t.intermediates.size(); ++k) {
    inter.push_back({{"k", k},
                     {"N'_3k+1", t.intermediates[k].near},
                     {"N'_3k+2", t.intermediates[k].far}});
  }
  return Json{{"x0", t.x0}, {"kernel", t.kernel}, {"p", t.p}, {"rounds", rounds},
              {"intermediates", inter}};
}

Json outcome_to_json(const MethodOutcome& outcome, bool with_roads) {
  Json doc{{"pre_3_kernel", outcome.pre_3_kernel},
           {"is_3_kernel", outcome.is_3_kernel},
           {"two_absorbent", outcome.two_absorbent},
           {"failure_witness",
            outcome.failure_witness ? Json(*outcome.failure_witness) : Json(nullptr)},
           {"trace", trace_to_json(outcome.trace)}};
  if (!with_roads) return doc;

  const auto& trace = outcome.trace;
  doc["trace_invariants"] = check_trace_invariants(trace).problems;
  doc["pre_kernel_properties"] = to_json(check_pre_kernel_properties(trace));
  Json roads = Json::array();
  for (std::size_t s = 0; s <= 3 * trace.p; ++s) {
    for (Vertex v : trace.n(s)) {
      Json entry{{"vertex", v}, {"s", s}};
      if (auto road = try_find_road(trace, v, s)) {
        entry["road"] = to_json(*road);
        entry["validation"] = to_json(validate_road(trace, road->path));
        entry["unique_short_chord"] = to_json(check_unique_short_chord(trace, *road));
        entry["additive_inverse"] = to_json(check_additive_inverse_property(trace, *road));
      } else {
        entry["road"] = nullptr;
      }
      roads.push_back(std::move(entry));
    }
  }
  doc["roads"] = roads;
  return doc;
}

}  // namespace dikernel
