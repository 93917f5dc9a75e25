#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dikernel/cycles.hpp"
#include "dikernel/error.hpp"
#include "dikernel/generators.hpp"
#include "dikernel/harness.hpp"
#include "dikernel/kernels.hpp"
#include "dikernel/serialize.hpp"
#include "dikernel/substitution.hpp"
#include "dikernel/text_format.hpp"

namespace {

using namespace dikernel;

enum Exit { kPass = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct Globals {
  std::string format = "text";
  std::string out;
  std::size_t max_failures = 10;
  std::uint64_t budget = 1'000'000;

  bool json() const { return format == "json"; }
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
  }
}

std::string set_text(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::string walk_text(const std::vector<Vertex>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

HypothesisOptions hypothesis_options(const Globals& g) {
  HypothesisOptions opts;
  opts.enumeration.budget = g.budget;
  opts.max_violations = g.max_failures;
  return opts;
}

std::string summary_line(const std::string& name, const HypothesisReport& r) {
  std::string line = name + ": " + (r.satisfied ? "satisfied" : "violated");
  if (!r.violations.empty()) {
    line += " witness " + walk_text(r.violations.front().walk) + " " + r.violations.front().reason;
  }
  return line + "\n";
}

struct AnalyzeArgs {
  std::string file;
  std::size_t min_cycle_len = 2;
  std::optional<std::size_t> max_circuit_len;
};

int cmd_analyze(const Globals& g, const AnalyzeArgs& a) {
  auto doc = read_digraph_file(a.file);
  const auto& d = doc.digraph;
  auto opts = hypothesis_options(g);
  EnumerationOptions cycles;
  cycles.min_len = a.min_cycle_len;
  cycles.budget = g.budget;
  std::uint64_t cycle_count = 0;
  for_each_cycle(d, cycles, [&](const Cycle&) {
    ++cycle_count;
    return true;
  });
  std::size_t circuit_len = a.max_circuit_len.value_or(d.arc_count());
  auto duchet = every_cycle_has_symmetric_arc(d, opts);
  auto consecutive = check_cycle_hypothesis(d, CycleCondition::TwoConsecutive, a.min_cycle_len, opts);
  auto crossing =
      check_cycle_hypothesis(d, CycleCondition::ThreeWithCrossing, a.min_cycle_len, opts);
  auto circuit = check_circuit_hypothesis(d, circuit_len, 2, opts);

  if (g.json()) {
    Json out{{"name", doc.name ? Json(*doc.name) : Json(nullptr)},
             {"n", d.vertex_count()},
             {"m", d.arc_count()},
             {"strongly_connected", is_strongly_connected(d)},
             {"cycles", cycle_count},
             {"min_cycle_len", a.min_cycle_len},
             {"max_circuit_len", circuit_len},
             {"duchet", to_json(duchet)},
             {"two_consecutive", to_json(consecutive)},
             {"three_with_crossing", to_json(crossing)},
             {"circuit_hypothesis", to_json(circuit)}};
    emit(g, out.dump(2) + "\n");
    return kPass;
  }
  std::ostringstream os;
  if (doc.name) os << "name: " << *doc.name << "\n";
  os << "n: " << d.vertex_count() << "\nm: " << d.arc_count() << "\nstrongly_connected: "
     << (is_strongly_connected(d) ? "true" : "false") << "\ncycles: " << cycle_count << "\n";
  os << summary_line("duchet", duchet) << summary_line("two_consecutive", consecutive)
     << summary_line("three_with_crossing", crossing)
     << summary_line("circuit_hypothesis", circuit);
  emit(g, os.str());
  return kPass;
}

struct KernelArgs {
  std::string file;
  std::uint32_t k = 2;
  std::optional<std::uint32_t> l;
  bool via_closure = false;
  std::string emit_closure;
};

int cmd_kernel(const Globals& g, const KernelArgs& a) {
  auto d = read_digraph_file(a.file).digraph;
  std::uint32_t l = a.l.value_or(a.k - 1);
  KernelResult r;
  if (a.via_closure) {
    if (l != a.k - 1) throw Error(ErrorKind::InvalidArgument, "--via-closure needs l = k - 1");
    r = find_kernel_via_closure(d, a.k);
    if (!a.emit_closure.empty()) {
      write_text_file(a.emit_closure, format_digraph(k_closure(d, a.k - 1)));
    }
  } else {
    r = find_kl_kernel(d, {a.k, l});
  }
  if (g.json()) {
    Json out = to_json(r);
    out["k"] = a.k;
    out["l"] = l;
    out["via_closure"] = a.via_closure;
    emit(g, out.dump(2) + "\n");
  } else {
    emit(g, r.found ? "kernel: " + set_text(*r.witness) + "\n" : "kernel: none\n");
  }
  return kPass;
}

int cmd_closure(const Globals& g, const std::string& file, std::uint32_t k) {
  auto doc = read_digraph_file(file);
  auto c = k_closure(doc.digraph, k);
  if (g.json()) {
    emit(g, Json{{"k", k}, {"n", c.vertex_count()}, {"arcs", c.arcs()}}.dump(2) + "\n");
  } else {
    emit(g, format_digraph(c));
  }
  return kPass;
}

int cmd_substitute(const Globals& g, const std::string& file, Vertex x0, const std::string& trace) {
  auto d = read_digraph_file(file).digraph;
  auto outcome = run_substitution_method(d, x0);
  if (!trace.empty()) write_text_file(trace, outcome_to_json(outcome, true).dump(2) + "\n");
  if (g.json()) {
    emit(g, outcome_to_json(outcome, false).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "pre_3_kernel: " << set_text(outcome.pre_3_kernel) << "\n"
       << "is_3_kernel: " << (outcome.is_3_kernel ? "true" : "false") << "\n"
       << "p: " << outcome.trace.p << "\n";
    if (outcome.failure_witness) os << "witness: " << walk_text(*outcome.failure_witness) << "\n";
    emit(g, os.str());
  }
  return kPass;
}

int cmd_verify(const Globals& g, const std::string& property, CampaignParams params) {
  params.max_failures = g.max_failures;
  params.budget = g.budget;
  auto report = run_verification(property, params);
  if (g.json()) {
    emit(g, report.to_json().dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "property: " << report.property_id << "\n"
       << "status: " << report.status() << "\n"
       << "instances_checked: " << report.instances_checked << "\n"
       << "failures: " << report.failure_count << "\n"
       << "statistics: " << report.statistics.dump() << "\n";
    for (const auto& f : report.failures) {
      os << "failure trial " << f.trial << (f.label ? " (" + *f.label + ")" : "") << ": "
         << f.detail.dump() << "\n";
    }
    os << "wall_time_seconds: " << report.wall_time_seconds << "\n";
    emit(g, os.str());
  }
  return report.passed() ? kPass : kFailure;
}

struct GenerateArgs {
  std::string kind = "random";
  std::size_t n = 6;
  double p = 0.2;
  std::uint64_t seed = 1;
};

int cmd_generate(const Globals& g, const GenerateArgs& a) {
  if (a.kind == "exhaustive") {
    if (g.out.empty()) throw Error(ErrorKind::InvalidArgument, "--kind exhaustive needs --out DIR");
    std::filesystem::create_directories(g.out);
    std::uint64_t code = 0;
    for_each_labeled_digraph(a.n, [&](const Digraph& d) {
      std::string name = "labeled-" + std::to_string(a.n) + "-" + std::to_string(code++);
      write_text_file((std::filesystem::path(g.out) / (name + ".txt")).string(),
                      format_digraph(d, name));
      return true;
    });
    return kPass;
  }
  Digraph d;
  std::string name;
  if (a.kind == "cycle") {
    d = directed_cycle(a.n);
    name = "C" + std::to_string(a.n);
  } else if (a.kind == "random") {
    d = random_digraph(a.n, a.p, a.seed);
  } else if (a.kind == "random-sc") {
    d = random_strongly_connected(a.n, a.p, a.seed);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown kind '" + a.kind + "'");
  }
  emit(g, format_digraph(d, name.empty() ? std::nullopt : std::optional<std::string>(name)));
  return kPass;
}

int exit_code(const Error& e) {
  if (e.is_resource_bound()) return kResource;
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph kernel workbench"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output here instead of stdout");
  app.add_option("--max-failures", g.max_failures)->capture_default_str();
  app.add_option("--budget", g.budget, "cycle/circuit enumeration cap")->capture_default_str();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "structure and hypothesis summaries");
  analyze_cmd->add_option("file", analyze.file)->required();
  analyze_cmd->add_option("--min-cycle-len", analyze.min_cycle_len)->capture_default_str();
  analyze_cmd->add_option("--max-circuit-len", analyze.max_circuit_len, "default |A|");

  KernelArgs kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "least (k,l)-kernel");
  kernel_cmd->add_option("file", kernel.file)->required();
  kernel_cmd->add_option("--k", kernel.k)->capture_default_str();
  kernel_cmd->add_option("--l", kernel.l, "default k - 1");
  kernel_cmd->add_flag("--via-closure", kernel.via_closure, "kernel of C^(k-1)");
  kernel_cmd->add_option("--emit-closure", kernel.emit_closure, "write C^(k-1) here");

  std::string closure_file;
  std::uint32_t closure_k = 2;
  auto* closure_cmd = app.add_subcommand("closure", "k-closure digraph");
  closure_cmd->add_option("file", closure_file)->required();
  closure_cmd->add_option("--k", closure_k)->capture_default_str();

  std::string sub_file, sub_trace;
  Vertex sub_x0 = 0;
  auto* sub_cmd = app.add_subcommand("substitute", "3-substitution method from x0");
  sub_cmd->add_option("file", sub_file)->required();
  sub_cmd->add_option("--x0", sub_x0)->capture_default_str();
  sub_cmd->add_option("--trace", sub_trace, "write the full trace document here");

  std::string property;
  CampaignParams params;
  std::optional<double> verify_p;
  std::optional<std::size_t> verify_min_len;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  std::vector<std::string> ids;
  for (const auto& info : property_catalog()) ids.push_back(info.id);
  verify_cmd->add_option("property", property)->required()->check(CLI::IsMember(ids));
  verify_cmd->add_option("--n", params.n)->capture_default_str();
  verify_cmd->add_option("--trials", params.trials)->capture_default_str();
  verify_cmd->add_option("--seed", params.seed)->capture_default_str();
  verify_cmd->add_flag("--exhaustive", params.exhaustive);
  verify_cmd->add_option("--p", verify_p, "fixed arc probability");
  verify_cmd->add_option("--min-cycle-len", verify_min_len, "single digon convention");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "write digraph documents");
  gen_cmd->add_option("--kind", gen.kind)
      ->check(CLI::IsMember({"cycle", "random", "random-sc", "exhaustive"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--p", gen.p)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out", g.out, "file, or directory for --kind exhaustive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(g, analyze);
    if (*kernel_cmd) return cmd_kernel(g, kernel);
    if (*closure_cmd) return cmd_closure(g, closure_file, closure_k);
    if (*sub_cmd) return cmd_substitute(g, sub_file, sub_x0, sub_trace);
    if (*verify_cmd) {
      params.arc_prob = verify_p;
      params.min_cycle_len = verify_min_len;
      return cmd_verify(g, property, params);
    }
    if (*gen_cmd) return cmd_generate(g, gen);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.line()) std::cerr << " (line " << *e.line() << ")";
    std::cerr << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
