#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dikernel/cycles.hpp"
#include "dikernel/error.hpp"
#include "dikernel/generators.hpp"
#include "dikernel/harness.hpp"
#include "dikernel/kernels.hpp"
#include "dikernel/serialize.hpp"
#include "dikernel/substitution.hpp"
#include "dikernel/text_format.hpp"

namespace py = pybind11;
using namespace dikernel;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

CycleCondition condition_from(const std::string& name) {
  if (name == "two-consecutive") return CycleCondition::TwoConsecutive;
  if (name == "three-with-crossing") return CycleCondition::ThreeWithCrossing;
  throw Error(ErrorKind::InvalidArgument, "unknown condition: " + name);
}

HypothesisOptions hypothesis_options(std::uint64_t budget) {
  HypothesisOptions opts;
  opts.enumeration.budget = budget;
  return opts;
}

std::vector<std::vector<Vertex>> walks(const auto& items) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : items) out.push_back(c.vertices);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static PyObject* error_type = py::exception<Error>(m, "Error", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      inst.attr("line") = e.line() ? py::cast(*e.line()) : py::none();
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&Digraph::build), py::arg("n"), py::arg("arcs") = std::vector<Arc>{})
      .def_property_readonly("n", &Digraph::vertex_count)
      .def_property_readonly("arcs", &Digraph::arcs)
      .def("arc_count", &Digraph::arc_count)
      .def("has_arc", &Digraph::has_arc)
      .def("out_neighbors",
           [](const Digraph& d, Vertex v) {
             validate_vertex_set(d.vertex_count(), {v});
             auto s = d.out_neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("in_neighbors",
           [](const Digraph& d, Vertex v) {
             validate_vertex_set(d.vertex_count(), {v});
             auto s = d.in_neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& d) {
        return "Digraph(n=" + std::to_string(d.vertex_count()) + ", arcs=" +
               std::to_string(d.arc_count()) + ")";
      });

  m.def("parse", [](const std::string& text) { return parse_digraph_text(text); }, py::arg("text"));
  m.def("parse_document", [](const std::string& text) {
    auto doc = parse_digraph_document(text);
    return py::make_tuple(doc.name, doc.digraph);
  });
  m.def("format", &format_digraph, py::arg("d"), py::arg("name") = std::nullopt);

  m.def("directed_cycle", &directed_cycle, py::arg("n"));
  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_strongly_connected", &random_strongly_connected, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("is_strongly_connected", &is_strongly_connected);

  m.def("distance_matrix", [](const Digraph& d) {
    auto dist = distance_matrix(d);
    std::vector<std::vector<std::optional<std::uint32_t>>> rows(d.vertex_count());
    for (Vertex u = 0; u < d.vertex_count(); ++u) {
      for (auto x : dist.row(u)) {
        rows[u].push_back(x.is_reachable() ? std::optional(x.value()) : std::nullopt);
      }
    }
    return rows;
  });
  m.def("closure", &k_closure, py::arg("d"), py::arg("k"));

  m.def("is_kernel",
        [](const Digraph& d, VertexSet s, std::uint32_t k, std::optional<std::uint32_t> l) {
          s = normalize_vertex_set(std::move(s));
          validate_vertex_set(d.vertex_count(), s);
          return is_kl_kernel(d, s, {k, l.value_or(k - 1)});
        },
        py::arg("d"), py::arg("s"), py::arg("k") = 3, py::arg("l") = std::nullopt);
  m.def("find_kernel",
        [](const Digraph& d, std::uint32_t k, std::optional<std::uint32_t> l, bool via_closure) {
          auto r = via_closure ? find_kernel_via_closure(d, k) : find_kl_kernel(d, {k, l.value_or(k - 1)});
          return r.witness;
        },
        py::arg("d"), py::arg("k") = 3, py::arg("l") = std::nullopt, py::arg("via_closure") = false,
        "Least (k, l)-kernel, or None.");
  m.def("is_3_kernel_perfect", [](const Digraph& d) { return to_python(to_json(is_3_kernel_perfect(d))); });
  m.def("is_kernel_perfect", [](const Digraph& d) { return to_python(to_json(is_kernel_perfect(d))); });

  m.def("cycles",
        [](const Digraph& d, std::size_t min_len, std::uint64_t budget) {
          EnumerationOptions opts;
          opts.min_len = min_len;
          opts.budget = budget;
          return walks(enumerate_cycles(d, opts));
        },
        py::arg("d"), py::arg("min_len") = 2, py::arg("budget") = 1'000'000);
  m.def("circuits",
        [](const Digraph& d, std::size_t max_len, std::size_t min_len, std::uint64_t budget) {
          EnumerationOptions opts;
          opts.min_len = min_len;
          opts.max_len = max_len;
          opts.budget = budget;
          return walks(enumerate_circuits(d, opts));
        },
        py::arg("d"), py::arg("max_len"), py::arg("min_len") = 2, py::arg("budget") = 1'000'000);
  m.def("check_cycle_hypothesis",
        [](const Digraph& d, const std::string& condition, std::size_t min_cycle_len, std::uint64_t budget) {
          return to_python(to_json(
              check_cycle_hypothesis(d, condition_from(condition), min_cycle_len, hypothesis_options(budget))));
        },
        py::arg("d"), py::arg("condition"), py::arg("min_cycle_len") = 2, py::arg("budget") = 1'000'000);
  m.def("check_circuit_hypothesis",
        [](const Digraph& d, std::optional<std::size_t> max_len, std::uint64_t budget) {
          return to_python(to_json(
              check_circuit_hypothesis(d, max_len.value_or(d.arc_count()), 2, hypothesis_options(budget))));
        },
        py::arg("d"), py::arg("max_len") = std::nullopt, py::arg("budget") = 1'000'000);
  m.def("every_cycle_has_symmetric_arc",
        [](const Digraph& d) { return to_python(to_json(every_cycle_has_symmetric_arc(d))); });

  m.def("substitute",
        [](const Digraph& d, Vertex x0, bool roads) {
          return to_python(outcome_to_json(run_substitution_method(d, x0), roads));
        },
        py::arg("d"), py::arg("x0"), py::arg("roads") = false);

  m.def("properties", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& info : property_catalog()) out.emplace_back(info.id, info.statement);
    return out;
  });
  m.def("verify",
        [](const std::string& property, std::size_t n, std::uint64_t trials, std::uint64_t seed,
           bool exhaustive, std::optional<double> p, std::optional<std::size_t> min_cycle_len,
           std::size_t max_failures, std::uint64_t budget) {
          CampaignParams params;
          params.n = n;
          params.trials = trials;
          params.seed = seed;
          params.exhaustive = exhaustive;
          params.arc_prob = p;
          params.min_cycle_len = min_cycle_len;
          params.max_failures = max_failures;
          params.budget = budget;
          VerificationReport report;
          {
            py::gil_scoped_release release;
            report = run_verification(property, params);
          }
          return to_python(report.to_json());
        },
        py::arg("property"), py::arg("n") = 6, py::arg("trials") = 200, py::arg("seed") = 1,
        py::arg("exhaustive") = false, py::arg("p") = std::nullopt, py::arg("min_cycle_len") = std::nullopt,
        py::arg("max_failures") = 10, py::arg("budget") = 1'000'000);
}
