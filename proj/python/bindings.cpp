// Native entry points for the `specalloc` Python package.
//
// Structured values cross the boundary as JSON text using the same schema
// as the command line tool; the Python wrapper converts them to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specalloc/json_io.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/pipeline.hpp"
#include "specalloc/scengen.hpp"
#include "specalloc/verify.hpp"

namespace py = pybind11;
using namespace specalloc;

namespace {

Scenario parse_scenario(const std::string& text) { return json::parse(text).get<Scenario>(); }

std::string generate_json(const std::string& config_text) {
  GenConfig cfg = config_text.empty() ? GenConfig{} : json::parse(config_text).get<GenConfig>();
  return json(generate(cfg)).dump();
}

std::string build_problem_json(const std::string& scenario_text, const std::string& transform, double density) {
  TransformSpec spec = TransformSpec::parse(transform);
  spec.density = density;
  return json(build_problem(parse_scenario(scenario_text), spec)).dump();
}

std::string admit_json(const std::string& problem_text) {
  const BqcProblem p = json::parse(problem_text).get<BqcProblem>();
  return json(solve(p)).dump();
}

std::string solve_json(const std::string& scenario_text, const std::string& transform, std::uint64_t seed,
                       double density) {
  const Scenario s = parse_scenario(scenario_text);
  PipelineOptions opts;
  opts.transform = TransformSpec::parse(transform);
  opts.transform.density = density;
  opts.seed = seed;
  const PipelineResult res = run_pipeline(s, opts);
  return json{{"admission", res.admission},
              {"allocation", res.selection.allocation},
              {"converged", res.selection.converged},
              {"potential", res.selection.potential},
              {"success", res.success}}
      .dump();
}

std::string evaluate_json(const std::string& scenario_text, const std::vector<Channel>& channels) {
  const Scenario s = parse_scenario(scenario_text);
  const Allocation a(channels);
  validate_allocation(s, a);
  return json(is_successful(s, a)).dump();
}

std::string exact_json(const std::string& scenario_text, std::uint64_t budget) {
  return json(solve_original_exact(parse_scenario(scenario_text), budget)).dump();
}

std::string verify_json(const std::string& scenario_text, std::uint64_t seed) {
  VerifyOptions opts;
  opts.seed = seed;
  const VerifyReport report = verify_scenario(parse_scenario(scenario_text), opts);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return json{{"ok", report.ok()}, {"checks", checks}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Admission control and channel selection under SINR requirements";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  m.def("generate", &generate_json, py::arg("config") = "");
  m.def("build_problem", &build_problem_json, py::arg("scenario"), py::arg("transform") = "unequal",
        py::arg("density") = kDefaultDensity);
  m.def("admit", &admit_json, py::arg("problem"));
  m.def("solve", &solve_json, py::arg("scenario"), py::arg("transform") = "unequal", py::arg("seed") = 1,
        py::arg("density") = kDefaultDensity);
  m.def("evaluate", &evaluate_json, py::arg("scenario"), py::arg("channels"));
  m.def("solve_exact", &exact_json, py::arg("scenario"), py::arg("budget") = kDefaultOriginalBudget);
  m.def("verify", &verify_json, py::arg("scenario"), py::arg("seed") = 1);
}
