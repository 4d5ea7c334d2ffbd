#include "specalloc/pipeline.hpp"

#include <chrono>

namespace specalloc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

PipelineResult run_pipeline(const Scenario& scenario, const PipelineOptions& options) {
  PipelineResult out;
  auto t0 = Clock::now();
  out.problem = build_problem(scenario, options.transform);
  out.times.transform_s = seconds_since(t0);

  t0 = Clock::now();
  out.admission = solve(out.problem, options.on_admission);
  out.times.admission_s = seconds_since(t0);

  t0 = Clock::now();
  out.selection = init_random(scenario, out.admission.x, options.seed);
  const std::size_t rounds = options.max_rounds ? options.max_rounds : default_max_rounds(scenario);
  run(scenario, out.selection, rounds, options.on_move);
  out.times.selection_s = seconds_since(t0);

  out.success = is_successful(scenario, out.selection.allocation);
  return out;
}

}  // namespace specalloc
