#pragma once

// transform -> admission -> channel selection -> success evaluation.

#include <cstdint>

#include "specalloc/admission.hpp"
#include "specalloc/channel_select.hpp"
#include "specalloc/model.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

struct PipelineOptions {
  TransformSpec transform;
  std::uint64_t seed = 1;      // channel initialization
  std::size_t max_rounds = 0;  // 0 selects default_max_rounds
  AdmissionObserver on_admission;
  MoveObserver on_move;
};

struct StageTimes {
  double transform_s = 0.0;
  double admission_s = 0.0;
  double selection_s = 0.0;
};

struct PipelineResult {
  BqcProblem problem;
  AdmissionResult admission;
  SelectionState selection;
  SuccessReport success;
  StageTimes times;
};

PipelineResult run_pipeline(const Scenario& scenario, const PipelineOptions& options = {});

}  // namespace specalloc
