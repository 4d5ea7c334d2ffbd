#pragma once

// Seeded Monte Carlo experiment driver producing plot-ready CSV tables.
//
// Studies:
//   equal_sets  identical channel sets (K = equal_channels), both transforms
//   maxsat      random channel sets, unit revenues, unequal-set transform
//   maxrev      random channel sets, target-proportional revenues
//   neighbor    neighbor-limited admission relative to full knowledge
//
// Per-run tables contain only seed-determined quantities, so identical
// configurations reproduce them byte for byte. Wall-clock times go to
// timing.csv.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specalloc/scengen.hpp"

namespace specalloc {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::vector<std::size_t> n_values{2, 6, 12, 18};
  std::vector<std::string> studies{"equal_sets", "maxsat", "maxrev", "neighbor"};
  std::vector<double> neighbor_counts{1.0, 2.0, 4.0};
  std::size_t oracle_max_n = 12;
  std::uint64_t oracle_budget = 100'000'000;
  std::uint64_t bqc_budget = std::uint64_t{1} << 24;
  int equal_channels = 5;
  GenConfig generator;  // user_count, seed, modes are set per study

  static ExperimentConfig from_json(const nlohmann::json& j);
  void validate() const;
};

struct RunRow {
  std::string study;
  std::string transform;
  std::string objective;  // maxsat | maxrev
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::optional<double> exact_original;
  std::optional<double> exact_bqc;
  double heuristic = 0.0;
  double upper_bound = 0.0;
  std::size_t admitted = 0;
  std::size_t satisfied = 0;
  double revenue_realized = 0.0;
  bool successful = false;
  bool converged = false;
  double t_transform = 0.0;
  double t_admission = 0.0;
  double t_selection = 0.0;
  std::optional<double> t_exact_original;
  std::optional<double> t_exact_bqc;

  // heuristic <= exact_bqc <= upper_bound and satisfied <= admitted.
  bool invariants_hold() const;
};

struct NeighborRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double neighbors = 0.0;
  std::size_t baseline_admitted = 0;
  std::size_t baseline_satisfied = 0;
  std::size_t limited_admitted = 0;
  std::size_t limited_satisfied = 0;
};

struct AggregateRow {
  std::string study;
  std::string transform;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::string metric;
  std::size_t count = 0;  // rows contributing (oracle metrics may be partial)
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct ExperimentReport {
  std::vector<RunRow> runs;
  std::vector<NeighborRow> neighbor_runs;
  std::vector<AggregateRow> aggregates;
  std::size_t invariant_violations = 0;
};

// Seed of trial `trial` at size n within `study`.
std::uint64_t trial_seed(std::uint64_t base, const std::string& study, std::size_t n, std::size_t trial);

ExperimentReport run_experiment(const ExperimentConfig& config);

// Writes runs_<study>.csv, runs_neighbor.csv, aggregate.csv,
// neighbor_aggregate.csv and timing.csv. Returns the written paths.
std::vector<std::filesystem::path> write_reports(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace specalloc
