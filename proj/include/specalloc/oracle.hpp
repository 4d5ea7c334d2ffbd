#pragma once

// Exhaustive exact solvers used as ground truth at desk scale.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "specalloc/model.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

inline constexpr std::uint64_t kDefaultOriginalBudget = 100'000'000;  // 1e8 candidates
inline constexpr std::uint64_t kDefaultBqcBudget = std::uint64_t{1} << 24;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

struct ExactAllocation {
  double objective = 0.0;
  Allocation best;
  std::uint64_t explored = 0;  // search nodes visited
};

struct ExactSelection {
  double objective = 0.0;
  BinaryVector best;
  std::uint64_t explored = 0;
};

// prod_i (K_i + 1), saturating at UINT64_MAX.
std::uint64_t original_candidate_count(const Scenario& scenario) noexcept;

// 2^(number of users not forced to zero), saturating.
std::uint64_t bqc_candidate_count(const BqcProblem& problem) noexcept;

// Maximum revenue over all successful allocations, each user silent or on one
// of its channels. Ties resolve to the lexicographically smallest channel
// vector (silent = 0).
ExactAllocation solve_original_exact(const Scenario& scenario,
                                     std::uint64_t budget = kDefaultOriginalBudget);

// Maximum of sum r_i x_i over BQC-feasible x; ties resolve to the
// lexicographically smallest x.
ExactSelection solve_bqc_exact(const BqcProblem& problem, std::uint64_t budget = kDefaultBqcBudget);

// Searches for a channel per admitted user such that every admitted user is
// satisfied. Returns nullopt if none exists.
std::optional<Allocation> find_successful_assignment(const Scenario& scenario,
                                                     std::span<const std::uint8_t> admitted,
                                                     std::uint64_t budget = kDefaultOriginalBudget);

}  // namespace specalloc
