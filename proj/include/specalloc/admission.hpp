#pragma once

// Lagrange-relaxation admission heuristic for BqcProblem.
//
// The iteration runs on capacity-normalized rows (row i divided by K_i so
// every right-hand side is 1). It repeatedly picks the most violated row,
// drops the admitted user contributing most to that row per unit revenue,
// and charges the dropped user's multiplier with that contribution. Once
// every row fits, dropped users are offered back greedily by revenue.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "specalloc/model.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

struct AdmissionResult {
  BinaryVector x;
  std::vector<double> lambda;  // multipliers on the normalized rows
  double objective = 0.0;      // sum r_i x_i
  double upper_bound = 0.0;
  std::vector<double> slack;   // K_i - x_i (1 + sum a_ij x_j), un-normalized
  std::size_t iterations = 0;  // drop iterations
  std::vector<std::size_t> reinserted;
};

// One trace event: either a drop iteration or a reinsertion attempt.
struct AdmissionEvent {
  enum class Kind { drop, reinsert } kind = Kind::drop;
  std::size_t iteration = 0;
  std::size_t most_violated = 0;  // i*, drop events only
  std::size_t user = 0;           // j* for drops, candidate for reinsertion
  double lambda_increment = 0.0;
  bool accepted = false;          // reinsertion outcome
  std::vector<double> y;          // normalized loads after the event (drops only)
};

using AdmissionObserver = std::function<void(const AdmissionEvent&)>;

AdmissionResult solve(const BqcProblem& problem, const AdmissionObserver& observer = {});

// Multipliers expressed on the un-normalized constraints: lambda_i * K_i.
std::vector<double> unnormalized_multipliers(const BqcProblem& problem, std::span<const double> lambda);

// z(x) + sum_i mu_i (K_i - x_i (1 + sum_{j != i} a_ij x_j)) for un-normalized multipliers mu.
double relaxation_value(const BqcProblem& problem, std::span<const std::uint8_t> x,
                        std::span<const double> multipliers);

// Relaxation value at the heuristic's solution using its rescaled multipliers.
double upper_bound(const BqcProblem& problem, const AdmissionResult& result);

// Closed-form maximizer of the relaxed objective in coordinate i for fixed
// multipliers and fixed other coordinates: keep i iff r_i - mu_i (1 + sum a_ij x_j) > 0.
bool relaxed_keeps(const BqcProblem& problem, std::span<const std::uint8_t> x,
                   std::span<const double> multipliers, std::size_t i);

}  // namespace specalloc
