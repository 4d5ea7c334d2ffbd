#pragma once

// Necessary-condition constraint and the constant-factor gap between the
// original optimum and the equal-set BQC optimum under geometric pathloss.
//
// These results are stated for equal channel sets, a common SINR target and
// gains that follow a distance law. Entry points reject other scenarios.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "specalloc/model.hpp"
#include "specalloc/oracle.hpp"

namespace specalloc {

// min(2^alpha + 1, 10): constant of the necessary constraint.
double necessary_constant(double alpha) noexcept;
// min(2^alpha - 1, 10): constant quoted for the approximation factor.
double approximation_constant(double alpha) noexcept;

// Throws std::invalid_argument unless channel sets are identical, targets are
// common and every gain equals max(d, 1)^-alpha for its tx->rx distance
// (relative tolerance 1e-9).
void require_bound_preconditions(const Scenario& scenario, double alpha);

// x_i (1 + sum_{j != i} x_j I+_ji / I_i^max) <= C K_i for every admitted i.
bool necessary_check(const Scenario& scenario, std::span<const std::uint8_t> x, double alpha);

// Largest subset of `members` obtained by repeatedly removing the most
// overloaded user until every remaining i has 1 + sum_{j in L, j != i} a_ij <= scale * K_i.
std::vector<std::size_t> peel_to_constraint(const Scenario& scenario, std::vector<std::size_t> members,
                                            double scale);

struct BoundReport {
  std::size_t sufficient_count = 0;  // |L_s|
  std::size_t necessary_count = 0;   // |L_n|
  double constant_c = 0.0;           // min(2^alpha + 1, 10)
  double approx_constant = 0.0;      // min(2^alpha - 1, 10)
  double opt_exact = 0.0;            // OPT, original problem
  double opt_bqc = 0.0;              // OPT', equal-set BQC problem
  double prop4_lhs = 0.0;            // OPT / approx_constant - 1
  double necessary_lhs = 0.0;        // OPT / constant_c - 1
  bool holds_approx = false;         // prop4_lhs <= OPT'
  bool holds_necessary_constant = false;  // necessary_lhs <= OPT'
  bool holds_set_bound = false;      // |L_n| <= C (|L_s| + 1)
  bool optimum_passes_necessary = false;  // OPT's transmitting set satisfies the necessary constraint
};

BoundReport approx_gap_check(const Scenario& scenario, double alpha,
                             std::uint64_t original_budget = kDefaultOriginalBudget,
                             std::uint64_t bqc_budget = kDefaultBqcBudget);

}  // namespace specalloc
