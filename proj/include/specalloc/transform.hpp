#pragma once

// Binary quadratic constraint (BQC) form of the admission problem:
//
//   max sum_i r_i x_i
//   s.t. x_i (1 + sum_{j != i} a_ij x_j) <= K_i,   x in {0,1}^N
//
// where row i of the coefficient matrix measures how much each other user
// contributes to blocking user i's channels.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specalloc/matrix.hpp"
#include "specalloc/model.hpp"

namespace specalloc {

inline constexpr double kDefaultDensity = 1.0 / 800.0;  // users per square meter

// Relative slack allowed on constraint evaluation to absorb summation-order
// rounding. Shared by the heuristic, the oracle and the feasibility check.
inline constexpr double kFeasibilityTolerance = 1e-9;

struct BqcProblem {
  SquareMatrix coeff;              // coeff(i, j) = a_ij, diagonal zero
  std::vector<int> capacity;       // K_i
  std::vector<double> revenue;     // r_i
  std::vector<std::uint8_t> forced_zero;  // users whose target is unreachable alone

  std::size_t size() const noexcept { return capacity.size(); }

  // 1 + sum_{j != i} a_ij x_j (the bracket of constraint i).
  double load(std::size_t i, std::span<const std::uint8_t> x) const noexcept;

  // Throws std::invalid_argument on inconsistent sizes or negative entries.
  void validate() const;
};

BqcProblem build_equal(const Scenario& scenario);
BqcProblem build_unequal(const Scenario& scenario);

// Radius within which `neighbor_count` users are expected at `density`.
double neighbor_radius(double neighbor_count, double density);

// As build_unequal, but a_ij is zeroed whenever transmitter j lies farther
// than neighbor_radius(neighbor_count, density) from receiver i.
BqcProblem build_neighbor_limited(const Scenario& scenario, double neighbor_count,
                                  double density = kDefaultDensity);

bool check_bqc_feasible(const BqcProblem& problem, std::span<const std::uint8_t> x);

double objective_value(const BqcProblem& problem, std::span<const std::uint8_t> x);

enum class TransformKind { equal, unequal, neighbor };

struct TransformSpec {
  TransformKind kind = TransformKind::unequal;
  double neighbor_count = 0.0;
  double density = kDefaultDensity;

  // Parses "equal", "unequal" or "neighbor:<x>".
  static TransformSpec parse(const std::string& text);
  std::string to_string() const;
};

BqcProblem build_problem(const Scenario& scenario, const TransformSpec& spec);

}  // namespace specalloc
