#pragma once

// Best-response channel selection for admitted users.
//
// Each admitted user in turn moves to the channel in its set with the least
// accumulated interference. With reciprocal gains this is a potential game:
// every improving move lowers P(A) = sum_i P_i * omega_i by 2 P_i (omega_old -
// omega_new), so sweeping terminates.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "specalloc/model.hpp"

namespace specalloc {

struct SelectionState {
  Allocation allocation;
  BinaryVector admitted;
  double potential = 0.0;
  std::size_t round = 0;  // completed sweeps
  std::size_t moves = 0;
  bool converged = false;
};

struct MoveEvent {
  std::size_t round = 0;
  std::size_t user = 0;
  Channel from = kSilent;
  Channel to = kSilent;
  double omega_before = 0.0;
  double omega_after = 0.0;
  double potential = 0.0;  // after the move
};

using MoveObserver = std::function<void(const MoveEvent&)>;

struct StepOutcome {
  bool moved = false;
  Channel from = kSilent;
  Channel to = kSilent;
  double omega_before = 0.0;
  double omega_after = 0.0;
};

// Every admitted user starts on a uniformly random channel of its set.
SelectionState init_random(const Scenario& scenario, std::span<const std::uint8_t> admitted,
                           std::uint64_t seed);

// Moves user i to argmin_k omega_i^k over its channel set. The current channel
// is kept whenever it attains the minimum; otherwise the lowest such channel wins.
StepOutcome best_response_step(const Scenario& scenario, SelectionState& state, std::size_t i);

// 10 * N * max_i K_i.
std::size_t default_max_rounds(const Scenario& scenario) noexcept;

// Sweeps admitted users in index order until a sweep makes no move or
// max_rounds sweeps have run.
void run(const Scenario& scenario, SelectionState& state, std::size_t max_rounds,
         const MoveObserver& observer = {});

// sum_i sum_k u_i^k with u_i^k = sum_{j != i} a_i^k a_j^k g_ji P_j P_i.
double potential(const Scenario& scenario, const Allocation& allocation);

// Symmetrizes off-diagonal gains: g_ij = g_ji = (g_ij + g_ji) / 2.
Scenario make_reciprocal(Scenario scenario);

}  // namespace specalloc
