#include "specalloc/channel_select.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace specalloc {

SelectionState init_random(const Scenario& scenario, std::span<const std::uint8_t> admitted,
                           std::uint64_t seed) {
  if (admitted.size() != scenario.size()) throw std::invalid_argument("admission vector has wrong length");
  std::mt19937_64 rng(seed);
  SelectionState state;
  state.allocation = Allocation(scenario.size());
  state.admitted.assign(admitted.begin(), admitted.end());
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    if (!admitted[i]) continue;
    const auto& channels = scenario.users[i].channels;
    std::uniform_int_distribution<std::size_t> pick(0, channels.size() - 1);
    state.allocation.assign(i, channels[pick(rng)]);
  }
  state.potential = potential(scenario, state.allocation);
  return state;
}

StepOutcome best_response_step(const Scenario& scenario, SelectionState& state, std::size_t i) {
  if (!state.admitted.at(i)) throw std::invalid_argument("best response requested for a user that is not admitted");
  StepOutcome out;
  out.from = state.allocation.channel(i).value_or(kSilent);
  const double current = out.from == kSilent ? 0.0 : interference_omega(scenario, state.allocation, i, out.from);
  out.omega_before = current;
  out.to = out.from;
  out.omega_after = current;
  for (const Channel k : scenario.users[i].channels) {
    if (k == out.from) continue;
    const double omega = interference_omega(scenario, state.allocation, i, k);
    if (out.to == kSilent || omega < out.omega_after) {
      out.to = k;
      out.omega_after = omega;
    }
  }
  if (out.to != out.from) {
    state.allocation.assign(i, out.to);
    out.moved = true;
  }
  return out;
}

std::size_t default_max_rounds(const Scenario& scenario) noexcept {
  std::size_t max_k = 1;
  for (const User& u : scenario.users) max_k = std::max(max_k, u.channels.size());
  return 10 * scenario.size() * max_k;
}

void run(const Scenario& scenario, SelectionState& state, std::size_t max_rounds, const MoveObserver& observer) {
  state.converged = false;
  while (state.round < max_rounds) {
    ++state.round;
    bool any = false;
    for (std::size_t i = 0; i < scenario.size(); ++i) {
      if (!state.admitted[i]) continue;
      const StepOutcome step = best_response_step(scenario, state, i);
      if (!step.moved) continue;
      any = true;
      ++state.moves;
      if (observer) {
        state.potential = potential(scenario, state.allocation);
        observer({state.round, i, step.from, step.to, step.omega_before, step.omega_after, state.potential});
      }
    }
    if (!any) {
      state.converged = true;
      break;
    }
  }
  state.potential = potential(scenario, state.allocation);
}

double potential(const Scenario& scenario, const Allocation& allocation) {
  double total = 0.0;
  const auto& channels = allocation.channels();
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i] == kSilent) continue;
    double omega = 0.0;
    for (std::size_t j = 0; j < channels.size(); ++j) {
      if (j != i && channels[j] == channels[i]) omega += scenario.gain(j, i) * scenario.users[j].power;
    }
    total += scenario.users[i].power * omega;
  }
  return total;
}

Scenario make_reciprocal(Scenario scenario) {
  const std::size_t n = scenario.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double g = 0.5 * (scenario.gain(i, j) + scenario.gain(j, i));
      scenario.gain(i, j) = g;
      scenario.gain(j, i) = g;
    }
  }
  return scenario;
}

}  // namespace specalloc
