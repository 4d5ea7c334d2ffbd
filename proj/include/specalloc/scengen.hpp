#pragma once

// Seeded random scenario generator.
//
// Transmitters are uniform in a square of side sqrt(N / density). Each
// receiver sits at a Normal(mean, sqrt(variance)) distance (redrawn below
// 1 m) in a uniform direction. Gains follow g = max(d, 1)^-alpha with d the
// transmitter-to-receiver distance.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "specalloc/model.hpp"

namespace specalloc {

enum class ChannelSetMode { equal, uniform };
enum class RevenueMode { max_sat, max_revenue };

struct GenConfig {
  std::size_t user_count = 10;
  double density = 1.0 / 800.0;
  double link_distance_mean = 10.0;
  double link_distance_variance = 5.0;
  double tx_power = 1.0;
  double noise = 1e-8;
  double pathloss_exponent = 4.0;
  int channel_universe = 10;
  ChannelSetMode channel_set_mode = ChannelSetMode::uniform;
  std::vector<double> sinr_targets_db{0.0, 3.0, 6.0, 9.0, 12.0};
  RevenueMode revenue_mode = RevenueMode::max_sat;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument listing every offending field.
  void validate() const;
};

using Rng = std::mt19937_64;

// Revenue attached to a target under the max-revenue table
// (0, 3, 6, 9, 12 dB -> 1, 2, 3, 4, 5); other targets map by rounding
// target/3 + 1.
double revenue_for_target(double sinr_target_db, RevenueMode mode);

double square_side(const GenConfig& config);

std::vector<std::vector<Channel>> draw_channel_sets(const GenConfig& config, Rng& rng);

Scenario generate(const GenConfig& config);

// Gain law shared with the bounds module.
double pathloss_gain(double distance_m, double alpha) noexcept;

std::string to_string(ChannelSetMode mode);
std::string to_string(RevenueMode mode);
ChannelSetMode parse_channel_set_mode(const std::string& text);
RevenueMode parse_revenue_mode(const std::string& text);

}  // namespace specalloc
