#include "specalloc/scengen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specalloc {

void GenConfig::validate() const {
  std::ostringstream errors;
  if (user_count < 1) errors << "user_count: must be >= 1; ";
  if (!(density > 0.0)) errors << "density: must be > 0; ";
  if (!(link_distance_variance >= 0.0)) errors << "link_distance_variance: must be >= 0; ";
  if (!std::isfinite(link_distance_mean) || (link_distance_variance == 0.0 && link_distance_mean < 1.0) ||
      link_distance_mean + 5.0 * std::sqrt(std::max(link_distance_variance, 0.0)) < 1.0) {
    errors << "link_distance_mean: draws must be able to reach 1 m; ";
  }
  if (!(tx_power > 0.0)) errors << "tx_power: must be > 0; ";
  if (!(noise > 0.0)) errors << "noise: must be > 0; ";
  if (!(pathloss_exponent > 0.0)) errors << "pathloss_exponent: must be > 0; ";
  if (channel_universe < 1) errors << "channel_universe: must be >= 1; ";
  if (channel_set_mode == ChannelSetMode::uniform && channel_universe < 2) {
    errors << "channel_universe: must be >= 2 in uniform mode; ";
  }
  if (sinr_targets_db.empty()) errors << "sinr_targets_db: must not be empty; ";
  for (double t : sinr_targets_db) {
    if (!std::isfinite(t)) errors << "sinr_targets_db: entries must be finite; ";
  }
  const std::string msg = errors.str();
  if (!msg.empty()) throw std::invalid_argument("invalid GenConfig: " + msg.substr(0, msg.size() - 2));
}

double revenue_for_target(double sinr_target_db, RevenueMode mode) {
  if (mode == RevenueMode::max_sat) return 1.0;
  return std::max(1.0, std::round(sinr_target_db / 3.0) + 1.0);
}

double square_side(const GenConfig& config) {
  return std::sqrt(static_cast<double>(config.user_count) / config.density);
}

double pathloss_gain(double distance_m, double alpha) noexcept {
  return std::pow(std::max(distance_m, 1.0), -alpha);
}

std::vector<std::vector<Channel>> draw_channel_sets(const GenConfig& config, Rng& rng) {
  const int k = config.channel_universe;
  std::vector<std::vector<Channel>> sets(config.user_count);
  std::vector<Channel> universe(static_cast<std::size_t>(k));
  std::iota(universe.begin(), universe.end(), 1);
  if (config.channel_set_mode == ChannelSetMode::equal) {
    std::fill(sets.begin(), sets.end(), universe);
    return sets;
  }
  std::uniform_int_distribution<int> size_dist(2, k);
  for (auto& set : sets) {
    const auto size = static_cast<std::size_t>(size_dist(rng));
    std::vector<Channel> pool = universe;
    // Partial Fisher-Yates: the first `size` entries become a uniform subset.
    for (std::size_t t = 0; t < size; ++t) {
      std::uniform_int_distribution<std::size_t> pick(t, pool.size() - 1);
      std::swap(pool[t], pool[pick(rng)]);
    }
    set.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(set.begin(), set.end());
  }
  return sets;
}

Scenario generate(const GenConfig& config) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t n = config.user_count;
  const double side = square_side(config);

  Scenario s;
  s.noise = config.noise;
  s.channel_count = config.channel_universe;
  s.users.resize(n);

  std::uniform_real_distribution<double> coord(0.0, side);
  for (User& u : s.users) {
    u.tx_position.x = coord(rng);
    u.tx_position.y = coord(rng);
  }
  std::normal_distribution<double> link(config.link_distance_mean, std::sqrt(config.link_distance_variance));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (User& u : s.users) {
    double d = link(rng);
    while (d < 1.0) d = link(rng);
    const double theta = angle(rng);
    u.rx_position = {u.tx_position.x + d * std::cos(theta), u.tx_position.y + d * std::sin(theta)};
  }
  std::uniform_int_distribution<std::size_t> target(0, config.sinr_targets_db.size() - 1);
  for (User& u : s.users) {
    u.power = config.tx_power;
    u.sinr_target_db = config.sinr_targets_db[target(rng)];
    u.revenue = revenue_for_target(u.sinr_target_db, config.revenue_mode);
  }
  auto sets = draw_channel_sets(config, rng);
  for (std::size_t i = 0; i < n; ++i) s.users[i].channels = std::move(sets[i]);

  s.gain = SquareMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      s.gain(j, i) = pathloss_gain(distance(s.users[j].tx_position, s.users[i].rx_position),
                                   config.pathloss_exponent);
    }
  }
  return s;
}

std::string to_string(ChannelSetMode mode) { return mode == ChannelSetMode::equal ? "equal" : "uniform"; }

std::string to_string(RevenueMode mode) { return mode == RevenueMode::max_sat ? "maxsat" : "maxrev"; }

ChannelSetMode parse_channel_set_mode(const std::string& text) {
  if (text == "equal") return ChannelSetMode::equal;
  if (text == "uniform") return ChannelSetMode::uniform;
  throw std::invalid_argument("channel_set_mode: expected 'equal' or 'uniform', got '" + text + "'");
}

RevenueMode parse_revenue_mode(const std::string& text) {
  if (text == "maxsat" || text == "max_sat") return RevenueMode::max_sat;
  if (text == "maxrev" || text == "max_revenue") return RevenueMode::max_revenue;
  throw std::invalid_argument("revenue_mode: expected 'maxsat' or 'maxrev', got '" + text + "'");
}

}  // namespace specalloc
