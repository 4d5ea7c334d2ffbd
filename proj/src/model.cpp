#include "specalloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace specalloc {

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) noexcept { return 10.0 * std::log10(ratio); }

bool User::has_channel(Channel k) const noexcept {
  return std::binary_search(channels.begin(), channels.end(), k);
}

std::size_t common_channels(const std::vector<Channel>& a, const std::vector<Channel>& b) noexcept {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

void Scenario::validate() const {
  const std::size_t n = users.size();
  if (channel_count < 1) throw std::invalid_argument("channel_count must be >= 1");
  if (!(noise > 0.0)) throw std::invalid_argument("noise must be > 0");
  if (gain.size() != n) {
    throw std::invalid_argument("gain matrix is " + std::to_string(gain.size()) + "x" +
                                std::to_string(gain.size()) + " but there are " + std::to_string(n) +
                                " users");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const User& u = users[i];
    const std::string who = "user " + std::to_string(i) + ": ";
    if (!(u.power > 0.0)) throw std::invalid_argument(who + "power must be > 0");
    if (!std::isfinite(u.sinr_target_db)) throw std::invalid_argument(who + "sinr target must be finite");
    if (!(u.revenue >= 0.0)) throw std::invalid_argument(who + "revenue must be >= 0");
    if (u.channels.empty()) throw std::invalid_argument(who + "channel set is empty");
    if (!std::is_sorted(u.channels.begin(), u.channels.end()) ||
        std::adjacent_find(u.channels.begin(), u.channels.end()) != u.channels.end()) {
      throw std::invalid_argument(who + "channel set must be sorted and unique");
    }
    if (u.channels.front() < 1 || u.channels.back() > channel_count) {
      throw std::invalid_argument(who + "channel outside 1.." + std::to_string(channel_count));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(gain(j, i) > 0.0) || !std::isfinite(gain(j, i))) {
        throw std::invalid_argument("gain(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") must be finite and > 0");
      }
    }
  }
}

std::size_t Allocation::transmitting_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(channel_.begin(), channel_.end(), [](Channel k) { return k != kSilent; }));
}

void validate_allocation(const Scenario& scenario, const Allocation& allocation) {
  if (allocation.size() != scenario.size()) {
    throw std::invalid_argument("allocation covers " + std::to_string(allocation.size()) +
                                " users, scenario has " + std::to_string(scenario.size()));
  }
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (auto k = allocation.channel(i); k && !scenario.users[i].has_channel(*k)) {
      throw std::invalid_argument("user " + std::to_string(i) + " assigned channel " +
                                  std::to_string(*k) + " outside its channel set");
    }
  }
}

double DerivedLinks::i_plus(std::size_t j, std::size_t i) const noexcept {
  return std::min(i_max[i], cross(j, i));
}

bool DerivedLinks::any_infeasible() const noexcept {
  return std::any_of(infeasible_alone.begin(), infeasible_alone.end(), [](auto f) { return f != 0; });
}

DerivedLinks derive_links(const Scenario& scenario) {
  const std::size_t n = scenario.size();
  DerivedLinks links;
  links.signal.resize(n);
  links.i_max.resize(n);
  links.infeasible_alone.assign(n, 0);
  links.cross = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const User& u = scenario.users[i];
    links.signal[i] = scenario.gain(i, i) * u.power;
    links.i_max[i] = links.signal[i] / u.sinr_target() - scenario.noise;
    links.infeasible_alone[i] = links.i_max[i] <= 0.0 ? 1 : 0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double p = scenario.users[j].power;
    for (std::size_t i = 0; i < n; ++i) links.cross(j, i) = scenario.gain(j, i) * p;
  }
  return links;
}

double interference_omega(const Scenario& scenario, const Allocation& allocation, std::size_t i,
                          Channel k) noexcept {
  double omega = 0.0;
  const auto& channels = allocation.channels();
  for (std::size_t j = 0; j < channels.size(); ++j) {
    if (j != i && channels[j] == k) omega += scenario.gain(j, i) * scenario.users[j].power;
  }
  return omega;
}

std::optional<double> compute_sinr(const Scenario& scenario, const Allocation& allocation,
                                   std::size_t i) noexcept {
  const auto k = allocation.channel(i);
  if (!k) return std::nullopt;
  const double signal = scenario.gain(i, i) * scenario.users[i].power;
  return signal / (scenario.noise + interference_omega(scenario, allocation, i, *k));
}

SuccessReport is_successful(const Scenario& scenario, const Allocation& allocation) {
  validate_allocation(scenario, allocation);
  SuccessReport report;
  report.satisfied.assign(scenario.size(), 0);
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    const auto k = allocation.channel(i);
    if (!k) continue;
    ++report.transmitting_count;
    const User& u = scenario.users[i];
    const double signal = scenario.gain(i, i) * u.power;
    const double omega = interference_omega(scenario, allocation, i, *k);
    if (meets_target(signal, scenario.noise, omega, u.sinr_target())) {
      report.satisfied[i] = 1;
      ++report.satisfied_count;
      report.revenue += u.revenue;
    } else {
      report.successful = false;
    }
  }
  return report;
}

}  // namespace specalloc
