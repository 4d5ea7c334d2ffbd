#pragma once

// Physical interference model: users, gains, SINR and allocation success.
//
// Conventions used throughout the library:
//   * users are indexed 0..N-1;
//   * channels are identified by 1-based integers in {1..channel_count};
//   * gain(j, i) is the gain from transmitter j to receiver i, so the
//     diagonal gain(i, i) is user i's desired link;
//   * all SINR arithmetic is linear scale, dB only at I/O boundaries.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "specalloc/matrix.hpp"

namespace specalloc {

using Channel = int;
inline constexpr Channel kSilent = 0;

// Binary admission vector (x_i in {0,1}).
using BinaryVector = std::vector<std::uint8_t>;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b) noexcept;

double db_to_linear(double db) noexcept;
double linear_to_db(double ratio) noexcept;

struct User {
  Point tx_position;
  Point rx_position;
  double power = 1.0;  // watts
  double sinr_target_db = 0.0;
  double revenue = 1.0;
  std::vector<Channel> channels;  // sorted ascending, unique

  double sinr_target() const noexcept { return db_to_linear(sinr_target_db); }
  bool has_channel(Channel k) const noexcept;

  friend bool operator==(const User&, const User&) = default;
};

struct Scenario {
  std::vector<User> users;
  SquareMatrix gain;  // gain(j, i): transmitter j -> receiver i
  double noise = 1e-8;  // watts
  int channel_count = 1;

  std::size_t size() const noexcept { return users.size(); }

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// |K_a intersect K_b| for two sorted channel lists.
std::size_t common_channels(const std::vector<Channel>& a, const std::vector<Channel>& b) noexcept;

// At most one channel per user; kSilent marks a user that does not transmit.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::size_t n) : channel_(n, kSilent) {}
  explicit Allocation(std::vector<Channel> channels) : channel_(std::move(channels)) {}

  std::size_t size() const noexcept { return channel_.size(); }

  std::optional<Channel> channel(std::size_t i) const noexcept {
    if (channel_[i] == kSilent) return std::nullopt;
    return channel_[i];
  }
  bool transmitting(std::size_t i) const noexcept { return channel_[i] != kSilent; }
  void assign(std::size_t i, Channel k) noexcept { channel_[i] = k; }
  void silence(std::size_t i) noexcept { channel_[i] = kSilent; }

  // Channel per user, kSilent for silent users.
  const std::vector<Channel>& channels() const noexcept { return channel_; }

  std::size_t transmitting_count() const noexcept;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Channel> channel_;
};

// Throws std::invalid_argument if sizes mismatch or a user holds a channel
// outside its own channel set.
void validate_allocation(const Scenario& scenario, const Allocation& allocation);

// Per-pair quantities derived from a scenario.
struct DerivedLinks {
  std::vector<double> signal;           // S_i = g_ii P_i
  std::vector<double> i_max;            // S_i / beta_i - noise
  SquareMatrix cross;                   // cross(j, i) = g_ji P_j
  std::vector<std::uint8_t> infeasible_alone;  // i_max <= 0

  std::size_t size() const noexcept { return signal.size(); }

  // min(i_max_i, I_ji): interference from j at i, clamped at the tolerable maximum.
  double i_plus(std::size_t j, std::size_t i) const noexcept;

  bool any_infeasible() const noexcept;
};

DerivedLinks derive_links(const Scenario& scenario);

// Accumulated interference at receiver i from every other user on channel k.
double interference_omega(const Scenario& scenario, const Allocation& allocation, std::size_t i,
                          Channel k) noexcept;

// SINR of user i on its assigned channel, nullopt when i is silent.
std::optional<double> compute_sinr(const Scenario& scenario, const Allocation& allocation,
                                   std::size_t i) noexcept;

// The single SINR acceptance test shared by every component.
inline bool meets_target(double signal, double noise, double omega, double beta) noexcept {
  return signal / (noise + omega) >= beta;
}

struct SuccessReport {
  bool successful = true;
  std::vector<std::uint8_t> satisfied;  // transmitting and meeting its target
  std::size_t transmitting_count = 0;
  std::size_t satisfied_count = 0;
  double revenue = 0.0;  // sum of r_i over satisfied transmitting users
};

SuccessReport is_successful(const Scenario& scenario, const Allocation& allocation);

}  // namespace specalloc
