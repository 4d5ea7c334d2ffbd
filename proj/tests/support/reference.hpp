#pragma once

// Reference implementations used by the tests. Each one recomputes a library
// quantity from the raw model definitions with the most direct loop
// available, sharing no code with the library beyond the data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "specalloc/model.hpp"
#include "specalloc/transform.hpp"

namespace ref {

using specalloc::Allocation;
using specalloc::BinaryVector;
using specalloc::BqcProblem;
using specalloc::Channel;
using specalloc::Scenario;

inline double beta(const Scenario& s, std::size_t i) { return std::pow(10.0, s.users[i].sinr_target_db / 10.0); }

inline double signal(const Scenario& s, std::size_t i) { return s.gain(i, i) * s.users[i].power; }

inline double i_max(const Scenario& s, std::size_t i) { return signal(s, i) / beta(s, i) - s.noise; }

inline double cross(const Scenario& s, std::size_t j, std::size_t i) { return s.gain(j, i) * s.users[j].power; }

inline double omega(const Scenario& s, const Allocation& a, std::size_t i, Channel k) {
  double sum = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != i && a.channels()[j] == k) sum += cross(s, j, i);
  }
  return sum;
}

inline double sinr(const Scenario& s, const Allocation& a, std::size_t i) {
  return signal(s, i) / (s.noise + omega(s, a, i, a.channels()[i]));
}

inline bool satisfied(const Scenario& s, const Allocation& a, std::size_t i) {
  return a.channels()[i] != specalloc::kSilent && sinr(s, a, i) >= beta(s, i);
}

inline bool successful(const Scenario& s, const Allocation& a) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (a.channels()[i] != specalloc::kSilent && !satisfied(s, a, i)) return false;
  }
  return true;
}

inline std::size_t overlap(const std::vector<Channel>& a, const std::vector<Channel>& b) {
  std::size_t n = 0;
  for (Channel k : a) n += static_cast<std::size_t>(std::count(b.begin(), b.end(), k));
  return n;
}

// a_ij of the equal-set (unequal = false) or unequal-set form.
inline double coeff(const Scenario& s, std::size_t i, std::size_t j, bool unequal) {
  if (i == j) return 0.0;
  const double imax = i_max(s, i);
  if (imax <= 0.0) return 1.0;
  double a = std::min(imax, cross(s, j, i)) / imax;
  if (unequal) {
    a *= static_cast<double>(overlap(s.users[j].channels, s.users[i].channels)) /
         static_cast<double>(s.users[j].channels.size());
  }
  return a;
}

inline bool bqc_feasible(const BqcProblem& p, const BinaryVector& x) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!x[i]) continue;
    if (p.forced_zero[i]) return false;
    double lhs = 1.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i && x[j]) lhs += p.coeff(i, j);
    }
    if (lhs > p.capacity[i] * (1.0 + specalloc::kFeasibilityTolerance)) return false;
  }
  return true;
}

inline double revenue(const BqcProblem& p, const BinaryVector& x) {
  double z = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) z += x[i] ? p.revenue[i] : 0.0;
  return z;
}

inline BinaryVector mask_to_vector(std::uint64_t mask, std::size_t n) {
  BinaryVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
  return x;
}

// Plain 2^N sweep over bitmasks, no pruning.
inline double bqc_optimum(const BqcProblem& p) {
  double best = 0.0;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    const BinaryVector x = mask_to_vector(m, p.size());
    if (bqc_feasible(p, x)) best = std::max(best, revenue(p, x));
  }
  return best;
}

// Calls f on every allocation in odometer order (user 0 varies fastest).
inline void for_each_allocation(const Scenario& s, const std::function<void(const Allocation&)>& f) {
  const std::size_t n = s.size();
  std::vector<std::size_t> digit(n, 0);
  Allocation a(n);
  while (true) {
    f(a);
    std::size_t i = 0;
    while (i < n) {
      ++digit[i];
      if (digit[i] <= s.users[i].channels.size()) {
        a.assign(i, s.users[i].channels[digit[i] - 1]);
        break;
      }
      digit[i] = 0;
      a.silence(i);
      ++i;
    }
    if (i == n) return;
  }
}

inline double original_optimum(const Scenario& s) {
  double best = 0.0;
  for_each_allocation(s, [&](const Allocation& a) {
    if (!successful(s, a)) return;
    double r = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) r += a.transmitting(i) ? s.users[i].revenue : 0.0;
    best = std::max(best, r);
  });
  return best;
}

// True if some channel choice for the admitted users satisfies all of them.
inline bool assignable(const Scenario& s, const BinaryVector& x) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (x[i]) members.push_back(i);
  }
  Allocation a(s.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
    if (d == members.size()) return successful(s, a);
    for (Channel k : s.users[members[d]].channels) {
      a.assign(members[d], k);
      if (rec(d + 1)) return true;
    }
    a.silence(members[d]);
    return false;
  };
  return rec(0);
}

struct DropTrace {
  BinaryVector x;
  std::vector<double> lambda;
  std::vector<std::size_t> order;  // dropped users in drop order
};

// Steps 0-3 of the multiplier heuristic with every normalized load recomputed
// from scratch at each iteration.
inline DropTrace lagrange_drops(const BqcProblem& p) {
  const std::size_t n = p.size();
  DropTrace t;
  t.x.assign(n, 0);
  t.lambda.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) t.x[i] = p.forced_zero[i] ? 0 : 1;
  auto a = [&](std::size_t i, std::size_t j) {
    return (i == j ? 1.0 : p.coeff(i, j)) / static_cast<double>(p.capacity[i]);
  };
  for (;;) {
    std::size_t worst = n;
    double worst_y = 1.0 + specalloc::kFeasibilityTolerance;
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.x[i]) continue;
      double y = 0.0;
      for (std::size_t j = 0; j < n; ++j) y += t.x[j] ? a(i, j) : 0.0;
      if (y > worst_y) {
        worst_y = y;
        worst = i;
      }
    }
    if (worst == n) return t;
    std::size_t pick = n;
    double best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.x[j]) continue;
      const double c = a(worst, j);
      const double score = p.revenue[j] > 0.0 ? c / p.revenue[j] : (c > 0.0 ? INFINITY : 0.0);
      if (score > best) {
        best = score;
        pick = j;
      }
    }
    t.lambda[pick] += a(worst, pick);
    t.x[pick] = 0;
    t.order.push_back(pick);
  }
}

// Random problem with coefficients in [0, scale] (each zero with probability
// `sparsity`), capacities in [kmin, kmax] and revenues 1 or in {1..5}.
inline BqcProblem random_problem(std::mt19937_64& rng, std::size_t n, int kmax, double scale, bool unit_revenue,
                                 double sparsity = 0.0, int kmin = 1) {
  BqcProblem p;
  p.coeff = specalloc::SquareMatrix(n);
  p.capacity.resize(n);
  p.revenue.resize(n);
  p.forced_zero.assign(n, 0);
  std::uniform_real_distribution<double> u(0.0, scale);
  std::uniform_int_distribution<int> cap(kmin, kmax);
  std::bernoulli_distribution zero(sparsity);
  std::uniform_int_distribution<int> rev(1, 5);
  for (std::size_t i = 0; i < n; ++i) {
    p.capacity[i] = cap(rng);
    p.revenue[i] = unit_revenue ? 1.0 : rev(rng);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = u(rng);
      p.coeff(i, j) = sparsity > 0.0 && zero(rng) ? 0.0 : v;
    }
  }
  return p;
}

}  // namespace ref
