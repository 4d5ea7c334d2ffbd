#include "specalloc/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace specalloc {

namespace {

// Interference ratio I+_ji / I_i^max. A user whose target is unreachable
// alone is blocked by any interferer, so its row saturates at 1.
double clamped_ratio(const DerivedLinks& links, std::size_t j, std::size_t i) {
  if (links.infeasible_alone[i]) return 1.0;
  return links.i_plus(j, i) / links.i_max[i];
}

BqcProblem skeleton(const Scenario& scenario, const DerivedLinks& links) {
  const std::size_t n = scenario.size();
  BqcProblem p;
  p.coeff = SquareMatrix(n);
  p.capacity.resize(n);
  p.revenue.resize(n);
  p.forced_zero = links.infeasible_alone;
  for (std::size_t i = 0; i < n; ++i) {
    p.capacity[i] = static_cast<int>(scenario.users[i].channels.size());
    p.revenue[i] = scenario.users[i].revenue;
  }
  return p;
}

template <typename Keep>
BqcProblem build_weighted(const Scenario& scenario, Keep&& keep) {
  scenario.validate();
  const DerivedLinks links = derive_links(scenario);
  BqcProblem p = skeleton(scenario, links);
  const std::size_t n = scenario.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ki = scenario.users[i].channels;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !keep(j, i)) continue;
      const auto& kj = scenario.users[j].channels;
      const double overlap =
          static_cast<double>(common_channels(kj, ki)) / static_cast<double>(kj.size());
      p.coeff(i, j) = clamped_ratio(links, j, i) * overlap;
    }
  }
  return p;
}

}  // namespace

double BqcProblem::load(std::size_t i, std::span<const std::uint8_t> x) const noexcept {
  double sum = 1.0;
  const auto row = coeff.row(i);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != i && x[j]) sum += row[j];
  }
  return sum;
}

void BqcProblem::validate() const {
  const std::size_t n = capacity.size();
  if (coeff.size() != n || revenue.size() != n || forced_zero.size() != n) {
    throw std::invalid_argument("BqcProblem: coeff, capacity, revenue and forced_zero sizes differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (capacity[i] < 1) throw std::invalid_argument("BqcProblem: capacity must be >= 1");
    if (!(revenue[i] >= 0.0)) throw std::invalid_argument("BqcProblem: revenue must be >= 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(coeff(i, j) >= 0.0) || !std::isfinite(coeff(i, j))) {
        throw std::invalid_argument("BqcProblem: coefficients must be finite and >= 0");
      }
    }
  }
}

BqcProblem build_equal(const Scenario& scenario) {
  scenario.validate();
  const DerivedLinks links = derive_links(scenario);
  BqcProblem p = skeleton(scenario, links);
  const std::size_t n = scenario.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) p.coeff(i, j) = clamped_ratio(links, j, i);
    }
  }
  return p;
}

BqcProblem build_unequal(const Scenario& scenario) {
  return build_weighted(scenario, [](std::size_t, std::size_t) { return true; });
}

double neighbor_radius(double neighbor_count, double density) {
  if (!(neighbor_count >= 0.0)) throw std::invalid_argument("neighbor count must be >= 0");
  if (!(density > 0.0)) throw std::invalid_argument("density must be > 0");
  if (std::isinf(neighbor_count)) return std::numeric_limits<double>::infinity();
  return std::sqrt(neighbor_count / (density * std::numbers::pi));
}

BqcProblem build_neighbor_limited(const Scenario& scenario, double neighbor_count, double density) {
  const double radius = neighbor_radius(neighbor_count, density);
  return build_weighted(scenario, [&](std::size_t j, std::size_t i) {
    if (radius <= 0.0) return false;
    return distance(scenario.users[j].tx_position, scenario.users[i].rx_position) <= radius;
  });
}

bool check_bqc_feasible(const BqcProblem& problem, std::span<const std::uint8_t> x) {
  if (x.size() != problem.size()) throw std::invalid_argument("x has wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (problem.forced_zero[i]) return false;
    const double cap = static_cast<double>(problem.capacity[i]);
    if (problem.load(i, x) > cap * (1.0 + kFeasibilityTolerance)) return false;
  }
  return true;
}

double objective_value(const BqcProblem& problem, std::span<const std::uint8_t> x) {
  double z = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) z += problem.revenue[i];
  }
  return z;
}

TransformSpec TransformSpec::parse(const std::string& text) {
  TransformSpec spec;
  if (text == "equal") {
    spec.kind = TransformKind::equal;
  } else if (text == "unequal") {
    spec.kind = TransformKind::unequal;
  } else if (text.rfind("neighbor:", 0) == 0) {
    spec.kind = TransformKind::neighbor;
    const std::string value = text.substr(9);
    std::size_t used = 0;
    try {
      spec.neighbor_count = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || !(spec.neighbor_count >= 0.0)) {
      throw std::invalid_argument("bad neighbor count in transform '" + text + "'");
    }
  } else {
    throw std::invalid_argument("unknown transform '" + text + "' (expected equal, unequal or neighbor:<x>)");
  }
  return spec;
}

std::string TransformSpec::to_string() const {
  switch (kind) {
    case TransformKind::equal:
      return "equal";
    case TransformKind::unequal:
      return "unequal";
    case TransformKind::neighbor: {
      std::ostringstream os;
      os << "neighbor:" << neighbor_count;
      return os.str();
    }
  }
  return "unequal";
}

BqcProblem build_problem(const Scenario& scenario, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::equal:
      return build_equal(scenario);
    case TransformKind::unequal:
      return build_unequal(scenario);
    case TransformKind::neighbor:
      return build_neighbor_limited(scenario, spec.neighbor_count, spec.density);
  }
  throw std::logic_error("unreachable transform kind");
}

}  // namespace specalloc
