#include "specalloc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specalloc/scengen.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

namespace {

double ratio(const DerivedLinks& links, std::size_t j, std::size_t i) { return links.i_plus(j, i) / links.i_max[i]; }

}  // namespace

double necessary_constant(double alpha) noexcept { return std::min(std::pow(2.0, alpha) + 1.0, 10.0); }

double approximation_constant(double alpha) noexcept { return std::min(std::pow(2.0, alpha) - 1.0, 10.0); }

void require_bound_preconditions(const Scenario& scenario, double alpha) {
  scenario.validate();
  if (scenario.size() == 0) return;
  const User& first = scenario.users.front();
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    const User& u = scenario.users[i];
    if (u.channels != first.channels) throw std::invalid_argument("bounds require identical channel sets");
    if (u.sinr_target_db != first.sinr_target_db) throw std::invalid_argument("bounds require a common SINR target");
    for (std::size_t j = 0; j < scenario.size(); ++j) {
      const double expect = pathloss_gain(distance(scenario.users[j].tx_position, u.rx_position), alpha);
      if (std::abs(scenario.gain(j, i) - expect) > 1e-9 * expect) {
        throw std::invalid_argument("bounds require geometric gains max(d,1)^-alpha");
      }
    }
  }
}

bool necessary_check(const Scenario& scenario, std::span<const std::uint8_t> x, double alpha) {
  require_bound_preconditions(scenario, alpha);
  if (x.size() != scenario.size()) throw std::invalid_argument("admission vector has wrong length");
  const DerivedLinks links = derive_links(scenario);
  const double c = necessary_constant(alpha);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (links.infeasible_alone[i]) return false;
    double lhs = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i && x[j]) lhs += ratio(links, j, i);
    }
    const double cap = c * static_cast<double>(scenario.users[i].channels.size());
    if (lhs > cap * (1.0 + kFeasibilityTolerance)) return false;
  }
  return true;
}

std::vector<std::size_t> peel_to_constraint(const Scenario& scenario, std::vector<std::size_t> members,
                                            double scale) {
  const DerivedLinks links = derive_links(scenario);
  std::erase_if(members, [&](std::size_t i) { return links.infeasible_alone[i] != 0; });
  for (;;) {
    std::size_t worst = members.size();
    double worst_excess = 1.0 + kFeasibilityTolerance;
    for (std::size_t a = 0; a < members.size(); ++a) {
      const std::size_t i = members[a];
      double lhs = 1.0;
      for (const std::size_t j : members) {
        if (j != i) lhs += ratio(links, j, i);
      }
      const double excess = lhs / (scale * static_cast<double>(scenario.users[i].channels.size()));
      if (excess > worst_excess) {
        worst_excess = excess;
        worst = a;
      }
    }
    if (worst == members.size()) return members;
    members.erase(members.begin() + static_cast<std::ptrdiff_t>(worst));
  }
}

BoundReport approx_gap_check(const Scenario& scenario, double alpha, std::uint64_t original_budget,
                             std::uint64_t bqc_budget) {
  require_bound_preconditions(scenario, alpha);
  BoundReport r;
  r.constant_c = necessary_constant(alpha);
  r.approx_constant = approximation_constant(alpha);

  const ExactAllocation opt = solve_original_exact(scenario, original_budget);
  const ExactSelection opt_bqc = solve_bqc_exact(build_equal(scenario), bqc_budget);
  r.opt_exact = opt.objective;
  r.opt_bqc = opt_bqc.objective;
  r.prop4_lhs = r.opt_exact / r.approx_constant - 1.0;
  r.necessary_lhs = r.opt_exact / r.constant_c - 1.0;
  r.holds_approx = r.prop4_lhs <= r.opt_bqc;
  r.holds_necessary_constant = r.necessary_lhs <= r.opt_bqc;

  std::vector<std::size_t> transmitting;
  BinaryVector x(scenario.size(), 0);
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    if (opt.best.transmitting(i)) {
      transmitting.push_back(i);
      x[i] = 1;
    }
  }
  r.optimum_passes_necessary = necessary_check(scenario, x, alpha);
  const auto necessary = peel_to_constraint(scenario, transmitting, r.constant_c);
  const auto sufficient = peel_to_constraint(scenario, necessary, 1.0);
  r.necessary_count = necessary.size();
  r.sufficient_count = sufficient.size();
  r.holds_set_bound = static_cast<double>(r.necessary_count) <=
                      r.constant_c * (static_cast<double>(r.sufficient_count) + 1.0);
  return r;
}

}  // namespace specalloc
