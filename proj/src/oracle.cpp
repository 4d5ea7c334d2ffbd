#include "specalloc/oracle.hpp"

#include <limits>
#include <vector>

namespace specalloc {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Depth-first search over channel assignments. Users on a channel are kept
// in per-channel lists so that adding a user touches only its co-channel
// peers. Interference is never subtracted: each level saves the values it
// overwrites and restores them on the way back.
class AssignmentSearch {
 public:
  AssignmentSearch(const Scenario& scenario, std::uint64_t budget)
      : s_(scenario), links_(derive_links(scenario)), budget_(budget), n_(scenario.size()),
        on_channel_(static_cast<std::size_t>(scenario.channel_count) + 1), omega_(n_, 0.0),
        current_(n_) {
    beta_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) beta_[i] = s_.users[i].sinr_target();
  }

  // Tries to put user u on channel k; on success returns true and leaves the
  // state updated. `undo` receives what must be restored.
  bool place(std::size_t u, Channel k, std::vector<std::pair<std::size_t, double>>& undo) {
    auto& peers = on_channel_[static_cast<std::size_t>(k)];
    double own = 0.0;
    for (const std::size_t v : peers) own += links_.cross(v, u);
    if (!meets_target(links_.signal[u], s_.noise, own, beta_[u])) return false;
    for (const std::size_t v : peers) {
      if (!meets_target(links_.signal[v], s_.noise, omega_[v] + links_.cross(u, v), beta_[v])) return false;
    }
    undo.clear();
    undo.emplace_back(u, omega_[u]);
    for (const std::size_t v : peers) {
      undo.emplace_back(v, omega_[v]);
      omega_[v] += links_.cross(u, v);
    }
    omega_[u] = own;
    peers.push_back(u);
    current_.assign(u, k);
    return true;
  }

  void unplace(std::size_t u, Channel k, const std::vector<std::pair<std::size_t, double>>& undo) {
    on_channel_[static_cast<std::size_t>(k)].pop_back();
    for (const auto& [v, value] : undo) omega_[v] = value;
    current_.silence(u);
  }

  bool tick() {
    ++explored_;
    return explored_ <= budget_;
  }

  const Scenario& s_;
  DerivedLinks links_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> on_channel_;
  std::vector<double> omega_;
  std::vector<double> beta_;
  Allocation current_;
};

class OriginalSearch : public AssignmentSearch {
 public:
  using AssignmentSearch::AssignmentSearch;

  void run() {
    suffix_.assign(n_ + 1, 0.0);
    for (std::size_t i = n_; i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + (links_.infeasible_alone[i] ? 0.0 : s_.users[i].revenue);
    }
    undo_.resize(n_);
    best_ = Allocation(n_);
    descend(0, 0.0);
  }

  void descend(std::size_t u, double revenue) {
    tick();
    if (u == n_) {
      if (!found_ || revenue > best_value_) {
        found_ = true;
        best_value_ = revenue;
        best_ = current_;
      }
      return;
    }
    if (found_ && revenue + suffix_[u] <= best_value_) return;
    descend(u + 1, revenue);
    if (links_.infeasible_alone[u]) return;
    for (const Channel k : s_.users[u].channels) {
      if (found_ && revenue + suffix_[u] <= best_value_) return;
      if (place(u, k, undo_[u])) {
        descend(u + 1, revenue + s_.users[u].revenue);
        unplace(u, k, undo_[u]);
      }
    }
  }

  bool found_ = false;
  double best_value_ = 0.0;
  Allocation best_;
  std::vector<double> suffix_;
  std::vector<std::vector<std::pair<std::size_t, double>>> undo_;
};

class FeasibleSearch : public AssignmentSearch {
 public:
  FeasibleSearch(const Scenario& scenario, std::uint64_t budget, std::vector<std::size_t> order)
      : AssignmentSearch(scenario, budget), order_(std::move(order)), undo_(order_.size()) {}

  bool descend(std::size_t depth) {
    if (!tick()) throw BudgetExceeded(explored_, budget_);
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (const Channel k : s_.users[u].channels) {
      if (place(u, k, undo_[depth])) {
        if (descend(depth + 1)) return true;
        unplace(u, k, undo_[depth]);
      }
    }
    return false;
  }

  std::vector<std::size_t> order_;
  std::vector<std::vector<std::pair<std::size_t, double>>> undo_;
};

class BqcSearch {
 public:
  explicit BqcSearch(const BqcProblem& problem) : p_(problem), n_(problem.size()) {
    x_.assign(n_, 0);
    best_.assign(n_, 0);
    suffix_.assign(n_ + 1, 0.0);
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] + (p_.forced_zero[i] ? 0.0 : p_.revenue[i]);
    loads_.assign(n_ + 1, std::vector<double>(n_, 1.0));
    limit_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) limit_[i] = p_.capacity[i] * (1.0 + kFeasibilityTolerance);
  }

  void descend(std::size_t u, double revenue) {
    ++explored_;
    if (u == n_) {
      if (!found_ || revenue > best_value_) {
        found_ = true;
        best_value_ = revenue;
        best_ = x_;
      }
      return;
    }
    if (found_ && revenue + suffix_[u] <= best_value_) return;
    const auto& load = loads_[u];
    loads_[u + 1] = load;
    descend(u + 1, revenue);
    if (p_.forced_zero[u] || load[u] > limit_[u]) return;
    if (found_ && revenue + suffix_[u] <= best_value_) return;
    auto& next = loads_[u + 1];
    next = load;
    for (std::size_t v = 0; v < n_; ++v) {
      if (v == u) continue;
      next[v] += p_.coeff(v, u);
      if (x_[v] && next[v] > limit_[v]) return;
    }
    x_[u] = 1;
    descend(u + 1, revenue + p_.revenue[u]);
    x_[u] = 0;
  }

  const BqcProblem& p_;
  std::size_t n_;
  BinaryVector x_;
  BinaryVector best_;
  std::vector<double> suffix_;
  std::vector<std::vector<double>> loads_;  // loads_[u]: loads before deciding user u
  std::vector<double> limit_;
  bool found_ = false;
  double best_value_ = 0.0;
  std::uint64_t explored_ = 0;
};

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(candidates) +
                         " candidates, budget is " + std::to_string(budget)),
      candidates_(candidates), budget_(budget) {}

std::uint64_t original_candidate_count(const Scenario& scenario) noexcept {
  std::uint64_t count = 1;
  for (const User& u : scenario.users) count = saturating_mul(count, u.channels.size() + 1);
  return count;
}

std::uint64_t bqc_candidate_count(const BqcProblem& problem) noexcept {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.forced_zero[i]) count = saturating_mul(count, 2);
  }
  return count;
}

ExactAllocation solve_original_exact(const Scenario& scenario, std::uint64_t budget) {
  scenario.validate();
  const std::uint64_t candidates = original_candidate_count(scenario);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);
  OriginalSearch search(scenario, std::numeric_limits<std::uint64_t>::max());
  search.run();
  return {search.best_value_, search.best_, search.explored_};
}

ExactSelection solve_bqc_exact(const BqcProblem& problem, std::uint64_t budget) {
  problem.validate();
  const std::uint64_t candidates = bqc_candidate_count(problem);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);
  BqcSearch search(problem);
  search.descend(0, 0.0);
  return {search.best_value_, search.best_, search.explored_};
}

std::optional<Allocation> find_successful_assignment(const Scenario& scenario,
                                                     std::span<const std::uint8_t> admitted,
                                                     std::uint64_t budget) {
  scenario.validate();
  if (admitted.size() != scenario.size()) throw std::invalid_argument("admission vector has wrong length");
  const DerivedLinks links = derive_links(scenario);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < admitted.size(); ++i) {
    if (!admitted[i]) continue;
    if (links.infeasible_alone[i]) return std::nullopt;
    order.push_back(i);
  }
  FeasibleSearch search(scenario, budget, std::move(order));
  if (!search.descend(0)) return std::nullopt;
  return search.current_;
}

}  // namespace specalloc
