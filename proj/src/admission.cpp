#include "specalloc/admission.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace specalloc {

namespace {

// a'_{ij} / r_j with zero revenue treated as infinitely cheap to drop.
double drop_score(double coeff, double revenue) {
  if (revenue > 0.0) return coeff / revenue;
  return coeff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace

AdmissionResult solve(const BqcProblem& problem, const AdmissionObserver& observer) {
  problem.validate();
  const std::size_t n = problem.size();

  AdmissionResult result;
  result.x.assign(n, 0);
  result.lambda.assign(n, 0.0);

  // Step 0: admit everyone who can transmit at all, normalize rows by K_i.
  std::vector<double> inv_cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv_cap[i] = 1.0 / static_cast<double>(problem.capacity[i]);
    result.x[i] = problem.forced_zero[i] ? 0 : 1;
  }
  auto normalized = [&](std::size_t i, std::size_t j) {
    return i == j ? inv_cap[i] : problem.coeff(i, j) * inv_cap[i];
  };

  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!result.x[i]) continue;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (result.x[j]) sum += normalized(i, j);
    }
    y[i] = sum;
  }

  const double limit = 1.0 + kFeasibilityTolerance;
  std::vector<std::size_t> dropped;
  for (;;) {
    // Step 1: most violated row, lowest index on ties.
    std::size_t i_star = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (result.x[i] && y[i] > limit && (i_star == n || y[i] > y[i_star])) i_star = i;
    }
    if (i_star == n) break;

    // Step 2: admitted user contributing most to row i* per unit revenue.
    std::size_t j_star = n;
    double best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!result.x[j]) continue;
      const double score = drop_score(normalized(i_star, j), problem.revenue[j]);
      if (score > best) {
        best = score;
        j_star = j;
      }
    }

    // Step 3: charge the multiplier and remove j* from every active row.
    const double increment = normalized(i_star, j_star);
    result.lambda[j_star] += increment;
    result.x[j_star] = 0;
    y[j_star] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (result.x[i]) y[i] -= normalized(i, j_star);
    }
    dropped.push_back(j_star);
    ++result.iterations;

    if (observer) {
      AdmissionEvent ev;
      ev.kind = AdmissionEvent::Kind::drop;
      ev.iteration = result.iterations;
      ev.most_violated = i_star;
      ev.user = j_star;
      ev.lambda_increment = increment;
      ev.y = y;
      observer(ev);
    }
  }

  // Reinsertion: offer dropped users back by descending revenue.
  std::stable_sort(dropped.begin(), dropped.end(), [&](std::size_t a, std::size_t b) {
    if (problem.revenue[a] != problem.revenue[b]) return problem.revenue[a] > problem.revenue[b];
    return a < b;
  });
  std::vector<double> load(n);
  for (std::size_t i = 0; i < n; ++i) load[i] = problem.load(i, result.x);
  std::size_t attempt = 0;
  for (const std::size_t j : dropped) {
    bool fits = load[j] <= problem.capacity[j] * limit;
    for (std::size_t i = 0; fits && i < n; ++i) {
      if (i != j && result.x[i] && load[i] + problem.coeff(i, j) > problem.capacity[i] * limit) fits = false;
    }
    if (fits) {
      result.x[j] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) load[i] += problem.coeff(i, j);
      }
      result.reinserted.push_back(j);
    }
    if (observer) {
      AdmissionEvent ev;
      ev.kind = AdmissionEvent::Kind::reinsert;
      ev.iteration = ++attempt;
      ev.user = j;
      ev.accepted = fits;
      observer(ev);
    }
  }
  std::sort(result.reinserted.begin(), result.reinserted.end());

  result.objective = objective_value(problem, result.x);
  result.slack.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.slack[i] = problem.capacity[i] - (result.x[i] ? load[i] : 0.0);
  }
  result.upper_bound = upper_bound(problem, result);
  return result;
}

std::vector<double> unnormalized_multipliers(const BqcProblem& problem, std::span<const double> lambda) {
  std::vector<double> mu(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i] * problem.capacity[i];
  return mu;
}

double relaxation_value(const BqcProblem& problem, std::span<const std::uint8_t> x,
                        std::span<const double> multipliers) {
  if (x.size() != problem.size() || multipliers.size() != problem.size()) {
    throw std::invalid_argument("relaxation_value: size mismatch");
  }
  double value = objective_value(problem, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (multipliers[i] == 0.0) continue;
    const double used = x[i] ? problem.load(i, x) : 0.0;
    value += multipliers[i] * (problem.capacity[i] - used);
  }
  return value;
}

double upper_bound(const BqcProblem& problem, const AdmissionResult& result) {
  return relaxation_value(problem, result.x, unnormalized_multipliers(problem, result.lambda));
}

bool relaxed_keeps(const BqcProblem& problem, std::span<const std::uint8_t> x,
                   std::span<const double> multipliers, std::size_t i) {
  return problem.revenue[i] - multipliers[i] * problem.load(i, x) > 0.0;
}

}  // namespace specalloc
