#include "specalloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "specalloc/admission.hpp"
#include "specalloc/channel_select.hpp"
#include "specalloc/pipeline.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

namespace {

Allocation random_allocation(const Scenario& s, std::mt19937_64& rng) {
  Allocation a(s.size());
  std::bernoulli_distribution on(0.7);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!on(rng)) continue;
    const auto& ch = s.users[i].channels;
    std::uniform_int_distribution<std::size_t> pick(0, ch.size() - 1);
    a.assign(i, ch[pick(rng)]);
  }
  return a;
}

CheckResult sinr_equivalence(const Scenario& s, const DerivedLinks& links, const VerifyOptions& opt) {
  CheckResult r{"sinr_interference_equivalence", CheckStatus::pass, ""};
  std::mt19937_64 rng(opt.seed);
  std::size_t compared = 0;
  for (std::size_t t = 0; t < opt.random_allocations; ++t) {
    const Allocation a = random_allocation(s, rng);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto sinr = compute_sinr(s, a, i);
      if (!sinr || links.infeasible_alone[i]) continue;
      const double omega = interference_omega(s, a, i, *a.channel(i));
      // Skip pairs within rounding distance of the boundary.
      if (std::abs(omega - links.i_max[i]) <= 1e-12 * links.i_max[i]) continue;
      ++compared;
      if ((*sinr >= s.users[i].sinr_target()) != (omega <= links.i_max[i])) {
        r.status = CheckStatus::fail;
        r.detail = "user " + std::to_string(i) + " disagrees";
        return r;
      }
    }
  }
  r.detail = std::to_string(compared) + " comparisons";
  return r;
}

CheckResult blocked_bound(const Scenario& s, const DerivedLinks& links, const VerifyOptions& opt) {
  CheckResult r{"blocked_channel_bound", CheckStatus::pass, ""};
  std::mt19937_64 rng(opt.seed + 1);
  for (std::size_t t = 0; t < opt.random_allocations; ++t) {
    const Allocation a = random_allocation(s, rng);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (links.infeasible_alone[i]) continue;
      double mass = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i && a.transmitting(j)) mass += links.i_plus(j, i) / links.i_max[i];
      }
      std::size_t blocked = 0;
      for (const Channel k : s.users[i].channels) {
        if (interference_omega(s, a, i, k) > links.i_max[i]) ++blocked;
      }
      if (!(static_cast<double>(blocked) < mass + 1.0)) {
        r.status = CheckStatus::fail;
        r.detail = "user " + std::to_string(i) + ": " + std::to_string(blocked) + " blocked, bound " +
                   std::to_string(mass + 1.0);
        return r;
      }
    }
  }
  return r;
}

CheckResult coefficient_order(const BqcProblem& eq, const BqcProblem& uneq) {
  CheckResult r{"unequal_coefficients_below_equal", CheckStatus::pass, ""};
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (std::size_t j = 0; j < eq.size(); ++j) {
      if (uneq.coeff(i, j) > eq.coeff(i, j)) {
        r.status = CheckStatus::fail;
        r.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return r;
      }
    }
  }
  return r;
}

void admission_checks(const std::string& label, const BqcProblem& p, const VerifyOptions& opt,
                      std::vector<CheckResult>& out) {
  const AdmissionResult res = solve(p);
  out.push_back({label + "_admission_feasible",
                 check_bqc_feasible(p, res.x) ? CheckStatus::pass : CheckStatus::fail,
                 "objective " + std::to_string(res.objective)});
  CheckResult sandwich{label + "_sandwich", CheckStatus::skipped, ""};
  try {
    const ExactSelection exact = solve_bqc_exact(p, opt.bqc_budget);
    const bool ok = res.objective <= exact.objective + 1e-9 && exact.objective <= res.upper_bound + 1e-9;
    sandwich.status = ok ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream os;
    os << "heuristic " << res.objective << " <= exact " << exact.objective << " <= bound " << res.upper_bound;
    sandwich.detail = os.str();
  } catch (const BudgetExceeded& e) {
    sandwich.detail = e.what();
  }
  out.push_back(sandwich);
}

}  // namespace

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

VerifyReport verify_scenario(const Scenario& s, const VerifyOptions& opt) {
  s.validate();
  VerifyReport report;
  const DerivedLinks links = derive_links(s);
  report.checks.push_back(sinr_equivalence(s, links, opt));
  report.checks.push_back(blocked_bound(s, links, opt));

  const BqcProblem eq = build_equal(s);
  const BqcProblem uneq = build_unequal(s);
  report.checks.push_back(coefficient_order(eq, uneq));
  admission_checks("equal", eq, opt, report.checks);
  admission_checks("unequal", uneq, opt, report.checks);

  CheckResult sufficiency{"equal_sufficiency", CheckStatus::skipped, ""};
  try {
    const AdmissionResult res = solve(eq);
    const bool found = find_successful_assignment(s, res.x, opt.oracle_budget).has_value();
    sufficiency.status = found ? CheckStatus::pass : CheckStatus::fail;
    sufficiency.detail = found ? "assignment found" : "no assignment satisfies the admitted users";
  } catch (const BudgetExceeded& e) {
    sufficiency.detail = e.what();
  }
  report.checks.push_back(sufficiency);

  // Potential descent on the symmetrized instance.
  {
    const Scenario recip = make_reciprocal(s);
    BinaryVector everyone(s.size(), 1);
    for (std::size_t i = 0; i < s.size(); ++i) everyone[i] = links.infeasible_alone[i] ? 0 : 1;
    SelectionState state = init_random(recip, everyone, opt.seed);
    CheckResult descent{"reciprocal_potential_descent", CheckStatus::pass, ""};
    double before = potential(recip, state.allocation);
    run(recip, state, default_max_rounds(recip), [&](const MoveEvent& ev) {
      const double expected = 2.0 * recip.users[ev.user].power * (ev.omega_before - ev.omega_after);
      const double actual = before - ev.potential;
      if (descent.status == CheckStatus::pass &&
          std::abs(actual - expected) > 1e-9 * std::max(std::abs(expected), 1e-300)) {
        descent.status = CheckStatus::fail;
        descent.detail = "move of user " + std::to_string(ev.user) + " changed potential by " +
                         std::to_string(actual) + ", expected " + std::to_string(expected);
      }
      before = ev.potential;
    });
    if (!state.converged) {
      descent.status = CheckStatus::fail;
      descent.detail = "did not converge";
    } else if (descent.status == CheckStatus::pass) {
      descent.detail = std::to_string(state.moves) + " moves";
    }
    report.checks.push_back(descent);
  }

  CheckResult optimum{"pipeline_below_optimum", CheckStatus::skipped, ""};
  try {
    const ExactAllocation exact = solve_original_exact(s, opt.oracle_budget);
    PipelineOptions po;
    po.seed = opt.seed;
    const PipelineResult res = run_pipeline(s, po);
    optimum.status = res.success.revenue <= exact.objective + 1e-9 ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream os;
    os << "realized " << res.success.revenue << " <= optimum " << exact.objective;
    optimum.detail = os.str();
  } catch (const BudgetExceeded& e) {
    optimum.detail = e.what();
  }
  report.checks.push_back(optimum);
  return report;
}

}  // namespace specalloc
