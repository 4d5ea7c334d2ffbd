// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// Every criterion is evaluated on seeded instances so a failing line can be
// reproduced exactly. Thresholds and instance counts are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "reference.hpp"
#include "specalloc/admission.hpp"
#include "specalloc/bounds.hpp"
#include "specalloc/channel_select.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/pipeline.hpp"
#include "specalloc/scengen.hpp"

using namespace specalloc;

namespace {

// Pinned tolerances.
constexpr double kCmpTol = 1e-9;             // objective comparisons
constexpr double kPotentialRelTol = 1e-9;    // per-move potential drop
constexpr double kQualityGapMax = 0.15;      // mean revenue gap vs optimum
constexpr double kSatisfactionGapMax = 0.05; // mean (admitted - satisfied) / admitted
constexpr double kTimeLimitN18 = 0.1;        // seconds
constexpr double kSlopeTarget = 2.0;
constexpr double kSlopeTol = 0.3;

// Instance counts.
constexpr int kSufficiencyScenarios = 600;
constexpr int kSandwichScenarioProblems = 1000;
constexpr int kSandwichRandomProblems = 3000;
constexpr int kQualityScenarios = 250;
constexpr int kSatisfactionScenarios = 250;
constexpr int kConvergenceScenarios = 1200;
constexpr int kBlockedScenarios = 250;
constexpr int kBlockedAllocationsPerScenario = 5;
constexpr int kBoundScenarios = 250;
constexpr int kFig2Scenarios = 300;
constexpr int kFig7Trials = 100;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t count_ones(const BinaryVector& x) {
  return static_cast<std::size_t>(std::count(x.begin(), x.end(), std::uint8_t{1}));
}

// 1. Every vector feasible under the equal-set constraint has an assignment
// that satisfies all of its users.
void sufficiency() {
  const double densities[] = {1.0 / 800.0, 1.0 / 200.0, 1.0 / 50.0};
  std::size_t vectors = 0, violations = 0, scenarios = 0;
  for (int t = 0; t < kSufficiencyScenarios; ++t) {
    GenConfig g;
    g.user_count = 2 + t % 7;
    g.channel_universe = 1 + (t / 7) % 4;
    g.channel_set_mode = ChannelSetMode::equal;
    g.density = densities[(t / 28) % 3];
    g.seed = 10'000 + static_cast<std::uint64_t>(t);
    const Scenario s = generate(g);
    const BqcProblem p = build_equal(s);
    ++scenarios;
    const std::uint64_t total = std::uint64_t{1} << s.size();
    for (std::uint64_t m = 1; m < total; ++m) {
      const BinaryVector x = ref::mask_to_vector(m, s.size());
      if (!check_bqc_feasible(p, x)) continue;
      ++vectors;
      if (!find_successful_assignment(s, x).has_value()) ++violations;
    }
  }
  report(1, "sufficiency", violations == 0,
         fmt("%zu scenarios (N 2..8, K 1..4), %zu feasible vectors, %zu without a successful assignment",
             scenarios, vectors, violations));
}

// 2. heuristic <= exact BQC optimum <= multiplier bound.
void sandwich() {
  std::size_t total = 0, below = 0, above = 0;
  std::string first;
  auto check = [&](const BqcProblem& p, const std::string& label) {
    const AdmissionResult r = solve(p);
    const double exact = solve_bqc_exact(p).objective;
    ++total;
    const bool lo = r.objective <= exact + kCmpTol;
    const bool hi = exact <= r.upper_bound + kCmpTol;
    below += !lo;
    above += !hi;
    if ((!lo || !hi) && first.empty()) {
      first = fmt("%s: heuristic %g, exact %g, bound %g", label.c_str(), r.objective, exact, r.upper_bound);
    }
  };
  for (int t = 0; t < kSandwichScenarioProblems; ++t) {
    GenConfig g;
    g.user_count = 2 + t % 13;
    g.seed = 20'000 + static_cast<std::uint64_t>(t);
    g.revenue_mode = t % 2 ? RevenueMode::max_revenue : RevenueMode::max_sat;
    g.channel_set_mode = t % 3 == 0 ? ChannelSetMode::equal : ChannelSetMode::uniform;
    g.channel_universe = t % 3 == 0 ? 5 : 10;
    g.density = t % 4 == 0 ? 1.0 / 200.0 : 1.0 / 800.0;
    const Scenario s = generate(g);
    check(t % 2 ? build_unequal(s) : build_equal(s), fmt("scenario seed %d", 20'000 + t));
  }
  // Three random families: dense with small capacities, half-sparse with
  // capacities 2..10, and sparse with coefficients up to 2.
  std::mt19937_64 rng(29);
  for (int t = 0; t < kSandwichRandomProblems; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 13;
    const bool unit = (t / 3) % 2 == 0;
    BqcProblem p;
    switch (t % 3) {
      case 0: p = ref::random_problem(rng, n, 6, 1.0, unit); break;
      case 1: p = ref::random_problem(rng, n, 10, 1.0, unit, 0.5, 2); break;
      default: p = ref::random_problem(rng, n, 4, 2.0, unit, 0.7); break;
    }
    check(p, fmt("random problem %d", t));
  }
  report(2, "sandwich", below == 0 && above == 0,
         fmt("%zu problems (N 2..14), heuristic above optimum %zu, optimum above bound %zu%s%s", total, below, above,
             first.empty() ? "" : "; first: ", first.c_str()));
}

// 3. Mean relative revenue gap between the pipeline and the true optimum.
void quality() {
  double gap_sum = 0.0;
  int n = 0;
  for (int t = 0; t < kQualityScenarios; ++t) {
    GenConfig g;
    g.user_count = 6 + t % 5;
    g.channel_universe = 4;
    g.seed = 30'000 + static_cast<std::uint64_t>(t);
    const Scenario s = generate(g);
    PipelineOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    const double realized = run_pipeline(s, o).success.revenue;
    const double opt = solve_original_exact(s).objective;
    gap_sum += opt > 0.0 ? (opt - realized) / opt : 0.0;
    ++n;
  }
  const double mean = gap_sum / n;
  report(3, "heuristic quality", mean <= kQualityGapMax,
         fmt("mean gap %.2f%% over %d scenarios (N 6..10, K = 4), limit %.0f%%", 100.0 * mean, n,
             100.0 * kQualityGapMax));
}

// 4. Admitted users that end up unsatisfied after channel selection.
void satisfaction() {
  double gap = 0.0, gap_recip = 0.0;
  int n = 0;
  std::size_t not_converged = 0;
  for (int t = 0; t < kSatisfactionScenarios; ++t) {
    GenConfig g;
    g.user_count = 6 + t % 15;
    g.seed = 40'000 + static_cast<std::uint64_t>(t);
    const Scenario s = generate(g);
    PipelineOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    const PipelineResult a = run_pipeline(s, o);
    const PipelineResult b = run_pipeline(make_reciprocal(s), o);
    const std::size_t adm_a = count_ones(a.admission.x), adm_b = count_ones(b.admission.x);
    if (adm_a) gap += static_cast<double>(adm_a - a.success.satisfied_count) / adm_a;
    if (adm_b) gap_recip += static_cast<double>(adm_b - b.success.satisfied_count) / adm_b;
    not_converged += !b.selection.converged;
    ++n;
  }
  gap /= n;
  gap_recip /= n;
  report(4, "satisfaction gap", gap <= kSatisfactionGapMax && gap_recip == 0.0 && not_converged == 0,
         fmt("%d scenarios (N 6..20): non-reciprocal %.3f%% (limit %.0f%%), reciprocal %.3f%% (must be 0), "
             "%zu reciprocal runs unconverged",
             n, 100.0 * gap, 100.0 * kSatisfactionGapMax, 100.0 * gap_recip, not_converged));
}

// 5. Best response on symmetrized gains converges and each move lowers the
// potential by exactly 2 P_i (omega_old - omega_new).
void convergence() {
  std::size_t converged = 0, moves = 0, bad_moves = 0;
  double worst_rel = 0.0;
  for (int t = 0; t < kConvergenceScenarios; ++t) {
    GenConfig g;
    g.user_count = 2 + t % 24;
    g.channel_universe = 2 + t % 9;
    g.density = t % 2 ? 1.0 / 800.0 : 1.0 / 100.0;
    g.seed = 50'000 + static_cast<std::uint64_t>(t);
    const Scenario s = make_reciprocal(generate(g));
    SelectionState st = init_random(s, BinaryVector(s.size(), 1), static_cast<std::uint64_t>(t));
    double prev = potential(s, st.allocation);
    run(s, st, default_max_rounds(s), [&](const MoveEvent& ev) {
      const double expected = 2.0 * s.users[ev.user].power * (ev.omega_before - ev.omega_after);
      const double rel = std::abs((prev - ev.potential) - expected) / expected;
      worst_rel = std::max(worst_rel, rel);
      if (!(expected > 0.0) || rel > kPotentialRelTol) ++bad_moves;
      prev = ev.potential;
      ++moves;
    });
    converged += st.converged;
  }
  report(5, "convergence", converged == kConvergenceScenarios && bad_moves == 0,
         fmt("%zu/%d converged, %zu moves, %zu off by more than %.0e relative (worst %.2e)", converged,
             kConvergenceScenarios, moves, bad_moves, kPotentialRelTol, worst_rel));
}

// 6. Blocked channels at each user against its interference mass.
void blocked_channels() {
  std::size_t pairs = 0, user_checks = 0, violations = 0, nontrivial = 0;
  for (int t = 0; t < kBlockedScenarios; ++t) {
    GenConfig g;
    g.user_count = 3 + t % 14;
    g.channel_universe = 2 + t % 6;
    g.density = t % 2 ? 1.0 / 300.0 : 1.0 / 50.0;
    g.seed = 60'000 + static_cast<std::uint64_t>(t);
    const Scenario s = generate(g);
    const DerivedLinks links = derive_links(s);
    std::mt19937_64 rng(static_cast<std::uint64_t>(t));
    for (int r = 0; r < kBlockedAllocationsPerScenario; ++r) {
      Allocation a(s.size());
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& ch = s.users[j].channels;
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, ch.size())(rng);
        if (pick > 0) a.assign(j, ch[pick - 1]);
      }
      ++pairs;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (links.infeasible_alone[i]) continue;
        double mass = 0.0;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != i && a.transmitting(j)) mass += std::min(links.i_max[i], links.cross(j, i)) / links.i_max[i];
        }
        std::size_t blocked = 0;
        for (Channel k : s.users[i].channels) blocked += interference_omega(s, a, i, k) > links.i_max[i];
        ++user_checks;
        nontrivial += blocked > 0;
        if (!(static_cast<double>(blocked) < mass + 1.0)) ++violations;
      }
    }
  }
  report(6, "blocked-channel bound", violations == 0,
         fmt("%zu (scenario, allocation) pairs, %zu user checks (%zu with blocked channels), %zu violations", pairs,
             user_checks, nontrivial, violations));
}

// 7. OPT / 10 - 1 <= OPT' on geometric equal-set scenarios.
void bounds() {
  std::size_t total = 0, holds = 0, holds_set = 0, nec_ok = 0;
  const double targets[] = {0.0, 6.0, 12.0};
  for (int t = 0; t < kBoundScenarios; ++t) {
    GenConfig g;
    g.user_count = 1 + t % 8;
    g.channel_universe = 1 + t % 3;
    g.channel_set_mode = ChannelSetMode::equal;
    g.sinr_targets_db = {targets[t % 3]};
    g.density = t % 2 ? 1.0 / 800.0 : 1.0 / 30.0;
    g.seed = 70'000 + static_cast<std::uint64_t>(t);
    const BoundReport r = approx_gap_check(generate(g), 4.0);
    ++total;
    holds += r.holds_approx && r.holds_necessary_constant;
    holds_set += r.holds_set_bound;
    nec_ok += r.optimum_passes_necessary;
  }
  report(7, "approximation bound", holds == total,
         fmt("%zu/%zu scenarios (N 1..8, alpha 4) satisfy OPT/10 - 1 <= OPT'; set bound %zu/%zu; optimum meets "
             "necessary constraint %zu/%zu",
             holds, total, holds_set, total, nec_ok, total));
}

// 8. Admission wall time at N = 18 and its growth with N.
double time_solve(const BqcProblem& p, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const AdmissionResult res = solve(p);
    const auto t1 = std::chrono::steady_clock::now();
    if (res.x.size() != p.size()) std::abort();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void performance() {
  double worst18 = 0.0;
  for (int t = 0; t < 20; ++t) {
    GenConfig g;
    g.user_count = 18;
    g.seed = 80'000 + static_cast<std::uint64_t>(t);
    worst18 = std::max(worst18, time_solve(build_unequal(generate(g)), 1));
  }

  const int sizes[] = {50, 100, 200, 400};
  std::vector<double> lx, ly;
  std::string series;
  for (const int n : sizes) {
    // Dense placement so the drop loop does real work at every size.
    std::vector<double> times;
    for (int t = 0; t < 5; ++t) {
      GenConfig g;
      g.user_count = static_cast<std::size_t>(n);
      g.density = 1.0 / 100.0;
      g.seed = 81'000 + static_cast<std::uint64_t>(n * 10 + t);
      times.push_back(time_solve(build_unequal(generate(g)), 15));
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(median));
    series += fmt(" N=%d:%.3gs", n, median);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  report(8, "performance", worst18 < kTimeLimitN18 && std::abs(slope - kSlopeTarget) <= kSlopeTol,
         fmt("worst N=18 solve %.2e s (limit %.1f s); log-log slope %.2f (target %.1f +- %.1f);%s", worst18,
             kTimeLimitN18, slope, kSlopeTarget, kSlopeTol, series.c_str()));
}

// 9. With identical channel sets, unequal-form admissions are sometimes not
// realizable while equal-form admissions always are.
void fig2() {
  std::size_t unreal_eq = 0, unreal_un = 0, total = 0, pipe_fail_eq = 0, pipe_fail_un = 0, differ = 0;
  for (int t = 0; t < kFig2Scenarios; ++t) {
    GenConfig g;
    g.user_count = 4 + t % 12;
    g.channel_universe = 5;
    g.channel_set_mode = ChannelSetMode::equal;
    g.seed = 90'000 + static_cast<std::uint64_t>(t);
    const Scenario s = generate(g);
    const AdmissionResult eq = solve(build_equal(s));
    const AdmissionResult un = solve(build_unequal(s));
    differ += eq.x != un.x;
    unreal_eq += !find_successful_assignment(s, eq.x).has_value();
    unreal_un += !find_successful_assignment(s, un.x).has_value();
    PipelineOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    o.transform.kind = TransformKind::equal;
    pipe_fail_eq += !run_pipeline(s, o).success.successful;
    o.transform.kind = TransformKind::unequal;
    pipe_fail_un += !run_pipeline(s, o).success.successful;
    ++total;
  }
  report(9, "equal-set reproduction", unreal_un > 0 && unreal_eq == 0,
         fmt("%zu scenarios (K = 5, N 4..15): unrealizable admissions unequal %zu, equal %zu; admission vectors "
             "differ in %zu; pipeline allocations unsuccessful unequal %zu, equal %zu",
             total, unreal_un, unreal_eq, differ, pipe_fail_un, pipe_fail_eq));
}

// 10. Satisfied users under neighbor-limited admission, relative to full
// knowledge: above 100% at the smallest N, below at the largest.
void fig7() {
  const std::size_t sizes[] = {4, 8, 12, 18};
  const double neighbors[] = {1.0, 2.0};
  bool pass = true;
  std::string detail;
  for (const double x : neighbors) {
    detail += fmt(" x=%g:", x);
    std::vector<double> ratio;
    for (const std::size_t n : sizes) {
      double base = 0.0, limited = 0.0;
      for (int t = 0; t < kFig7Trials; ++t) {
        GenConfig g;
        g.user_count = n;
        g.seed = 100'000 + n * 1000 + static_cast<std::uint64_t>(t);
        const Scenario s = generate(g);
        PipelineOptions o;
        o.seed = static_cast<std::uint64_t>(t);
        base += run_pipeline(s, o).success.satisfied_count;
        o.transform = TransformSpec{TransformKind::neighbor, x, g.density};
        limited += run_pipeline(s, o).success.satisfied_count;
      }
      ratio.push_back(limited / base);
      detail += fmt(" N=%zu %.1f%%", n, 100.0 * ratio.back());
    }
    pass = pass && ratio.front() > 1.0 && ratio.back() < 1.0;
  }
  report(10, "neighbor-limited reproduction", pass,
         fmt("%d trials per point;%s (need > 100%% at N=4 and < 100%% at N=18)", kFig7Trials, detail.c_str()));
}

}  // namespace

int main() {
  sufficiency();
  sandwich();
  quality();
  satisfaction();
  convergence();
  blocked_channels();
  bounds();
  performance();
  fig2();
  fig7();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
