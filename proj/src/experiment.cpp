#include "specalloc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "specalloc/json_io.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/pipeline.hpp"

namespace specalloc {

namespace {

using Clock = std::chrono::steady_clock;

const std::set<std::string> kStudies{"equal_sets", "maxsat", "maxrev", "neighbor"};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a, stable across platforms unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "NA"; }

struct Accumulator {
  std::size_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    ++count;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double stderr_() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(count));
  }
};

GenConfig study_generator(const ExperimentConfig& cfg, const std::string& study, std::size_t n, std::uint64_t seed) {
  GenConfig g = cfg.generator;
  g.user_count = n;
  g.seed = seed;
  if (study == "equal_sets") {
    g.channel_set_mode = ChannelSetMode::equal;
    g.channel_universe = cfg.equal_channels;
    g.revenue_mode = RevenueMode::max_sat;
  } else {
    g.channel_set_mode = ChannelSetMode::uniform;
    g.revenue_mode = study == "maxrev" ? RevenueMode::max_revenue : RevenueMode::max_sat;
  }
  return g;
}

RunRow evaluate(const ExperimentConfig& cfg, const std::string& study, const Scenario& scenario,
                const TransformSpec& transform, std::uint64_t seed, RevenueMode revenue) {
  PipelineOptions opts;
  opts.transform = transform;
  opts.seed = splitmix64(seed ^ 0x5e1ec7ULL);
  const PipelineResult res = run_pipeline(scenario, opts);

  RunRow row;
  row.study = study;
  row.transform = transform.to_string();
  row.objective = to_string(revenue);
  row.seed = seed;
  row.n = scenario.size();
  row.heuristic = res.admission.objective;
  row.upper_bound = res.admission.upper_bound;
  for (auto v : res.admission.x) row.admitted += v;
  row.satisfied = res.success.satisfied_count;
  row.revenue_realized = res.success.revenue;
  row.successful = res.success.successful;
  row.converged = res.selection.converged;
  row.t_transform = res.times.transform_s;
  row.t_admission = res.times.admission_s;
  row.t_selection = res.times.selection_s;

  if (scenario.size() <= cfg.oracle_max_n) {
    try {
      const auto t0 = Clock::now();
      row.exact_bqc = solve_bqc_exact(res.problem, cfg.bqc_budget).objective;
      row.t_exact_bqc = std::chrono::duration<double>(Clock::now() - t0).count();
    } catch (const BudgetExceeded&) {
    }
    try {
      const auto t0 = Clock::now();
      row.exact_original = solve_original_exact(scenario, cfg.oracle_budget).objective;
      row.t_exact_original = std::chrono::duration<double>(Clock::now() - t0).count();
    } catch (const BudgetExceeded&) {
    }
  }
  return row;
}

void write_run_csv(const std::filesystem::path& path, const std::vector<const RunRow*>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "seed,n,transform,objective,objective_exact_original,objective_exact_bqc,objective_heuristic,"
         "upper_bound,admitted,satisfied_after_selection,revenue_realized,successful,converged\n";
  for (const RunRow* r : rows) {
    out << r->seed << ',' << r->n << ',' << r->transform << ',' << r->objective << ',' << fmt(r->exact_original)
        << ',' << fmt(r->exact_bqc) << ',' << fmt(r->heuristic) << ',' << fmt(r->upper_bound) << ','
        << r->admitted << ',' << r->satisfied << ',' << fmt(r->revenue_realized) << ',' << (r->successful ? 1 : 0)
        << ',' << (r->converged ? 1 : 0) << '\n';
  }
}

}  // namespace

bool RunRow::invariants_hold() const {
  constexpr double tol = 1e-9;
  if (satisfied > admitted) return false;
  if (exact_bqc) {
    if (heuristic > *exact_bqc + tol) return false;
    if (*exact_bqc > upper_bound + tol) return false;
  }
  return heuristic <= upper_bound + tol;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"seed", "trials", "n_values", "studies", "neighbor_counts",
                                           "oracle_max_n", "oracle_budget", "bqc_budget", "equal_channels",
                                           "generator"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("experiment config: unknown field '" + key + "'");
  }
  ExperimentConfig c;
  c.seed = j.value("seed", c.seed);
  c.trials = j.value("trials", c.trials);
  c.n_values = j.value("n_values", c.n_values);
  c.studies = j.value("studies", c.studies);
  c.neighbor_counts = j.value("neighbor_counts", c.neighbor_counts);
  c.oracle_max_n = j.value("oracle_max_n", c.oracle_max_n);
  if (j.contains("oracle_budget")) c.oracle_budget = static_cast<std::uint64_t>(j["oracle_budget"].get<double>());
  if (j.contains("bqc_budget")) c.bqc_budget = static_cast<std::uint64_t>(j["bqc_budget"].get<double>());
  c.equal_channels = j.value("equal_channels", c.equal_channels);
  if (j.contains("generator")) c.generator = j["generator"].get<GenConfig>();
  c.validate();
  return c;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("experiment config: trials must be >= 1");
  if (n_values.empty()) throw std::invalid_argument("experiment config: n_values must not be empty");
  for (auto n : n_values) {
    if (n < 1) throw std::invalid_argument("experiment config: n_values entries must be >= 1");
  }
  for (const auto& s : studies) {
    if (!kStudies.contains(s)) throw std::invalid_argument("experiment config: unknown study '" + s + "'");
  }
  for (double x : neighbor_counts) {
    if (!(x >= 0.0)) throw std::invalid_argument("experiment config: neighbor_counts must be >= 0");
  }
  if (equal_channels < 1) throw std::invalid_argument("experiment config: equal_channels must be >= 1");
}

std::uint64_t trial_seed(std::uint64_t base, const std::string& study, std::size_t n, std::size_t trial) {
  return splitmix64(splitmix64(splitmix64(base ^ fnv1a(study)) + n) + trial);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  for (const std::string& study : config.studies) {
    for (const std::size_t n : config.n_values) {
      for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint64_t seed = trial_seed(config.seed, study, n, t);
        const GenConfig gen = study_generator(config, study, n, seed);
        const Scenario scenario = generate(gen);
        if (study == "neighbor") {
          PipelineOptions opts;
          opts.seed = splitmix64(seed ^ 0x5e1ec7ULL);
          opts.transform.kind = TransformKind::unequal;
          const PipelineResult base = run_pipeline(scenario, opts);
          for (const double x : config.neighbor_counts) {
            opts.transform = {TransformKind::neighbor, x, gen.density};
            const PipelineResult lim = run_pipeline(scenario, opts);
            NeighborRow row;
            row.seed = seed;
            row.n = n;
            row.neighbors = x;
            for (auto v : base.admission.x) row.baseline_admitted += v;
            for (auto v : lim.admission.x) row.limited_admitted += v;
            row.baseline_satisfied = base.success.satisfied_count;
            row.limited_satisfied = lim.success.satisfied_count;
            report.neighbor_runs.push_back(row);
          }
          continue;
        }
        std::vector<TransformSpec> transforms;
        if (study == "equal_sets") transforms.push_back({TransformKind::equal, 0.0, gen.density});
        transforms.push_back({TransformKind::unequal, 0.0, gen.density});
        for (const auto& tr : transforms) {
          RunRow row = evaluate(config, study, scenario, tr, seed, gen.revenue_mode);
          if (!row.invariants_hold()) ++report.invariant_violations;
          report.runs.push_back(std::move(row));
        }
      }
    }
  }

  // Aggregates keyed by (study, transform, n) in first-seen order.
  std::vector<std::tuple<std::string, std::string, std::size_t>> keys;
  std::map<std::tuple<std::string, std::string, std::size_t>, std::map<std::string, Accumulator>> acc;
  const char* metric_order[] = {"objective_heuristic", "upper_bound",   "objective_exact_bqc",
                                "objective_exact_original", "admitted", "satisfied_after_selection",
                                "revenue_realized", "satisfaction_gap", "success_rate"};
  std::map<std::tuple<std::string, std::string, std::size_t>, std::size_t> trials;
  for (const RunRow& r : report.runs) {
    const auto key = std::make_tuple(r.study, r.transform, r.n);
    if (!acc.contains(key)) keys.push_back(key);
    auto& m = acc[key];
    ++trials[key];
    m["objective_heuristic"].add(r.heuristic);
    m["upper_bound"].add(r.upper_bound);
    if (r.exact_bqc) m["objective_exact_bqc"].add(*r.exact_bqc);
    if (r.exact_original) m["objective_exact_original"].add(*r.exact_original);
    m["admitted"].add(static_cast<double>(r.admitted));
    m["satisfied_after_selection"].add(static_cast<double>(r.satisfied));
    m["revenue_realized"].add(r.revenue_realized);
    if (r.admitted > 0) {
      m["satisfaction_gap"].add(static_cast<double>(r.admitted - r.satisfied) / static_cast<double>(r.admitted));
    }
    m["success_rate"].add(r.successful ? 1.0 : 0.0);
  }
  for (const auto& key : keys) {
    for (const char* metric : metric_order) {
      const auto it = acc[key].find(metric);
      if (it == acc[key].end()) continue;
      report.aggregates.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), trials[key], metric,
                                   it->second.count, it->second.mean(), it->second.stderr_()});
    }
  }
  return report;
}

std::vector<std::filesystem::path> write_reports(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  std::vector<std::string> studies;
  std::map<std::string, std::vector<const RunRow*>> by_study;
  for (const RunRow& r : report.runs) {
    if (!by_study.contains(r.study)) studies.push_back(r.study);
    by_study[r.study].push_back(&r);
  }
  for (const auto& study : studies) {
    const auto path = dir / ("runs_" + study + ".csv");
    write_run_csv(path, by_study[study]);
    written.push_back(path);
  }

  {
    const auto path = dir / "aggregate.csv";
    std::ofstream out(path);
    out << "study,transform,n,trials,metric,count,mean,stderr\n";
    for (const auto& a : report.aggregates) {
      out << a.study << ',' << a.transform << ',' << a.n << ',' << a.trials << ',' << a.metric << ',' << a.count
          << ',' << fmt(a.mean) << ',' << fmt(a.stderr_) << '\n';
    }
    written.push_back(path);
  }

  if (!report.neighbor_runs.empty()) {
    const auto path = dir / "runs_neighbor.csv";
    std::ofstream out(path);
    out << "seed,n,neighbors,baseline_admitted,baseline_satisfied,limited_admitted,limited_satisfied\n";
    std::vector<std::pair<std::size_t, double>> keys;
    std::map<std::pair<std::size_t, double>, std::pair<Accumulator, Accumulator>> acc;
    for (const auto& r : report.neighbor_runs) {
      out << r.seed << ',' << r.n << ',' << fmt(r.neighbors) << ',' << r.baseline_admitted << ','
          << r.baseline_satisfied << ',' << r.limited_admitted << ',' << r.limited_satisfied << '\n';
      const auto key = std::make_pair(r.n, r.neighbors);
      if (!acc.contains(key)) keys.push_back(key);
      acc[key].first.add(static_cast<double>(r.baseline_satisfied));
      acc[key].second.add(static_cast<double>(r.limited_satisfied));
    }
    written.push_back(path);

    const auto agg_path = dir / "neighbor_aggregate.csv";
    std::ofstream agg(agg_path);
    agg << "n,neighbors,trials,mean_baseline_satisfied,mean_limited_satisfied,percent_of_baseline\n";
    for (const auto& key : keys) {
      const auto& [b, l] = acc[key];
      const double pct = b.mean() > 0.0 ? 100.0 * l.mean() / b.mean() : 0.0;
      agg << key.first << ',' << fmt(key.second) << ',' << b.count << ',' << fmt(b.mean()) << ',' << fmt(l.mean())
          << ',' << fmt(pct) << '\n';
    }
    written.push_back(agg_path);
  }

  {
    const auto path = dir / "timing.csv";
    std::ofstream out(path);
    out << "study,transform,seed,n,t_transform_s,t_admission_s,t_selection_s,t_exact_bqc_s,t_exact_original_s\n";
    for (const RunRow& r : report.runs) {
      out << r.study << ',' << r.transform << ',' << r.seed << ',' << r.n << ',' << fmt(r.t_transform) << ','
          << fmt(r.t_admission) << ',' << fmt(r.t_selection) << ',' << fmt(r.t_exact_bqc) << ','
          << fmt(r.t_exact_original) << '\n';
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace specalloc
