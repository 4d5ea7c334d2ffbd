#include "specalloc/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace specalloc {

void to_json(json& j, const Point& p) { j = json::array({p.x, p.y}); }

void from_json(const json& j, Point& p) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("position must be [x, y]");
  p.x = j[0].get<double>();
  p.y = j[1].get<double>();
}

void to_json(json& j, const User& u) {
  j = json{{"tx_position", u.tx_position}, {"rx_position", u.rx_position}, {"power_watts", u.power},
           {"sinr_target_db", u.sinr_target_db}, {"revenue", u.revenue}, {"channels", u.channels}};
}

void from_json(const json& j, User& u) {
  u.tx_position = j.at("tx_position").get<Point>();
  u.rx_position = j.at("rx_position").get<Point>();
  u.power = j.at("power_watts").get<double>();
  u.sinr_target_db = j.at("sinr_target_db").get<double>();
  u.revenue = j.at("revenue").get<double>();
  u.channels = j.at("channels").get<std::vector<Channel>>();
}

void to_json(json& j, const SquareMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto row = m.row(r);
    j.push_back(std::vector<double>(row.begin(), row.end()));
  }
}

void from_json(const json& j, SquareMatrix& m) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t n = j.size();
  m = SquareMatrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c].get<double>();
  }
}

void to_json(json& j, const Scenario& s) {
  j = json{{"channel_count", s.channel_count}, {"noise_watts", s.noise}, {"users", s.users}, {"gain", s.gain}};
}

void from_json(const json& j, Scenario& s) {
  s.channel_count = j.at("channel_count").get<int>();
  s.noise = j.at("noise_watts").get<double>();
  s.users = j.at("users").get<std::vector<User>>();
  s.gain = j.at("gain").get<SquareMatrix>();
  s.validate();
}

void to_json(json& j, const BqcProblem& p) {
  std::vector<std::size_t> forced;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.forced_zero[i]) forced.push_back(i);
  }
  j = json{{"coeff", p.coeff}, {"capacity", p.capacity}, {"revenue", p.revenue}, {"forced_zero", forced}};
}

void from_json(const json& j, BqcProblem& p) {
  p.coeff = j.at("coeff").get<SquareMatrix>();
  p.capacity = j.at("capacity").get<std::vector<int>>();
  p.revenue = j.at("revenue").get<std::vector<double>>();
  p.forced_zero.assign(p.capacity.size(), 0);
  for (const auto i : j.value("forced_zero", std::vector<std::size_t>{})) {
    if (i >= p.forced_zero.size()) throw std::invalid_argument("forced_zero index out of range");
    p.forced_zero[i] = 1;
  }
  p.validate();
}

void to_json(json& j, const Allocation& a) {
  j = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto k = a.channel(i)) {
      j.push_back(*k);
    } else {
      j.push_back(nullptr);
    }
  }
}

void to_json(json& j, const AdmissionResult& r) {
  j = json{{"x", r.x},
           {"lambda", r.lambda},
           {"objective", r.objective},
           {"upper_bound", r.upper_bound},
           {"slack", r.slack},
           {"iterations", r.iterations},
           {"reinserted", r.reinserted}};
}

void to_json(json& j, const AdmissionEvent& e) {
  if (e.kind == AdmissionEvent::Kind::drop) {
    j = json{{"stage", "admission"}, {"event", "drop"}, {"iteration", e.iteration}, {"i_star", e.most_violated},
             {"j_star", e.user}, {"lambda_increment", e.lambda_increment}, {"y", e.y}};
  } else {
    j = json{{"stage", "admission"}, {"event", "reinsert"}, {"attempt", e.iteration}, {"user", e.user},
             {"accepted", e.accepted}};
  }
}

void to_json(json& j, const MoveEvent& e) {
  j = json{{"stage", "selection"},        {"round", e.round},
           {"mover", e.user},             {"from", e.from},
           {"to", e.to},                  {"omega_before", e.omega_before},
           {"omega_after", e.omega_after}, {"potential", e.potential}};
}

void to_json(json& j, const SuccessReport& r) {
  std::vector<std::size_t> satisfied;
  for (std::size_t i = 0; i < r.satisfied.size(); ++i) {
    if (r.satisfied[i]) satisfied.push_back(i);
  }
  j = json{{"successful", r.successful},
           {"transmitting", r.transmitting_count},
           {"satisfied_count", r.satisfied_count},
           {"satisfied", satisfied},
           {"revenue", r.revenue}};
}

void to_json(json& j, const ExactAllocation& r) {
  j = json{{"objective", r.objective}, {"allocation", r.best}, {"explored", r.explored}};
}

void to_json(json& j, const ExactSelection& r) {
  j = json{{"objective", r.objective}, {"x", r.best}, {"explored", r.explored}};
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"sufficient_count", r.sufficient_count},
           {"necessary_count", r.necessary_count},
           {"constant_c", r.constant_c},
           {"approx_constant", r.approx_constant},
           {"opt_exact", r.opt_exact},
           {"opt_bqc", r.opt_bqc},
           {"prop4_lhs", r.prop4_lhs},
           {"necessary_lhs", r.necessary_lhs},
           {"holds_approx", r.holds_approx},
           {"holds_necessary_constant", r.holds_necessary_constant},
           {"holds_set_bound", r.holds_set_bound},
           {"optimum_passes_necessary", r.optimum_passes_necessary}};
}

void to_json(json& j, const GenConfig& c) {
  j = json{{"user_count", c.user_count},
           {"density", c.density},
           {"link_distance_mean", c.link_distance_mean},
           {"link_distance_variance", c.link_distance_variance},
           {"tx_power", c.tx_power},
           {"noise", c.noise},
           {"pathloss_exponent", c.pathloss_exponent},
           {"channel_universe", c.channel_universe},
           {"channel_set_mode", to_string(c.channel_set_mode)},
           {"sinr_targets_db", c.sinr_targets_db},
           {"revenue_mode", to_string(c.revenue_mode)},
           {"seed", c.seed}};
}

void from_json(const json& j, GenConfig& c) {
  static const std::set<std::string> known{"user_count", "density", "link_distance_mean",
                                           "link_distance_variance", "tx_power", "noise",
                                           "pathloss_exponent", "channel_universe", "channel_set_mode",
                                           "sinr_targets_db", "revenue_mode", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("GenConfig: unknown field '" + key + "'");
  }
  c.user_count = j.value("user_count", c.user_count);
  c.density = j.value("density", c.density);
  c.link_distance_mean = j.value("link_distance_mean", c.link_distance_mean);
  c.link_distance_variance = j.value("link_distance_variance", c.link_distance_variance);
  c.tx_power = j.value("tx_power", c.tx_power);
  c.noise = j.value("noise", c.noise);
  c.pathloss_exponent = j.value("pathloss_exponent", c.pathloss_exponent);
  c.channel_universe = j.value("channel_universe", c.channel_universe);
  if (j.contains("channel_set_mode")) c.channel_set_mode = parse_channel_set_mode(j["channel_set_mode"]);
  c.sinr_targets_db = j.value("sinr_targets_db", c.sinr_targets_db);
  if (j.contains("revenue_mode")) c.revenue_mode = parse_revenue_mode(j["revenue_mode"]);
  c.seed = j.value("seed", c.seed);
  c.validate();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

Scenario read_scenario(const std::filesystem::path& path) { return read_json_file(path).get<Scenario>(); }

}  // namespace specalloc
