#pragma once

// JSON encodings of the library's data types.
//
// Scenario document:
//   {
//     "channel_count": K,
//     "noise_watts": sigma2,
//     "users": [ { "tx_position": [x, y], "rx_position": [x, y],
//                  "power_watts": P, "sinr_target_db": beta_db,
//                  "revenue": r, "channels": [1, 3, ...] }, ... ],
//     "gain": [[g_00, g_01, ...], ...]   // row j = transmitter j, column i = receiver i
//   }
//
// BqcProblem document:
//   { "coeff": [[a_00, a_01, ...], ...], "capacity": [...], "revenue": [...], "forced_zero": [indices] }

#include <filesystem>
#include <string>

#include "json.hpp"
#include "specalloc/admission.hpp"
#include "specalloc/bounds.hpp"
#include "specalloc/channel_select.hpp"
#include "specalloc/model.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/scengen.hpp"
#include "specalloc/transform.hpp"

namespace specalloc {

using json = nlohmann::json;

void to_json(json& j, const Point& p);
void from_json(const json& j, Point& p);
void to_json(json& j, const User& u);
void from_json(const json& j, User& u);
void to_json(json& j, const SquareMatrix& m);
void from_json(const json& j, SquareMatrix& m);

// Parsing validates the decoded scenario.
void to_json(json& j, const Scenario& s);
void from_json(const json& j, Scenario& s);

void to_json(json& j, const BqcProblem& p);
void from_json(const json& j, BqcProblem& p);

void to_json(json& j, const Allocation& a);
void to_json(json& j, const AdmissionResult& r);
void to_json(json& j, const AdmissionEvent& e);
void to_json(json& j, const MoveEvent& e);
void to_json(json& j, const SuccessReport& r);
void to_json(json& j, const ExactAllocation& r);
void to_json(json& j, const ExactSelection& r);
void to_json(json& j, const BoundReport& r);

// Missing fields keep their defaults; unknown fields are rejected.
void to_json(json& j, const GenConfig& c);
void from_json(const json& j, GenConfig& c);

json read_json_file(const std::filesystem::path& path);
Scenario read_scenario(const std::filesystem::path& path);

}  // namespace specalloc
