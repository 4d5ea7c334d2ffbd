#pragma once

// Invariant suite run against a single scenario (`specalloc verify`).

#include <cstdint>
#include <string>
#include <vector>

#include "specalloc/model.hpp"
#include "specalloc/oracle.hpp"

namespace specalloc {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t random_allocations = 200;
  std::uint64_t oracle_budget = kDefaultOriginalBudget;
  std::uint64_t bqc_budget = kDefaultBqcBudget;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

VerifyReport verify_scenario(const Scenario& scenario, const VerifyOptions& options = {});

std::string to_string(CheckStatus status);

}  // namespace specalloc
