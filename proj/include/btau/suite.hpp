#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "btau/checks.hpp"

namespace btau {

struct RunConfig {
  int degree = 8;
  int p_window = 6;
  int param_order = 3;
  int order = 40;
  std::uint64_t seed = 0;
  bool json = false;
  bool timings = false;
  std::optional<int> trials;
  std::optional<int> l;
  std::optional<int> n;
  std::optional<std::string> identity;

  Caps caps() const { return Caps{degree, p_window, param_order}; }
  /// Throws Error for negative caps or out-of-range selections.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Check {
  std::string id;
  std::string anchor;
  std::function<Outcome(Rng&)> run;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  Outcome outcome;
  double ms = 0;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();
/// Declared checks of a suite ("verify-all" concatenates every suite).
/// Throws Error("unknown suite ...").
std::vector<Check> suite_checks(const std::string& suite, const RunConfig& config);

/// Worker count: BTAU_THREADS when set and positive, else the hardware
/// concurrency.
int worker_count();
/// Runs checks on a worker pool; results keep the declared order and each
/// check draws from its own generator seeded by (seed, id).
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, int threads);
SuiteReport run_suite(const std::string& suite, const RunConfig& config, int threads = worker_count());

nlohmann::json report_to_json(const SuiteReport& report);
std::string emit(const SuiteReport& report, bool json);

}  // namespace btau
