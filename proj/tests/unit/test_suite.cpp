#include <doctest.h>

#include <json.hpp>

#include "btau/suite.hpp"
#include "support.hpp"

using namespace btau;

namespace {

SuiteReport make_report(std::vector<CheckResult> checks) {
  SuiteReport r;
  r.suite = "custom";
  r.checks = std::move(checks);
  return r;
}

}  // namespace

TEST_CASE("empty report is a valid document") {
  const SuiteReport r = make_report({});
  const auto j = nlohmann::json::parse(emit(r, true));
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j.contains("config"));
  CHECK(r.ok());
  CHECK(emit(r, false) == "custom: 0 passed, 0 failed\n");
}

TEST_CASE("a single passing check yields one pass record") {
  const std::vector<Check> checks{{"one", "an anchor", [](Rng&) { return Outcome{}; }}};
  const SuiteReport r = make_report(run_checks(checks, 0, 1));
  const auto j = nlohmann::json::parse(emit(r, true));
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["id"] == "one");
  CHECK(j["checks"][0]["anchor"] == "an anchor");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK_FALSE(j["checks"][0].contains("ms"));
}

TEST_CASE("an injected failure carries the first mismatch") {
  const std::vector<Check> checks{
      {"series", "anchor",
       [](Rng&) { return compare_series(QSeries(4, {1, 1, 2, 3, 5}), QSeries(4, {1, 1, 2, 4, 5})); }},
      {"poly", "anchor",
       [](Rng&) {
         const RingPtr r = make_boson_ring(Caps{3, 1, 0});
         return compare_poly(GradedPoly::variable(r, "x2"), GradedPoly::variable(r, "x2", 1, 2));
       }},
  };
  const SuiteReport r = make_report(run_checks(checks, 0, 1));
  CHECK(r.failed() == 2);
  const auto j = nlohmann::json::parse(emit(r, true));
  const std::string series_witness = j["checks"][0]["witness"];
  CHECK(series_witness.find("q^3") != std::string::npos);
  const std::string poly_witness = j["checks"][1]["witness"];
  CHECK(poly_witness.find("x2") != std::string::npos);
  CHECK(emit(r, false).find("FAIL  series") != std::string::npos);
}

TEST_CASE("reports are byte-identical across thread counts") {
  RunConfig cfg;
  cfg.json = true;
  cfg.seed = 9;
  cfg.n = 3;
  cfg.trials = 12;
  const std::string one = emit(run_suite("borchardt", cfg, 1), true);
  const std::string four = emit(run_suite("borchardt", cfg, 4), true);
  CHECK(one == four);
  cfg.seed = 10;
  CHECK(emit(run_suite("borchardt", cfg, 2), true) != one);
}

TEST_CASE("every declared check appears in its report") {
  RunConfig cfg;
  cfg.order = 12;
  for (const std::string suite : {"qdim", "borchardt"}) {
    const auto declared = suite_checks(suite, cfg);
    const SuiteReport r = run_suite(suite, cfg, 2);
    REQUIRE(r.checks.size() == declared.size());
    for (std::size_t i = 0; i < declared.size(); ++i) CHECK(r.checks[i].id == declared[i].id);
    CHECK(r.ok());
  }
}

TEST_CASE("configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n = 21;
  CHECK(error_message([&] { cfg.validate(); }) == "--n must lie in 1..20");
  cfg = RunConfig{};
  cfg.degree = 15;
  CHECK(error_message([&] { cfg.validate(); }) == "degree cap above 14 is not supported");
  CHECK(starts_with(error_message([] { suite_checks("nope", RunConfig{}); }), "unknown suite"));
}

TEST_CASE("per-check seeds are stable and distinct") {
  CHECK(derive_seed(0, "a") == derive_seed(0, "a"));
  CHECK(derive_seed(0, "a") != derive_seed(0, "b"));
  CHECK(derive_seed(1, "a") != derive_seed(0, "a"));
}
