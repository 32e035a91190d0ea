// btau: batch verification driver.
#include <iostream>

#include <CLI11.hpp>

#include "btau/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for charged free bosons, their tau functions and q-dimensions"};
  app.require_subcommand(1);
  btau::RunConfig config;
  std::string suite;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"schur", "kernel arithmetic and Schur polynomial identities"},
      {"fock", "mode algebra, currents, gradings and vacuum uniqueness"},
      {"fms", "bosonization, embedding and closed-form tau functions"},
      {"hirota", "bilinear residue, Schur-expanded form and PDE residuals"},
      {"qdim", "partition census and q-series identities"},
      {"borchardt", "determinant/permanent identities at random points"},
      {"verify-all", "every suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-D,--degree", config.degree, "xy-degree cap")->capture_default_str();
    sub->add_option("--p-window", config.p_window, "Laurent window for p")->capture_default_str();
    sub->add_option("--param-order", config.param_order, "total order cap of formal parameters")->capture_default_str();
    sub->add_option("-N,--order", config.order, "q-series truncation order")->capture_default_str();
    sub->add_option("--seed", config.seed, "seed for random test data")->capture_default_str();
    sub->add_flag("--json", config.json, "emit the JSON report");
    sub->add_flag("--timings", config.timings, "include wall time per check");
    sub->add_option("--trials", config.trials, "override the number of random samples");
    sub->add_option("--l", config.l, "restrict q-series checks to one charge");
    sub->add_option("--n", config.n, "borchardt: matrix size, one record per trial (1..20)");
    sub->add_option("--identity", config.identity, "qdim: identity-1, identity-2, euler or corollary");
    sub->callback([&suite, name = name] { suite = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    config.validate();
  } catch (const btau::Error& e) {
    std::cerr << "btau: " << e.what() << "\n";
    return 2;
  }
  const btau::SuiteReport report = btau::run_suite(suite, config);
  std::cout << btau::emit(report, config.json);
  return report.ok() ? 0 : 1;
}
