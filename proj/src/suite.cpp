#include "btau/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <thread>

namespace btau {

void RunConfig::validate() const {
  if (degree < 0 || p_window < 0 || param_order < 0 || order < 0) throw Error("caps must be non-negative");
  if (degree > 14) throw Error("degree cap above 14 is not supported");
  if (trials && *trials < 0) throw Error("trials must be non-negative");
  if (n && (*n < 1 || *n > 20)) throw Error("--n must lie in 1..20");
  if (identity) parse_identity(*identity);
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"degree", degree}, {"p_window", p_window}, {"param_order", param_order}, {"order", order}, {"seed", seed}};
  if (trials) j["trials"] = *trials;
  if (l) j["l"] = *l;
  if (n) j["n"] = *n;
  if (identity) j["identity"] = *identity;
  return j;
}

int SuiteReport::passed() const {
  int k = 0;
  for (const auto& c : checks) k += c.outcome.pass ? 1 : 0;
  return k;
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"schur", "fock", "fms", "hirota", "qdim", "borchardt"};
  return names;
}

namespace {

std::vector<Check> schur_suite(const RunConfig& c) {
  const int trials = c.trials.value_or(1000);
  const int few = c.trials.value_or(100);
  const int d = c.degree;
  return {
      {"kernel.ring_axioms", "exact ring axioms for truncated series and polynomials", [=](Rng& r) { return check_ring_axioms(r, trials); }},
      {"kernel.truncation_monotone", "truncation agrees across nested caps", [=](Rng& r) { return check_truncation_monotone(r, few); }},
      {"kernel.qseries_inverse", "two-sided inverse of q-series", [=](Rng& r) { return check_qseries_inverse(r, few, c.order); }},
      {"kernel.shift_homomorphism", "variable shift is a ring homomorphism", [=](Rng& r) { return check_shift_homomorphism(r, few); }},
      {"kernel.exp_additive", "exp(a+b) = exp(a) exp(b) for nilpotent a, b", [=](Rng& r) { return check_exp_additive(r, few); }},
      {"schur.generating_function", "elementary Schur polynomials as exponential coefficients", [=](Rng&) { return check_schur_generating_function(d); }},
      {"schur.binomial_convention", "sum C(k,m) t^(k-m) = (1-t)^(-m-1)", [=](Rng&) { return check_binomial_convention(c.order); }},
      {"schur.cancellation", "sum i x_i S_(n-i)(-x) = -n S_n(-x)", [=](Rng&) { return check_schur_cancellation(d); }},
      {"schur.shift", "shifted S_n(-x) = sum S_i(-x) z^(i-n)", [=](Rng&) { return check_schur_shift(d); }},
      {"schur.jacobi_trudi", "Jacobi-Trudi determinant, homogeneity", [=](Rng&) { return check_jacobi_trudi(d); }},
      {"schur.sstar", "S*_n series and phistar[-1].1", [=](Rng&) { return check_sstar(d); }},
  };
}

std::vector<Check> fock_suite(const RunConfig& c) {
  const int t50 = c.trials.value_or(50), t20 = c.trials.value_or(20), t100 = c.trials.value_or(100);
  const int d = c.degree;
  return {
      {"fock.charge_convention", "charge census of the Fock basis", [](Rng&) { return check_charge_convention(10); }},
      {"fock.commutators", "[phi_i, phistar_j] = delta_(i,-j)", [=](Rng& r) { return check_fock_commutators(r, t50, 6, 4); }},
      {"fock.virasoro", "Virasoro relations of the degree current", [=](Rng& r) { return check_virasoro(r, t50, 6, 3); }},
      {"fock.heisenberg", "Heisenberg relations of the charge current", [=](Rng& r) { return check_heisenberg(r, t50, 6, 4); }},
      {"fock.grading", "charge and degree eigenspaces", [=](Rng& r) { return check_grading(r, t50, 6); }},
      {"fock.hirota_invariance", "Omega commutes with phistar_m phi_n (x) 1 + 1 (x) phistar_m phi_n", [=](Rng& r) { return check_hirota_invariance(r, t20, 4, 3); }},
      {"fock.quadratic_tau", "exp(sum c_ij phistar_-i phi_-j)|0> solves the Hirota equation", [=](Rng& r) { return check_fock_quadratic_tau(r, t20, d); }},
      {"fock.vacuum_uniqueness", "vacuum is the only polynomial solution (degree <= 4)", [=](Rng& r) { return check_vacuum_uniqueness(r, t100, 4, 3); }},
  };
}

std::vector<Check> fms_suite(const RunConfig& c) {
  const Caps caps = c.caps();
  const int t20 = c.trials.value_or(20), t10 = c.trials.value_or(10);
  return {
      {"fms.field_examples", "phi(z), phistar(z) on the vacuum", [=](Rng&) { return check_field_examples(caps); }},
      {"fms.vacuum_laws", "phi_i.1 = phistar_(i+1).1 = 0", [=](Rng&) { return check_vacuum_laws(caps); }},
      {"fms.embedding", "embedding intertwines the mode actions", [=](Rng& r) { return check_embedding_module_map(r, t20, caps, 3); }},
      {"fms.commutators", "[phi_i, phistar_j] = delta_(i,-j) on the boson space", [=](Rng& r) { return check_boson_commutators(r, t10, caps, 3); }},
      {"fms.zero_mode_powers", "phistar_0^n.1 = (-1)^n n! p^n S_n(-x)", [=](Rng&) { return check_zero_mode_powers(6, caps); }},
      {"fms.minus1_mode_powers", "phistar_-1^n.1 = (-1)^n n! p^n S*_n", [=](Rng&) { return check_minus1_mode_powers(5, caps); }},
      {"fms.binomial_intermediate", "phi_-j^n phistar_-1^n.1 binomial expansion", [=](Rng&) { return check_binomial_intermediate(3, 3, caps); }},
      {"fms.tau_th1", "exp(sum a_j phi_-j phistar_0).1 closed form", [=](Rng&) { return check_tau_th1(3, caps); }},
      {"fms.tau_th2", "exp(a phi_-j phistar_-1).1 closed form", [=](Rng&) { return check_tau_th2(3, caps); }},
      {"fms.tau_general", "exp(a phi_-s phistar_-t).1 closed form", [=](Rng&) { return check_tau_general({{1, 2}, {2, 2}}, caps); }},
      {"fms.tau_two_factor", "two-exponential tau closed form", [=](Rng&) { return check_tau_two_factor(1, 1, 1, 0, caps); }},
      {"fms.tau_reductions", "closed forms reduce to one another", [=](Rng&) { return check_tau_reductions(caps); }},
  };
}

std::vector<Check> hirota_suite(const RunConfig& c) {
  const Caps caps = c.caps();
  const int t200 = c.trials.value_or(200), t20 = c.trials.value_or(20);
  return {
      {"hirota.vacuum", "the vacuum solves the residue equation", [=](Rng&) { return check_residue_vacuum(caps); }},
      {"hirota.residue_mode_sum", "residue form equals sum_i phistar_i (x) phi_-i", [=](Rng& r) { return check_residue_mode_equivalence(r, t200, caps); }},
      {"hirota.fock_transport", "residue of embedded vectors equals embedded Omega", [=](Rng& r) { return check_residue_fock_transport(r, t20, caps, 4); }},
      {"hirota.quadratic_tau", "residue of exp(sum c_ij phistar_-i phi_-j).1 vanishes", [=](Rng& r) { return check_residue_quadratic_tau(r, t20, caps); }},
      {"hirota.closed_forms", "residue of the closed-form taus vanishes", [=](Rng&) { return check_residue_closed_forms(caps); }},
      {"hirota.schur_form_solutions", "Schur-expanded bilinear form vanishes on solutions", [=](Rng& r) { return check_schur_form_solutions(r, t20, caps); }},
      {"hirota.schur_form_agreement", "Schur-expanded form equals the residue at points", [=](Rng& r) { return check_schur_form_agreement(r, t20, caps); }},
      {"hirota.beta_reduction", "y-free taus: reduced residual and inheritance", [=](Rng& r) { return check_beta_reduction(r, t20, caps); }},
      {"hirota.pde_residuals", "u(-g_uv + g_vv) + g_u = 0 and f_uu - 2f_uv + f_vv = 0", [=](Rng&) { return check_pde_residuals(caps); }},
      {"hirota.harmonic_coordinates", "f_uu - 2f_uv + f_vv = 4 f_tt with t = u - v, s = u + v", [=](Rng& r) { return check_harmonic_coordinates(r, t20, caps); }},
  };
}

std::vector<Check> qdim_suite(const RunConfig& c) {
  const int n = c.order;
  if (c.identity) {
    const Identity id = parse_identity(*c.identity);
    const int l = c.l.value_or(0);
    return {{"qdim." + identity_name(id), "q-series identity at a single charge", [=](Rng&) { return check_identity(id, l, l, n); }}};
  }
  auto range = [&](int lo, int hi) { return c.l ? std::pair{*c.l, *c.l} : std::pair{lo, hi}; };
  const auto [m_lo, m_hi] = range(-4, 4);
  const auto [i_lo, i_hi] = range(0, 5);
  const auto [e_lo, e_hi] = range(-5, 5);
  const bool nonneg = i_lo >= 0;
  std::vector<Check> out = {
      {"qdim.class_gf", "generating functions of bounded partition classes", [](Rng&) { return check_class_gf(3, 5, 15); }},
      {"qdim.space_M", "q-dimension of M^l: sum form equals closed form", [=](Rng&) { return check_space(Space::M, m_lo, m_hi, n); }},
      {"qdim.space_Fbar", "q-dimension of Fbar^l: sum form equals closed form", [=](Rng&) { return check_space(Space::Fbar, m_lo, m_hi, n); }},
      {"qdim.space_F", "q-dimension of F^l: sum form equals closed form", [=](Rng&) { return check_space(Space::F, m_lo, m_hi, n); }},
  };
  if (nonneg) {
    out.push_back({"qdim.identity-1", "sum q^m/((q)_m (q)_(m+l)) identity", [=](Rng&) { return check_identity(Identity::first, i_lo, i_hi, n); }});
    out.push_back({"qdim.identity-2", "sum q^(m^2+(l+1)m)/((q)_m (q)_(m+l)) identity", [=](Rng&) { return check_identity(Identity::second, i_lo, i_hi, n); }});
    out.push_back({"qdim.corollary", "sum q^m/(...) = (q)_inf^-1 sum q^(m^2+(l+1)m)/(...)", [=](Rng&) { return check_identity(Identity::corollary, i_lo, i_hi, n); }});
  }
  out.push_back({"qdim.euler-family", "sum q^(m^2+m|l|)/((q)_m (q)_(m+|l|)) = 1/(q)_inf", [=](Rng&) { return check_identity(Identity::euler, e_lo, e_hi, n); }});
  out.push_back({"qdim.census", "Fock basis census equals the q-dimension of M^l", [=](Rng&) { return check_census(3, 10); }});
  return out;
}

std::vector<Check> borchardt_suite(const RunConfig& c) {
  std::vector<Check> out = {{"detperm.examples", "determinant and permanent of small matrices", [](Rng&) { return check_det_perm_examples(); }}};
  const int trials = c.trials.value_or(100);
  if (c.n) {
    const int n = *c.n;
    // One record per configuration; configurations come from one stream.
    auto configs = std::make_shared<std::vector<PointConfig>>();
    Rng rng(derive_seed(c.seed, "borchardt.n" + std::to_string(n)));
    for (int t = 0; t < trials; ++t) configs->push_back(random_config(n, rng, 20));
    for (int t = 0; t < trials; ++t) {
      char id[48];
      std::snprintf(id, sizeof id, "borchardt.n%d.t%03d", n, t + 1);
      out.push_back({id, "det(1/(z-w)^2) = det(1/(z-w)) perm(1/(z-w))", [configs, t](Rng&) { return borchardt_record((*configs)[t]); }});
    }
    return out;
  }
  for (int n = 1; n <= 5; ++n) {
    out.push_back({"borchardt.n" + std::to_string(n), "det(1/(z-w)^2) = det(1/(z-w)) perm(1/(z-w))",
                   [=](Rng& r) { return check_borchardt(r, n, trials); }});
  }
  for (int n = 1; n <= 5; ++n) {
    out.push_back({"cauchy.n" + std::to_string(n), "Cauchy determinant product formula", [=](Rng& r) { return check_cauchy(r, n, trials); }});
  }
  return out;
}

}  // namespace

std::vector<Check> suite_checks(const std::string& suite, const RunConfig& config) {
  if (suite == "schur") return schur_suite(config);
  if (suite == "fock") return fock_suite(config);
  if (suite == "fms") return fms_suite(config);
  if (suite == "hirota") return hirota_suite(config);
  if (suite == "qdim") return qdim_suite(config);
  if (suite == "borchardt") return borchardt_suite(config);
  if (suite == "verify-all") {
    std::vector<Check> all;
    for (const auto& name : suite_names()) {
      auto part = suite_checks(name, config);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw Error("unknown suite " + suite);
}

int worker_count() {
  if (const char* env = std::getenv("BTAU_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, int threads) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const Check& c = checks[i];
      CheckResult& r = results[i];
      r.id = c.id;
      r.anchor = c.anchor;
      Rng rng(derive_seed(seed, c.id));
      const auto start = std::chrono::steady_clock::now();
      try {
        r.outcome = c.run(rng);
      } catch (const std::exception& e) {
        r.outcome = Outcome{};
        r.outcome.fail(std::string("error: ") + e.what());
      }
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int k = std::max(1, std::min<int>(threads, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& config, int threads) {
  config.validate();
  SuiteReport report{suite, config, {}};
  report.checks = run_checks(suite_checks(suite, config), config.seed, threads);
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j = {{"id", c.id}, {"anchor", c.anchor}, {"status", c.outcome.pass ? "pass" : "fail"}};
    if (!c.outcome.pass) j["witness"] = c.outcome.witness;
    if (!c.outcome.detail.is_null()) j["detail"] = c.outcome.detail;
    if (report.config.timings) j["ms"] = c.ms;
    checks.push_back(std::move(j));
  }
  nlohmann::json config = report.config.to_json();
  config["suite"] = report.suite;
  return {{"config", config}, {"checks", checks}, {"summary", {{"pass", report.passed()}, {"fail", report.failed()}}}};
}

std::string emit(const SuiteReport& report, bool json) {
  if (json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream out;
  std::size_t width = 2;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  for (const auto& c : report.checks) {
    out << (c.outcome.pass ? "pass  " : "FAIL  ") << c.id << std::string(width - c.id.size() + 2, ' ') << c.anchor;
    if (report.config.timings) out << "  [" << static_cast<long>(c.ms) << " ms]";
    out << "\n";
    if (!c.outcome.pass) out << "      witness: " << c.outcome.witness << "\n";
  }
  out << report.suite << ": " << report.passed() << " passed, " << report.failed() << " failed\n";
  return out.str();
}

}  // namespace btau
