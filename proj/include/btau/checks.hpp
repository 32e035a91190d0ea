#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "btau/detperm.hpp"
#include "btau/fms.hpp"
#include "btau/hirota.hpp"
#include "btau/qdim.hpp"
#include "btau/qseries.hpp"

namespace btau {

using Rng = std::mt19937_64;

/// Result of one verification: pass/fail, the first failing term, and an
/// optional structured payload for reports.
struct Outcome {
  bool pass = true;
  std::string witness;
  nlohmann::json detail;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  /// Folds another outcome in, prefixing its witness.
  void merge(const Outcome& o, const std::string& context);
};

/// Deterministic per-check seed.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& id);

// Comparison helpers; each returns a witness for the first mismatch.
Outcome compare_poly(const GradedPoly& lhs, const GradedPoly& rhs);
/// Asserts every term of degree <= max_degree vanishes.
Outcome expect_zero_through(const GradedPoly& f, int max_degree);
Outcome compare_series(const QSeries& lhs, const QSeries& rhs);
Outcome compare_fock(const FockVector& lhs, const FockVector& rhs);
Outcome compare_tensor(const FockTensor& lhs, const FockTensor& rhs);

// Random data.
Rational random_rational(Rng& rng, long num_range = 5, long den_max = 4);
/// A nonzero combination of `terms` basis monomials with charge in
/// [min_charge, max_charge] and degree <= max_degree.
FockVector random_fock_vector(Rng& rng, int max_degree, int min_charge, int max_charge, int terms);
/// Random polynomial in x, y, p with xy-degree <= max_degree and p-exponent
/// in [-p_range, p_range]; parameters do not occur.
BosonState random_boson_state(const BosonSpace& space, Rng& rng, int max_degree, int p_range, int terms);

// kernel and schur
Outcome check_ring_axioms(Rng& rng, int trials);
Outcome check_truncation_monotone(Rng& rng, int trials);
Outcome check_qseries_inverse(Rng& rng, int trials, int order);
Outcome check_shift_homomorphism(Rng& rng, int trials);
Outcome check_exp_additive(Rng& rng, int trials);
Outcome check_schur_generating_function(int degree);
Outcome check_binomial_convention(int order);
Outcome check_schur_cancellation(int degree);
Outcome check_schur_shift(int degree);
Outcome check_jacobi_trudi(int degree);
Outcome check_sstar(int degree);

// fock
Outcome check_charge_convention(int order);
Outcome check_fock_commutators(Rng& rng, int trials, int max_degree, int range);
Outcome check_virasoro(Rng& rng, int trials, int max_degree, int range);
Outcome check_heisenberg(Rng& rng, int trials, int max_degree, int range);
Outcome check_grading(Rng& rng, int trials, int max_degree);
Outcome check_hirota_invariance(Rng& rng, int trials, int max_degree, int range);
Outcome check_fock_quadratic_tau(Rng& rng, int trials, int degree);
/// Every nonvacuum basis monomial of degree <= max_degree and charge in
/// [-max_charge, max_charge], plus `trials` random combinations, fails the
/// Hirota equation; the obstruction witness is checked whenever it applies.
Outcome check_vacuum_uniqueness(Rng& rng, int trials, int max_degree, int max_charge);

// fms
Outcome check_field_examples(const Caps& caps);
Outcome check_vacuum_laws(const Caps& caps);
Outcome check_embedding_module_map(Rng& rng, int trials, const Caps& caps, int range);
Outcome check_boson_commutators(Rng& rng, int trials, const Caps& caps, int range);
Outcome check_zero_mode_powers(int nmax, const Caps& caps);
Outcome check_minus1_mode_powers(int nmax, const Caps& caps);
Outcome check_binomial_intermediate(int nmax, int jmax, const Caps& caps);
Outcome check_tau_th1(int smax, const Caps& caps);
Outcome check_tau_th2(int jmax, const Caps& caps);
Outcome check_tau_general(const std::vector<std::pair<int, int>>& st, const Caps& caps);
Outcome check_tau_two_factor(int i, int j, int k, int l, const Caps& caps);
Outcome check_tau_reductions(const Caps& caps);

// hirota
Outcome check_residue_vacuum(const Caps& caps);
Outcome check_residue_mode_equivalence(Rng& rng, int trials, const Caps& caps);
Outcome check_residue_fock_transport(Rng& rng, int trials, const Caps& caps, int max_degree);
Outcome check_residue_quadratic_tau(Rng& rng, int trials, const Caps& caps);
Outcome check_residue_closed_forms(const Caps& caps);
Outcome check_schur_form_solutions(Rng& rng, int points, const Caps& caps);
Outcome check_schur_form_agreement(Rng& rng, int trials, const Caps& caps);
Outcome check_beta_reduction(Rng& rng, int trials, const Caps& caps);
Outcome check_pde_residuals(const Caps& caps);
Outcome check_harmonic_coordinates(Rng& rng, int trials, const Caps& caps);

// qdim
Outcome check_class_gf(int kmax, int smax, int order);
Outcome check_space(Space space, int lmin, int lmax, int order);
Outcome check_identity(Identity id, int lmin, int lmax, int order);
Outcome check_census(int lmax, int order);
nlohmann::json report_json(const QDimReport& r);

// detperm
Outcome check_det_perm_examples();
Outcome check_borchardt(Rng& rng, int n, int trials);
Outcome check_cauchy(Rng& rng, int n, int trials);
/// One Borchardt trial with its full record.
Outcome borchardt_record(const PointConfig& pts);

}  // namespace btau
