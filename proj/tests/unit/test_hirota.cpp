#include <doctest.h>

#include "btau/checks.hpp"
#include "btau/hirota.hpp"
#include "support.hpp"

using namespace btau;

TEST_CASE("the residue operator on the constant state") {
  const BosonSpace base(make_boson_ring(Caps{4, 3, 0}));
  const TensorSpace t(base);
  CHECK(t.omega_residue(base.one(), base.one()).is_zero());
  CHECK(t.mode_sum(base.one(), base.one()).is_zero());
  CHECK(t.omega_residue(base.one(), base.one(), true).is_zero());
  CHECK(error_message([&] { t.omega_residue(base.embed(FockVector::basis(FockMonomial{{}, {{1, 1}}})), base.one(), true); }) ==
        "beta reduction needs y-free input");
}

TEST_CASE("the Schur form vanishes on the constant tau") {
  const BosonSpace base(make_boson_ring(Caps{4, 1, 1}, {"a"}));
  const TensorSpace t(base);
  const HirotaPoint pt{{ratio(1, 2), 3}, {-1, ratio(2, 5)}, {2}, {ratio(-3, 4), 1}};
  CHECK(hirota_schur_form(t, base.one(), pt).is_zero());
}

TEST_CASE("bivariate residuals") {
  const BivariateRing r = make_bivariate_ring(6, {}, 0);
  const GradedPoly u = GradedPoly::variable(r.ring, r.u), w = GradedPoly::variable(r.ring, r.v);
  CHECK(pde_residual_first(GradedPoly(r.ring), r).is_zero());
  CHECK(pde_residual_first(w, r).is_zero());
  for (int k = 0; k <= 6; ++k) CHECK(pde_residual_harmonic(pow(u + w, k), r).is_zero());
  CHECK(pde_residual_harmonic(pow(u - w, 2), r) == GradedPoly::constant(r.ring, 8));
  const GradedPoly f = pow(u, 3) * ratio(2, 3) - u * w * w + pow(w, 4);
  CHECK(pde_residual_harmonic(f, r) == harmonic_via_ts(f, r));
}

TEST_CASE("closed-form taus solve the restricted equations") {
  const BosonSpace base(make_boson_ring(Caps{6, 2, 3}, {"a"}));
  const int a = base.param("a");
  const BivariateRing r = make_bivariate_ring(6, {"a"}, 3);
  const GradedPoly g = restricted_log(tau_th1(base, {a}), r);
  CHECK(expect_zero_through(pde_residual_first(g, r), 4).pass);
  const GradedPoly f = restricted_log(tau_th2(base, a, 1), r);
  CHECK(expect_zero_through(pde_residual_harmonic(f, r), 4).pass);
}

TEST_CASE("residue identities on random and closed-form states") {
  Rng rng(31);
  const Caps caps{5, 3, 2};
  CHECK(check_residue_vacuum(caps).pass);
  CHECK(check_residue_mode_equivalence(rng, 10, caps).pass);
  CHECK(check_residue_fock_transport(rng, 10, caps, 3).pass);
  CHECK(check_residue_quadratic_tau(rng, 3, caps).pass);
  CHECK(check_residue_closed_forms(Caps{5, 3, 2}).pass);
  CHECK(check_schur_form_solutions(rng, 5, Caps{5, 2, 2}).pass);
  CHECK(check_schur_form_agreement(rng, 3, Caps{5, 2, 2}).pass);
  CHECK(check_beta_reduction(rng, 3, caps).pass);
  CHECK(check_pde_residuals(Caps{6, 2, 3}).pass);
  CHECK(check_harmonic_coordinates(rng, 20, Caps{6, 2, 3}).pass);
}
