#include <doctest.h>

#include "btau/checks.hpp"
#include "btau/fock.hpp"
#include "support.hpp"

using namespace btau;

namespace {

FockMonomial mono(std::map<int, int> phi, std::map<int, int> phistar) { return FockMonomial{std::move(phi), std::move(phistar)}; }
FockVector vec(std::map<int, int> phi, std::map<int, int> phistar, const Rational& c = 1) {
  return FockVector::basis(mono(std::move(phi), std::move(phistar)), c);
}

}  // namespace

TEST_CASE("monomial text form and counting") {
  const FockMonomial m = mono({{2, 3}}, {{0, 1}});
  CHECK(m.to_string() == "phi[-2]^3 phistar[0]^1 |0>");
  CHECK(m.degree() == 6);
  CHECK(m.charge() == 2);
  CHECK(mono({{2, 1}}, {{1, 1}}).degree() == 3);
}

TEST_CASE("mode action on the vacuum and on creation powers") {
  const FockVector vac = FockVector::vacuum();
  CHECK(apply_mode(Mode::phi(0), vac).is_zero());
  CHECK(apply_mode(Mode::phistar(1), vac).is_zero());
  CHECK(apply_mode(Mode::phi(1), vec({}, {{1, 1}})) == vac);
  CHECK(apply_mode(Mode::phi(1), vec({}, {{1, 2}})) == vec({}, {{1, 1}}, 2));
  CHECK(apply_mode(Mode::phistar(2), vec({{2, 1}}, {})) == vac * Rational(-1));
  CHECK(apply_mode(Mode::phi(-3), vac) == vec({{3, 1}}, {}));
}

TEST_CASE("currents and grading") {
  const FockVector vac = FockVector::vacuum();
  CHECK(apply_current(Current::j0, 0, vac).is_zero());
  CHECK(apply_current(Current::j1, 0, vac).is_zero());
  CHECK(apply_current(Current::j0, 0, vec({{1, 1}}, {})) == vec({{1, 1}}, {}, -1));
  CHECK(apply_current(Current::j0, 0, vec({}, {{0, 1}})) == vec({}, {{0, 1}}));
  const FockVector v = vec({{2, 1}}, {{1, 1}});
  CHECK(apply_current(Current::j1, 0, v) == v * Rational(3));

  const auto g0 = grade(vac);
  REQUIRE(g0.size() == 1);
  CHECK(g0[0].charge == 0);
  CHECK(g0[0].degree == 0);

  const auto g1 = grade(vec({{1, 1}}, {}) + vec({}, {{0, 1}}));
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].charge == -1);
  CHECK(g1[0].degree == 0);
  CHECK(g1[1].charge == 1);
  CHECK(g1[1].degree == 1);

  const auto g2 = grade(vec({{1, 2}}, {{0, 2}}));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].charge == 0);
  CHECK(g2[0].degree == 2);
}

TEST_CASE("the bilinear operator on small vectors") {
  const FockVector vac = FockVector::vacuum();
  CHECK(omega_u(vac, vac).is_zero());

  const FockVector p1 = vec({{1, 1}}, {});
  FockTensor expected;
  expected.add(FockMonomial{}, mono({{1, 2}}, {}), -1);
  CHECK(omega_u(p1, p1) == expected);

  const FockVector tau = tau_quadratic_exp({{{0, 1}, ratio(2, 3)}}, 6);
  CHECK(omega_u(tau, tau).truncated_degree(6).is_zero());
}

TEST_CASE("quadratic exponentials") {
  CHECK(tau_quadratic_exp({}, 4) == FockVector::vacuum());
  const FockVector t = tau_quadratic_exp({{{0, 1}, 1}}, 2);
  CHECK(t == FockVector::vacuum() + vec({{1, 1}}, {{0, 1}}) + vec({{1, 2}}, {{0, 2}}, ratio(1, 2)));
  CHECK(error_message([] { tau_quadratic_exp({{{-1, 1}, 1}}, 2); }) == "index out of creation range");
  CHECK(error_message([] { tau_quadratic_exp({{{0, 0}, 1}}, 2); }) == "index out of creation range");
}

TEST_CASE("obstruction witnesses") {
  const ObstructionWitness w1 = vacuum_obstruction(vec({{1, 1}}, {}));
  CHECK(w1.top_index == 1);
  CHECK(w1.top_power == 1);
  FockTensor expected;
  expected.add(FockMonomial{}, mono({{1, 2}}, {}), -1);
  CHECK(w1.witness == expected);

  CHECK(error_message([] { vacuum_obstruction(FockVector::vacuum()); }) == "no obstruction applicable");

  const FockVector v = vec({{2, 1}}, {{0, 1}}) + FockVector::vacuum();
  const ObstructionWitness w2 = vacuum_obstruction(v);
  CHECK(w2.top_index == 2);
  CHECK(w2.top_power == 1);
  CHECK(project_powers(omega_u(v, v), 2, 0, 2) == w2.witness);
  CHECK_FALSE(w2.witness.is_zero());
}

TEST_CASE("monomial enumeration") {
  CHECK(enumerate_monomials(0, 2).size() == 5);
  for (const auto& m : enumerate_monomials(-2, 5)) {
    CHECK(m.charge() == -2);
    CHECK(m.degree() <= 5);
  }
}

TEST_CASE("Fock space commutators, gradings and Hirota properties") {
  Rng rng(23);
  CHECK(check_charge_convention(10).pass);
  CHECK(check_fock_commutators(rng, 40, 5, 3).pass);
  CHECK(check_virasoro(rng, 20, 4, 2).pass);
  CHECK(check_heisenberg(rng, 20, 4, 3).pass);
  CHECK(check_grading(rng, 50, 6).pass);
  CHECK(check_hirota_invariance(rng, 20, 4, 2).pass);
  CHECK(check_fock_quadratic_tau(rng, 5, 5).pass);
  CHECK(check_vacuum_uniqueness(rng, 20, 3, 2).pass);
}
