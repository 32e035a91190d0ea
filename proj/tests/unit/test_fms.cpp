#include <doctest.h>

#include "btau/checks.hpp"
#include "btau/fms.hpp"
#include "support.hpp"

using namespace btau;

namespace {

GradedPoly v(const RingPtr& r, const char* name, int power = 1) { return GradedPoly::variable(r, name, power); }

}  // namespace

TEST_CASE("field coefficients on the constant state") {
  const BosonSpace space(make_boson_ring(Caps{4, 3, 0}));
  const RingPtr& r = space.ring();
  const GradedPoly p = v(r, "p"), x1 = v(r, "x1"), y1 = v(r, "y1");

  const LaurentPolyZ ps = space.phistar_field(space.one());
  CHECK(ps.coeff(0) == p * x1);
  CHECK(ps.coeff(1) == p * (x1 * x1 + x1 * y1 + v(r, "x2") * Rational(2)));
  CHECK(ps.coeff(-1).is_zero());

  const LaurentPolyZ ph = space.phi_field(space.one());
  CHECK(ph.coeff(0) == v(r, "p", -1));
  CHECK(ph.coeff(1) == -(v(r, "p", -1) * (x1 + y1)));
  CHECK(ph.coeff(-1).is_zero());
}

TEST_CASE("embedding of small Fock vectors") {
  const BosonSpace space(make_boson_ring(Caps{4, 3, 0}));
  const RingPtr& r = space.ring();
  CHECK(space.embed(FockVector::vacuum()) == space.one());
  CHECK(space.embed(FockVector::basis(FockMonomial{{{1, 1}}, {}})) == v(r, "p", -1));
  CHECK(space.embed(FockVector::basis(FockMonomial{{}, {{0, 1}}})) == v(r, "p") * v(r, "x1"));
  const FockVector far = FockVector::basis(FockMonomial{{{1, 4}}, {}});
  CHECK(starts_with(error_message([&] { space.embed(far); }), "truncation overflow"));
  CHECK(space.embed_truncated(far).is_zero());
}

TEST_CASE("powers of the zero and minus-one modes") {
  const BosonSpace space(make_boson_ring(Caps{4, 2, 0}));
  const RingPtr& r = space.ring();
  CHECK(phistar_zero_power(space, 0) == space.one());
  CHECK(phistar_zero_power(space, 1) == v(r, "p") * v(r, "x1"));
  CHECK(phistar_zero_power(space, 2) == v(r, "p", 2) * (v(r, "x1", 2) - v(r, "x2") * Rational(2)));
  CHECK(phistar_minus1_power(space, 0) == space.one());
  CHECK(error_message([&] { phistar_zero_power(space, 3); }) == "p-window overflow");
  CHECK(error_message([&] { phistar_minus1_power(space, 3); }) == "p-window overflow");
}

TEST_CASE("closed-form taus at vanishing parameters and first order") {
  const BosonSpace space(make_boson_ring(Caps{4, 3, 1}, {"a", "c", "d"}));
  const RingPtr& r = space.ring();
  const int a = space.param("a"), c = space.param("c"), d = space.param("d");
  auto at_zero = [&](const GradedPoly& f) { return evaluate(f, {{a, 0}, {c, 0}, {d, 0}}); };

  CHECK(at_zero(tau_th1(space, {a})) == space.one());
  CHECK(at_zero(tau_th2(space, a, 1)) == space.one());
  CHECK(at_zero(tau_two_factor(space, c, d, 1, 1, 1, 0)) == space.one());

  CHECK(tau_th1(space, {a}) == space.one() - v(r, "a") * v(r, "y1"));
  CHECK(tau_th1(space, {a}) == tau_direct(space, {{a, 1, 0}}));
  CHECK(tau_th2(space, a, 1) == tau_direct(space, {{a, 1, 1}}));
  CHECK(tau_general(space, a, 1, 2) == tau_direct(space, {{a, 1, 2}}));
  CHECK(tau_general(space, a, 2, 0) == evaluate(tau_th1(space, {c, a}), {{c, 0}}));
  CHECK(tau_general(space, a, 3, 1) == tau_th2(space, a, 3));
  CHECK(tau_two_factor(space, c, d, 2, 1, 1, 1) == tau_direct(space, {{d, 1, 1}, {c, 2, 1}}));
}

TEST_CASE("vacuum laws, module map and boson commutators") {
  Rng rng(5);
  const Caps caps{6, 4, 3};
  CHECK(check_field_examples(caps).pass);
  CHECK(check_vacuum_laws(caps).pass);
  CHECK(check_embedding_module_map(rng, 30, caps, 3).pass);
  CHECK(check_boson_commutators(rng, 10, caps, 2).pass);
  CHECK(check_zero_mode_powers(4, caps).pass);
  CHECK(check_minus1_mode_powers(3, caps).pass);
  CHECK(check_binomial_intermediate(2, 2, caps).pass);
}

TEST_CASE("closed-form taus agree with direct expansion") {
  const Caps caps{5, 4, 2};
  CHECK(check_tau_th1(2, caps).pass);
  CHECK(check_tau_th2(2, caps).pass);
  CHECK(check_tau_general({{1, 2}, {2, 2}}, caps).pass);
  CHECK(check_tau_two_factor(1, 1, 1, 0, Caps{4, 4, 2}).pass);
  CHECK(check_tau_reductions(caps).pass);
}
