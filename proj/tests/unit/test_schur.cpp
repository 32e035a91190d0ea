#include <doctest.h>

#include "btau/checks.hpp"
#include "btau/schur.hpp"
#include "support.hpp"

using namespace btau;

namespace {

GradedPoly v(const RingPtr& r, const char* name, int power = 1) { return GradedPoly::variable(r, name, power); }

}  // namespace

TEST_CASE("elementary Schur polynomials") {
  const RingPtr r = make_boson_ring(Caps{4, 2, 0});
  CHECK(elementary_schur(0, kMinusX, r) == GradedPoly::constant(r, 1));
  CHECK(elementary_schur(0, kPlusXY, r) == GradedPoly::constant(r, 1));
  CHECK(elementary_schur(-1, kMinusX, r).is_zero());
  CHECK(elementary_schur(2, kMinusX, r) == v(r, "x1", 2) * ratio(1, 2) - v(r, "x2"));
  CHECK(elementary_schur(1, kMinusXY, r) == -(v(r, "x1") + v(r, "y1")));
  CHECK(elementary_schur(1, kPlusXY, r) == v(r, "x1") + v(r, "y1"));
}

TEST_CASE("Jacobi-Trudi determinants in power sums") {
  const RingPtr t = make_power_sum_ring(4);
  const GradedPoly t1 = v(t, "t1"), t2 = v(t, "t2"), t3 = v(t, "t3");
  const GradedPoly s1 = elementary_schur(1, kPowerSum, t), s2 = elementary_schur(2, kPowerSum, t);

  CHECK(schur_lambda(Partition({3}), kPowerSum, t) == elementary_schur(3, kPowerSum, t));
  CHECK(schur_lambda(Partition({1, 1}), kPowerSum, t) == t1 * t1 * ratio(1, 2) - t2);
  CHECK(schur_lambda(Partition({1, 1}), kPowerSum, t) == s1 * s1 - s2);
  CHECK(schur_lambda(Partition({2, 1}), kPowerSum, t) == t1 * t1 * t1 * ratio(1, 3) - t3);
  CHECK(schur_lambda(Partition(), kPowerSum, t) == GradedPoly::constant(t, 1));
}

TEST_CASE("partitions reject malformed parts") {
  CHECK(error_message([] { Partition({1, 2}); }) == "partition parts must be weakly decreasing");
  CHECK(error_message([] { Partition({2, 0}); }) == "partition parts must be positive");
  CHECK(Partition({3, 1, 1}).weight() == 5);
}

TEST_CASE("the starred series") {
  const RingPtr r = make_boson_ring(Caps{4, 2, 0});
  CHECK(sstar(0, r) == GradedPoly::constant(r, 1));
  CHECK(sstar(-2, r).is_zero());
  const GradedPoly x1 = v(r, "x1"), y1 = v(r, "y1");
  CHECK(sstar(1, r) == -(x1 * (x1 + y1) + v(r, "x2") * Rational(2)));
}

TEST_CASE("Schur generating functions and determinant identities") {
  CHECK(check_schur_generating_function(8).pass);
  CHECK(check_binomial_convention(8).pass);
  CHECK(check_schur_cancellation(8).pass);
  CHECK(check_schur_shift(8).pass);
  CHECK(check_jacobi_trudi(6).pass);
  CHECK(check_sstar(6).pass);
}
