#include <doctest.h>

#include <functional>

#include "btau/checks.hpp"
#include "btau/laurent.hpp"

using namespace btau;

namespace {

// Number of partitions of n, by direct recursion over the largest part.
long partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += partitions(n - p, p);
  return total;
}

GradedPoly v(const RingPtr& r, const char* name, int power = 1) { return GradedPoly::variable(r, name, power); }

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(ratio(2, 4) == ratio(1, 2));
  CHECK(to_string(ratio(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-10/4") == ratio(-5, 2));
  CHECK_THROWS_WITH(ratio(1, 0), "zero denominator");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(factorial(6) == 720);
}

TEST_CASE("q-series arithmetic") {
  CHECK(QSeries(3, {1, -1}).inverse().to_string() == "1,1,1,1");
  CHECK((QSeries(4, {1, 1}) * QSeries(4, {1, -1})).to_string() == "1,0,-1,0,0");
  CHECK_THROWS_WITH(QSeries(3, {0, 1}).inverse(), "non-invertible series");
  CHECK((QSeries(5) + QSeries(3)).order() == 3);

  const QSeries p = q_pochhammer_inf(8).inverse();
  CHECK(p.to_string() == "1,1,2,3,5,7,11,15,22");
  const QSeries longer = q_pochhammer_inf(30).inverse();
  for (int n = 0; n <= 30; ++n) CHECK(longer[n] == partitions(n, n));
}

TEST_CASE("graded polynomial arithmetic and truncation") {
  const RingPtr r = make_boson_ring(Caps{2, 2, 1});
  CHECK((v(r, "x1") * v(r, "x1")).to_string() == "x1^2");
  CHECK((v(r, "x1") * v(r, "x2")).is_zero());
  CHECK(v(r, "p") * v(r, "p", -1) == GradedPoly::constant(r, 1));
  CHECK((v(r, "x1", 2) * ratio(1, 2) + v(r, "x2") - v(r, "p", -1) * v(r, "y1")).to_string() == "1/2*x1^2 + x2 - 1*p^-1*y1");

  const RingPtr other = make_boson_ring(Caps{3, 2, 1});
  CHECK_THROWS_WITH(GradedPoly::variable(other, "x1") + v(r, "x1"), "cap mismatch");
}

TEST_CASE("exponential of nilpotent polynomials") {
  const RingPtr r = make_boson_ring(Caps{3, 1, 0});
  const GradedPoly x1 = v(r, "x1");
  CHECK(poly_exp(x1) == GradedPoly::constant(r, 1) + x1 + x1 * x1 * ratio(1, 2) + x1 * x1 * x1 * ratio(1, 6));
  CHECK(poly_exp(GradedPoly(r)) == GradedPoly::constant(r, 1));
  CHECK_THROWS_WITH(poly_exp(GradedPoly::constant(r, 1)), "non-nilpotent exponent");
  CHECK_THROWS_WITH(poly_exp(v(r, "p")), "non-nilpotent exponent");

  const RingPtr ra = make_boson_ring(Caps{4, 1, 1}, {"a"});
  const GradedPoly axy = v(ra, "a") * v(ra, "x1") * v(ra, "y1");
  CHECK(poly_exp(axy) == GradedPoly::constant(ra, 1) + axy);
}

TEST_CASE("variable shifts and z coefficients") {
  const RingPtr r = make_boson_ring(Caps{3, 1, 0});
  const int x1 = r->index("x1"), x2 = r->index("x2");
  const LaurentPolyZ a = shift_substitute(v(r, "x1"), {{x1, -1, -1}});
  CHECK(a.coeff(0) == v(r, "x1"));
  CHECK(a.coeff(-1) == GradedPoly::constant(r, -1));
  CHECK(shift_substitute(GradedPoly::constant(r, 1), {{x1, -1, -1}}).coeff(0) == GradedPoly::constant(r, 1));
  const LaurentPolyZ b = shift_substitute(v(r, "x2"), {{x2, ratio(-1, 2), -2}});
  CHECK(b.coeff(-2) == GradedPoly::constant(r, ratio(-1, 2)));

  LaurentPolyZ f(r);
  f.add(1, v(r, "x1"));
  f.add(0, GradedPoly::constant(r, 1));
  CHECK(z_coeff(f, 1) == v(r, "x1"));
  CHECK(z_coeff(f, 5).is_zero());
  LaurentPolyZ g(r);
  g.add(-1, v(r, "p"));
  CHECK(z_coeff(g, -1) == v(r, "p"));
}

TEST_CASE("derivatives and the p Euler operator") {
  const RingPtr r = make_boson_ring(Caps{3, 2, 0});
  CHECK(derive(v(r, "x1", 2), r->index("x1")) == v(r, "x1") * Rational(2));
  CHECK(euler(v(r, "p", 2) * v(r, "x1"), r->index("p")) == v(r, "p", 2) * v(r, "x1") * Rational(2));
  CHECK(euler(GradedPoly::constant(r, 1), r->index("p")).is_zero());
}

TEST_CASE("ring axioms, truncation monotonicity and homomorphisms") {
  Rng rng(11);
  CHECK(check_ring_axioms(rng, 1000).pass);
  CHECK(check_truncation_monotone(rng, 200).pass);
  CHECK(check_qseries_inverse(rng, 50, 25).pass);
  CHECK(check_shift_homomorphism(rng, 100).pass);
  CHECK(check_exp_additive(rng, 100).pass);
}
