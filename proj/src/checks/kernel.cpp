#include <functional>

#include "btau/checks.hpp"
#include "btau/schur.hpp"

namespace btau {

namespace {

// Random polynomial with a parameter factor now and then; p-exponents stay
// in [-1, 1] so that triple products remain inside the window.
GradedPoly random_poly(const BosonSpace& space, Rng& rng, int max_degree, int terms, int param) {
  GradedPoly s = random_boson_state(space, rng, max_degree, 1, terms);
  if (param >= 0 && rng() % 2) s = s + GradedPoly::variable(space.ring(), param) * random_boson_state(space, rng, max_degree, 1, 1);
  return s;
}

QSeries random_series(Rng& rng, int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(random_rational(rng));
  return QSeries(order, std::move(c));
}

// Restriction of a polynomial over a larger ring to the caps of `small`.
GradedPoly restrict_to(const GradedPoly& f, const RingPtr& small) {
  const Caps& c = small->caps();
  const Ring& big = *f.ring();
  GradedPoly kept = f.filtered([&](const Monomial& m) {
    if (graded_degree(big, m) > c.degree || parameter_order(big, m) > c.param_order) return false;
    for (int v : big.laurent_indices()) {
      if (std::abs(m.e[static_cast<std::size_t>(v)]) > c.p_window) return false;
    }
    return true;
  });
  return remap(kept, small, name_map(big, *small));
}

// Sum over all m with sum n m_n = k of prod (sign v_n)^{m_n} / m_n!.
GradedPoly explicit_schur(int k, int sign, const std::vector<GradedPoly>& v, const RingPtr& ring) {
  GradedPoly out(ring);
  std::function<void(int, int, GradedPoly)> walk = [&](int n, int left, GradedPoly acc) {
    if (left == 0) {
      out += acc;
      return;
    }
    if (n > left) return;
    GradedPoly term = acc;
    for (int m = 0; m * n <= left; ++m) {
      walk(n + 1, left - m * n, term);
      term = term * v[static_cast<std::size_t>(n)] * ratio(sign, m + 1);
    }
  };
  walk(1, k, GradedPoly::constant(ring, 1));
  return out;
}

}  // namespace

Outcome check_ring_axioms(Rng& rng, int trials) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{6, 3, 2}, {"a"}));
  const int a = space.param("a");
  for (int t = 0; t < trials && o.pass; ++t) {
    const GradedPoly f = random_poly(space, rng, 3, 3, a), g = random_poly(space, rng, 3, 3, a), h = random_poly(space, rng, 3, 3, a);
    o.merge(compare_poly((f * g) * h, f * (g * h)), "poly associativity");
    o.merge(compare_poly(f * (g + h), f * g + f * h), "poly distributivity");
    o.merge(compare_poly(f * g, g * f), "poly commutativity");
    o.merge(compare_poly((f + g) + h, f + (g + h)), "poly additive associativity");
    const QSeries x = random_series(rng, 10), y = random_series(rng, 10), z = random_series(rng, 10);
    o.merge(compare_series((x * y) * z, x * (y * z)), "series associativity");
    o.merge(compare_series(x * (y + z), x * y + x * z), "series distributivity");
    o.merge(compare_series(x * y, y * x), "series commutativity");
  }
  return o;
}

Outcome check_truncation_monotone(Rng& rng, int trials) {
  Outcome o;
  const Caps small_caps{5, 2, 1}, big_caps{7, 3, 2};
  BosonSpace small(make_boson_ring(small_caps, {"a"})), big(make_boson_ring(big_caps, {"a"}));
  const std::vector<int> to_small = name_map(*big.ring(), *small.ring());
  for (int t = 0; t < trials && o.pass; ++t) {
    // Draw in the big ring; the small-ring copies are the truncations.
    const GradedPoly f = random_poly(big, rng, 5, 3, big.param("a")), g = random_poly(big, rng, 5, 3, big.param("a"));
    const GradedPoly fs = restrict_to(f, small.ring()), gs = restrict_to(g, small.ring());
    o.merge(compare_poly(restrict_to(f * g, small.ring()), fs * gs), "product");
    o.merge(compare_poly(restrict_to(f + g, small.ring()), fs + gs), "sum");
  }
  return o;
}

Outcome check_qseries_inverse(Rng& rng, int trials, int order) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    QSeries a = random_series(rng, order);
    if (a[0] == 0) a = a + QSeries::one(order);
    const QSeries inv = a.inverse();
    o.merge(compare_series(a * inv, QSeries::one(order)), "right inverse");
    o.merge(compare_series(inv * a, QSeries::one(order)), "left inverse");
  }
  return o;
}

Outcome check_shift_homomorphism(Rng& rng, int trials) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{6, 3, 0}));
  std::vector<VarShift> shifts;
  for (int n = 1; n <= 6; ++n) {
    shifts.push_back({space.x_var(n), ratio(-1, n), -n});
    shifts.push_back({space.y_var(n), ratio(1, n), -n});
  }
  for (int t = 0; t < trials && o.pass; ++t) {
    const GradedPoly f = random_boson_state(space, rng, 3, 1, 3), g = random_boson_state(space, rng, 3, 1, 3);
    const LaurentPolyZ lhs = shift_substitute(f * g, shifts);
    const LaurentPolyZ rhs = shift_substitute(f, shifts) * shift_substitute(g, shifts);
    for (int k = std::min(lhs.min_exp(), rhs.min_exp()); k <= std::max(lhs.max_exp(), rhs.max_exp()); ++k) {
      o.merge(compare_poly(lhs.coeff(k), rhs.coeff(k)), "z^" + std::to_string(k));
    }
  }
  return o;
}

Outcome check_exp_additive(Rng& rng, int trials) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{6, 3, 2}, {"a"}));
  const GradedPoly av = GradedPoly::variable(space.ring(), space.param("a"));
  for (int t = 0; t < trials && o.pass; ++t) {
    // Nilpotent: drop the constant term, multiply a p^0 part by the parameter.
    auto draw = [&] {
      GradedPoly s = random_boson_state(space, rng, 4, 0, 3);
      s = s - GradedPoly::constant(space.ring(), s.constant_term());
      return s + av * random_boson_state(space, rng, 2, 1, 2);
    };
    const GradedPoly x = draw(), y = draw();
    o.merge(compare_poly(poly_exp(x + y), poly_exp(x) * poly_exp(y)), "exp(a+b)");
  }
  return o;
}

Outcome check_schur_generating_function(int degree) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{degree, 1, 0}));
  const RingPtr pring = make_power_sum_ring(degree);
  struct Case {
    const char* name;
    ArgSignature sig;
    RingPtr ring;
  };
  const Case cases[] = {{"S(-x)", kMinusX, space.ring()},
                        {"S(x+y)", kPlusXY, space.ring()},
                        {"S(-x-y)", kMinusXY, space.ring()},
                        {"S(t)", kPowerSum, pring}};
  for (const auto& c : cases) {
    std::vector<GradedPoly> v(static_cast<std::size_t>(degree) + 1, GradedPoly(c.ring));
    for (int n = 1; n <= degree; ++n) {
      if (c.sig.convention == Convention::power_sum) {
        v[n] = GradedPoly::variable(c.ring, "t" + std::to_string(n));
      } else {
        v[n] = GradedPoly::variable(c.ring, space.x_var(n));
        if (c.sig.uses_y) v[n] += GradedPoly::variable(c.ring, space.y_var(n));
      }
    }
    const auto series = elementary_schur_series(degree, c.sig, c.ring);
    for (int k = 0; k <= degree; ++k) {
      o.merge(compare_poly(series[k], explicit_schur(k, c.sig.sign, v, c.ring)), std::string(c.name) + " k=" + std::to_string(k));
    }
    if (!elementary_schur(-1, c.sig, c.ring).is_zero()) o.fail(std::string(c.name) + ": S_{-1} is not zero");
  }
  return o;
}

Outcome check_binomial_convention(int order) {
  Outcome o;
  for (int m = 0; m <= 6; ++m) {
    std::vector<Rational> lhs;
    for (int j = 0; j <= order; ++j) lhs.push_back(binomial(m + j, m));
    const QSeries one_minus = QSeries(order, {1, -1});
    QSeries power = QSeries::one(order);
    for (int r = 0; r <= m; ++r) power = power * one_minus;
    o.merge(compare_series(QSeries(order, lhs), power.inverse()), "m=" + std::to_string(m));
  }
  return o;
}

Outcome check_schur_cancellation(int degree) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{degree, 1, 0}));
  for (int n = 1; n <= degree; ++n) {
    GradedPoly lhs = space.zero();
    for (int i = 1; i <= n; ++i) lhs += GradedPoly::variable(space.ring(), space.x_var(i), 1, i) * space.s_minus_x(n - i);
    o.merge(compare_poly(lhs, space.s_minus_x(n) * Rational(-n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome check_schur_shift(int degree) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{degree, 1, 0}));
  std::vector<VarShift> shifts;
  for (int k = 1; k <= degree; ++k) shifts.push_back({space.x_var(k), ratio(-1, k), -k});
  for (int n = 0; n <= degree; ++n) {
    const LaurentPolyZ shifted = shift_substitute(space.s_minus_x(n), shifts);
    for (int i = 0; i <= n; ++i) {
      o.merge(compare_poly(shifted.coeff(-(n - i)), space.s_minus_x(i)), "n=" + std::to_string(n) + " z^" + std::to_string(i - n));
    }
    for (const auto& [k, c] : shifted.terms()) {
      if (k > 0 || k < -n) o.fail("n=" + std::to_string(n) + ": unexpected z^" + std::to_string(k));
    }
  }
  return o;
}

Outcome check_jacobi_trudi(int degree) {
  Outcome o;
  const RingPtr ring = make_power_sum_ring(degree);
  std::function<void(std::vector<int>, int, int)> walk = [&](std::vector<int> parts, int left, int max_part) {
    if (!parts.empty()) {
      const Partition lambda(parts);
      const GradedPoly s = schur_lambda(lambda, kPowerSum, ring);
      std::string name = "(";
      for (int p : parts) name += std::to_string(p) + ",";
      name.back() = ')';
      if (s.is_zero()) o.fail(name + ": zero");
      for (const auto& t : s.terms()) {
        if (graded_degree(*ring, t.mono) != lambda.weight()) {
          o.fail(name + ": term " + monomial_to_string(*ring, t.mono) + " not of degree " + std::to_string(lambda.weight()));
          break;
        }
      }
      if (parts.size() == 1) o.merge(compare_poly(s, elementary_schur(parts[0], kPowerSum, ring)), name);
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      auto next = parts;
      next.push_back(p);
      walk(next, left - p, p);
    }
  };
  walk({}, std::min(degree, 6), std::min(degree, 6));
  const GradedPoly s1 = elementary_schur(1, kPowerSum, ring), s2 = elementary_schur(2, kPowerSum, ring);
  o.merge(compare_poly(schur_lambda(Partition({1, 1}), kPowerSum, ring), s1 * s1 - s2), "(1,1)");
  return o;
}

Outcome check_sstar(int degree) {
  Outcome o;
  BosonSpace space(make_boson_ring(Caps{std::max(degree, 2), 2, 0}));
  const RingPtr& r = space.ring();
  const GradedPoly x1 = GradedPoly::variable(r, space.x_var(1)), y1 = GradedPoly::variable(r, space.y_var(1));
  const GradedPoly x2 = GradedPoly::variable(r, space.x_var(2));
  o.merge(compare_poly(sstar(0, r), space.one()), "S*_0");
  o.merge(compare_poly(sstar(1, r), -(x1 * (x1 + y1) + x2 * Rational(2))), "S*_1");
  o.merge(compare_poly(space.apply(Mode::phistar(-1), space.one()), -(space.p_power(1) * sstar(1, r))), "phistar[-1].1");
  if (!sstar(-1, r).is_zero()) o.fail("S*_{-1} is not zero");
  return o;
}

}  // namespace btau
