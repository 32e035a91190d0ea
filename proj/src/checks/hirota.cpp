#include <algorithm>

#include "btau/checks.hpp"
#include "btau/schur.hpp"

namespace btau {

namespace {

HirotaPoint random_point(Rng& rng, int n) {
  HirotaPoint pt;
  for (int k = 0; k < n; ++k) {
    pt.x.push_back(random_rational(rng, 3, 2));
    pt.xbar.push_back(random_rational(rng, 3, 2));
    pt.y.push_back(random_rational(rng, 3, 2));
    pt.ybar.push_back(random_rational(rng, 3, 2));
  }
  return pt;
}

// Random p^0 polynomial with constant term 1 and xy-degree <= max_degree.
BosonState random_tau(const BosonSpace& s, Rng& rng, int max_degree, bool x_only) {
  GradedPoly tau = random_boson_state(s, rng, max_degree, 0, 4);
  if (x_only) {
    tau = tau.filtered([&](const Monomial& m) {
      for (int n = 1; n <= s.degree(); ++n) {
        if (m.e[static_cast<std::size_t>(s.y_var(n))] != 0) return false;
      }
      return true;
    });
  }
  return tau - GradedPoly::constant(s.ring(), tau.constant_term() - 1);
}

// Drops every term containing a y variable on either side of the tensor.
GradedPoly drop_y(const GradedPoly& t) {
  const Ring& r = *t.ring();
  return t.filtered([&](const Monomial& m) {
    for (int v = 0; v < r.size(); ++v) {
      if (m.e[static_cast<std::size_t>(v)] != 0 && r.var(v).name[0] == 'y') return false;
    }
    return true;
  });
}

}  // namespace

Outcome check_residue_vacuum(const Caps& caps) {
  BosonSpace s(make_boson_ring(caps));
  TensorSpace ts(s);
  Outcome o = compare_poly(ts.omega_residue(s.one(), s.one()), GradedPoly(ts.ring()));
  o.merge(compare_poly(ts.mode_sum(s.one(), s.one()), GradedPoly(ts.ring())), "mode sum");
  return o;
}

Outcome check_residue_mode_equivalence(Rng& rng, int trials, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  TensorSpace ts(s);
  for (int t = 0; t < trials && o.pass; ++t) {
    const BosonState a = random_boson_state(s, rng, caps.degree, 2, 3);
    const BosonState b = random_boson_state(s, rng, caps.degree, 2, 3);
    o.merge(compare_poly(ts.omega_residue(a, b), ts.mode_sum(a, b)), "pair " + std::to_string(t));
  }
  return o;
}

Outcome check_residue_fock_transport(Rng& rng, int trials, const Caps& caps, int max_degree) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  TensorSpace ts(s);
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -1, 1, 3);
    const BosonState image = s.embed(v);
    o.merge(compare_poly(ts.omega_residue(image, image), ts.embed(omega_u(v, v))), "vector " + std::to_string(t));
  }
  return o;
}

Outcome check_residue_quadratic_tau(Rng& rng, int trials, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  TensorSpace ts(s);
  for (int t = 0; t < trials && o.pass; ++t) {
    std::map<std::pair<int, int>, Rational> c;
    for (int k = 0; k < 3; ++k) c[{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3) + 1}] = random_rational(rng);
    const BosonState tau = s.embed(tau_quadratic_exp(c, caps.degree));
    o.merge(expect_zero_through(ts.omega_residue(tau, tau), caps.degree - 1), "coefficient set " + std::to_string(t));
  }
  return o;
}

Outcome check_residue_closed_forms(const Caps& caps) {
  Outcome o;
  const int reliable = caps.degree - 1;
  {
    BosonSpace s(make_boson_ring(caps, {"a1", "a2"}));
    TensorSpace ts(s);
    const int a1 = s.param("a1"), a2 = s.param("a2");
    const BosonState th1 = tau_th1(s, {a1, a2});
    o.merge(expect_zero_through(ts.omega_residue(th1, th1), reliable), "th1 s=2");
    for (int j = 1; j <= 2; ++j) {
      const BosonState th2 = tau_th2(s, a1, j);
      o.merge(expect_zero_through(ts.omega_residue(th2, th2), reliable), "th2 j=" + std::to_string(j));
    }
    const BosonState g = tau_general(s, a1, 1, 2);
    o.merge(expect_zero_through(ts.omega_residue(g, g), reliable), "general (1,2)");
  }
  {
    BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, std::min(caps.param_order, 2)}, {"c", "d"}));
    TensorSpace ts(s);
    const BosonState tf = tau_two_factor(s, s.param("c"), s.param("d"), 1, 1, 1, 0);
    o.merge(expect_zero_through(ts.omega_residue(tf, tf), reliable), "two-factor (1,1,1,0)");
  }
  return o;
}

Outcome check_schur_form_solutions(Rng& rng, int points, const Caps& caps) {
  Outcome o;
  // th1 with one parameter has xy-degree <= P; the form needs 2 deg tau <= D.
  const int order = std::max(0, std::min(caps.param_order, caps.degree / 2));
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, order}, {"a"}));
  TensorSpace ts(s);
  const BosonState tau = tau_th1(s, {s.param("a")});
  for (int k = 0; k < points && o.pass; ++k) {
    const HirotaPoint pt = random_point(rng, caps.degree);
    o.merge(compare_poly(hirota_schur_form(ts, s.one(), pt), GradedPoly(ts.param_ring())), "tau=1 point " + std::to_string(k));
    o.merge(compare_poly(hirota_schur_form(ts, tau, pt), GradedPoly(ts.param_ring())), "th1 point " + std::to_string(k));
  }
  o.detail = {{"param_order", order}};
  return o;
}

Outcome check_schur_form_agreement(Rng& rng, int trials, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  TensorSpace ts(s);
  int nonzero = 0;
  for (int t = 0; t < trials && o.pass; ++t) {
    const BosonState tau = random_tau(s, rng, caps.degree / 2, false);
    const HirotaPoint pt = random_point(rng, caps.degree);
    const GradedPoly form = hirota_schur_form(ts, tau, pt);
    nonzero += form.is_zero() ? 0 : 1;
    o.merge(compare_poly(form, ts.at_point(ts.omega_residue(tau, tau), pt)), "tau " + std::to_string(t));
  }
  // Normalization constant relating the two sides: 1 when all agree.
  o.detail = {{"nonzero_samples", nonzero}, {"normalization", o.pass ? "1" : "mismatch"}};
  return o;
}

Outcome check_beta_reduction(Rng& rng, int trials, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  TensorSpace ts(s);
  const int reliable = caps.degree - 1;
  int passing = 0, samples = 0;
  // The reduced residual is the full one with y set to zero; a y-free tau
  // passing it must pass the full residual too.
  auto examine = [&](const BosonState& tau, const std::string& name) {
    const GradedPoly reduced = ts.omega_residue(tau, tau, true), full = ts.omega_residue(tau, tau);
    o.merge(compare_poly(reduced, drop_y(full)), name + " reduced vs full at y=0");
    ++samples;
    if (!expect_zero_through(reduced, reliable).pass) return;
    ++passing;
    o.merge(expect_zero_through(full, reliable), name + " passes the reduced residual only");
  };
  examine(s.one(), "tau=1");
  examine(s.one() * Rational(3), "tau=3");
  const ArgSignature plus_x{1, true, false, Convention::direct};
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}}) {
    const Partition lambda(parts);
    if (lambda.weight() * 2 > caps.degree) continue;
    std::string name = "S_(";
    for (int p : parts) name += std::to_string(p) + ",";
    name.back() = ')';
    examine(schur_lambda(lambda, plus_x, s.ring()), name);
    examine(schur_lambda(lambda, kMinusX, s.ring()), name + "(-x)");
  }
  for (int t = 0; t < trials && o.pass; ++t) examine(random_tau(s, rng, caps.degree / 2, true), "random " + std::to_string(t));
  if (passing < 2) o.fail("vacuum does not pass the reduced residual");
  o.detail = {{"samples", samples}, {"reduced_solutions", passing}};
  return o;
}

Outcome check_pde_residuals(const Caps& caps) {
  Outcome o;
  const int reliable = caps.degree - 2;
  BosonSpace s(make_boson_ring(caps, {"a"}));
  const int a = s.param("a");
  const BivariateRing br = make_bivariate_ring(caps.degree, {"a"}, caps.param_order);
  const GradedPoly u = GradedPoly::variable(br.ring, br.u), v = GradedPoly::variable(br.ring, br.v);
  const GradedPoly zero(br.ring);
  o.merge(compare_poly(pde_residual_first(zero, br), zero), "first g=0");
  o.merge(compare_poly(pde_residual_first(v, br), zero), "first g=v");
  o.merge(compare_poly(pde_residual_harmonic((u - v) * (u - v), br), GradedPoly::constant(br.ring, 8)), "harmonic (u-v)^2");
  for (int k = 0; k <= caps.degree; ++k) {
    o.merge(compare_poly(pde_residual_harmonic(pow(u + v, k), br), zero), "harmonic (u+v)^" + std::to_string(k));
  }
  const struct {
    const char* name;
    BosonState tau;
  } taus[] = {{"th1", tau_th1(s, {a})}, {"th2 j=1", tau_th2(s, a, 1)}};
  for (const auto& t : taus) {
    const GradedPoly g = restricted_log(t.tau, br);
    o.merge(expect_zero_through(pde_residual_first(g, br), reliable), std::string("first on ") + t.name);
    o.merge(expect_zero_through(pde_residual_harmonic(g, br), reliable), std::string("harmonic on ") + t.name);
  }
  return o;
}

Outcome check_harmonic_coordinates(Rng& rng, int trials, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(caps, {"a"}));
  const int a = s.param("a");
  const BivariateRing br = make_bivariate_ring(caps.degree, {"a"}, caps.param_order);
  auto agree = [&](const GradedPoly& f, const std::string& name) {
    o.merge(compare_poly(pde_residual_harmonic(f, br), harmonic_via_ts(f, br)), name);
  };
  agree(restricted_log(tau_th1(s, {a}), br), "th1");
  agree(restricted_log(tau_th2(s, a, 1), br), "th2 j=1");
  const GradedPoly av = GradedPoly::variable(br.ring, "a");
  for (int t = 0; t < trials && o.pass; ++t) {
    PolyBuilder b(br.ring);
    for (int k = 0; k < 6; ++k) {
      const int total = static_cast<int>(rng() % static_cast<std::uint64_t>(caps.degree + 1));
      const int i = total == 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(total + 1));
      GradedPoly term = pow(GradedPoly::variable(br.ring, br.u), i) * pow(GradedPoly::variable(br.ring, br.v), total - i);
      if (rng() % 2) term = term * av;
      b.add(term, random_rational(rng));
    }
    agree(std::move(b).build(), "random " + std::to_string(t));
  }
  return o;
}

}  // namespace btau
