#include <algorithm>

#include "btau/checks.hpp"

namespace btau {

namespace {

std::vector<std::string> names(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

GradedPoly var(const BosonSpace& s, const std::string& name) { return GradedPoly::variable(s.ring(), name); }

}  // namespace

Outcome check_field_examples(const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{std::max(caps.degree, 2), std::max(caps.p_window, 1), 0}));
  const GradedPoly one = s.one(), p = s.p_power(1), pinv = s.p_power(-1);
  const GradedPoly x1 = var(s, "x1"), x2 = var(s, "x2"), y1 = var(s, "y1");
  o.merge(compare_poly(s.apply(Mode::phistar(0), one), p * x1), "phistar[0].1");
  o.merge(compare_poly(s.apply(Mode::phistar(-1), one), p * (x1 * x1 + x1 * y1 + x2 * Rational(2))), "phistar[-1].1");
  o.merge(compare_poly(s.apply(Mode::phistar(1), one), s.zero()), "phistar[1].1");
  o.merge(compare_poly(s.apply(Mode::phi(-1), one), pinv), "phi[-1].1");
  o.merge(compare_poly(s.apply(Mode::phi(-2), one), -(pinv * (x1 + y1))), "phi[-2].1");
  o.merge(compare_poly(s.apply(Mode::phi(0), one), s.zero()), "phi[0].1");
  const LaurentPolyZ star = s.phistar_field(one), plain = s.phi_field(one);
  for (int k = -2; k <= 2; ++k) {
    o.merge(compare_poly(star.coeff(k), s.apply(Mode::phistar(-k), one)), "phistar(z) z^" + std::to_string(k));
    o.merge(compare_poly(plain.coeff(k), s.apply(Mode::phi(-k - 1), one)), "phi(z) z^" + std::to_string(k));
  }
  return o;
}

Outcome check_vacuum_laws(const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, std::max(caps.p_window, 1), 0}));
  for (int i = 0; i <= caps.degree; ++i) {
    o.merge(compare_poly(s.apply(Mode::phi(i), s.one()), s.zero()), "phi[" + std::to_string(i) + "].1");
    o.merge(compare_poly(s.apply(Mode::phistar(i + 1), s.one()), s.zero()), "phistar[" + std::to_string(i + 1) + "].1");
  }
  return o;
}

Outcome check_embedding_module_map(Rng& rng, int trials, const Caps& caps, int range) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, caps.p_window, 0}));
  const int max_degree = std::min(5, caps.degree - 2);
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -2, 2, 3);
    const BosonState image = s.embed(v);
    for (int k = -range; k <= range; ++k) {
      for (const Mode m : {Mode::phi(k), Mode::phistar(k)}) {
        o.merge(compare_poly(s.embed_truncated(apply_mode(m, v)), s.apply(m, image)), m.to_string());
      }
    }
  }
  return o;
}

Outcome check_boson_commutators(Rng& rng, int trials, const Caps& caps, int range) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{caps.degree, std::max(caps.p_window, 4), 0}));
  // Each mode raises the xy-degree by at most range + 1.
  const int max_degree = std::max(0, caps.degree - range - 1);
  auto op = [&](Mode m) { return [&s, m](const BosonState& x) { return s.apply(m, x); }; };
  for (int t = 0; t < trials && o.pass; ++t) {
    const BosonState x = random_boson_state(s, rng, max_degree, 2, 3);
    for (int i = -range; i <= range; ++i) {
      for (int j = -range; j <= range; ++j) {
        const auto a = op(Mode::phi(i)), b = op(Mode::phistar(j)), c = op(Mode::phi(j)), d = op(Mode::phistar(i));
        const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        o.merge(compare_poly(a(b(x)) - b(a(x)), i == -j ? x : s.zero()), "[phi,phistar]" + at);
        o.merge(compare_poly(a(c(x)) - c(a(x)), s.zero()), "[phi,phi]" + at);
        o.merge(compare_poly(d(b(x)) - b(d(x)), s.zero()), "[phistar,phistar]" + at);
      }
    }
  }
  return o;
}

Outcome check_zero_mode_powers(int nmax, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{std::max(caps.degree, nmax), std::max(caps.p_window, nmax), 0}));
  for (int n = 0; n <= nmax; ++n) {
    o.merge(compare_poly(mode_power(s, Mode::phistar(0), n, s.one()), phistar_zero_power(s, n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome check_minus1_mode_powers(int nmax, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(Caps{std::max(caps.degree, 2 * nmax), std::max(caps.p_window, nmax), 0}));
  for (int n = 0; n <= nmax; ++n) {
    o.merge(compare_poly(mode_power(s, Mode::phistar(-1), n, s.one()), phistar_minus1_power(s, n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome check_binomial_intermediate(int nmax, int jmax, const Caps& caps) {
  Outcome o;
  for (int j = 1; j <= jmax; ++j) {
    // phi_{-j}^n phistar_{-1}^n . 1 is homogeneous of xy-degree n (j + 1).
    BosonSpace s(make_boson_ring(Caps{std::max(caps.degree, nmax * (j + 1)), std::max(caps.p_window, nmax), 0}));
    for (int n = 0; n <= nmax; ++n) {
      const BosonState lhs = mode_power(s, Mode::phi(-j), n, mode_power(s, Mode::phistar(-1), n, s.one()));
      o.merge(compare_poly(lhs, phi_phistar_power_closed(s, n, j)), "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }
  return o;
}

Outcome check_tau_th1(int smax, const Caps& caps) {
  Outcome o;
  for (int sz = 1; sz <= smax; ++sz) {
    BosonSpace s(make_boson_ring(caps, names("a", sz)));
    std::vector<int> a;
    std::vector<Bilinear> gens;
    for (int j = 1; j <= sz; ++j) {
      a.push_back(s.param("a" + std::to_string(j)));
      gens.push_back({a.back(), j, 0});
    }
    o.merge(compare_poly(tau_th1(s, a), tau_direct(s, gens)), "s=" + std::to_string(sz));
  }
  return o;
}

Outcome check_tau_th2(int jmax, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(caps, {"a"}));
  const int a = s.param("a");
  for (int j = 1; j <= jmax; ++j) o.merge(compare_poly(tau_th2(s, a, j), tau_direct(s, {{a, j, 1}})), "j=" + std::to_string(j));
  return o;
}

Outcome check_tau_general(const std::vector<std::pair<int, int>>& st, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(caps, {"a"}));
  const int a = s.param("a");
  for (auto [sv, tv] : st) {
    o.merge(compare_poly(tau_general(s, a, sv, tv), tau_direct(s, {{a, sv, tv}})), "(s,t)=(" + std::to_string(sv) + "," + std::to_string(tv) + ")");
  }
  return o;
}

Outcome check_tau_two_factor(int i, int j, int k, int l, const Caps& caps) {
  Outcome o;
  BosonSpace s(make_boson_ring(caps, {"c", "d"}));
  const int c = s.param("c"), d = s.param("d");
  // exp(d phi_{-j} phistar_{-k}) exp(c phi_{-i} phistar_{-l}): the generators commute.
  o.merge(compare_poly(tau_two_factor(s, c, d, i, j, k, l), tau_direct(s, {{c, i, l}, {d, j, k}})), "closed form");
  return o;
}

Outcome check_tau_reductions(const Caps& caps) {
  Outcome o;
  for (int sv = 1; sv <= 3; ++sv) {
    BosonSpace s(make_boson_ring(caps, names("a", sv)));
    std::vector<int> a;
    std::vector<std::pair<int, Rational>> others;
    for (int j = 1; j <= sv; ++j) {
      a.push_back(s.param("a" + std::to_string(j)));
      if (j < sv) others.emplace_back(a.back(), 0);
    }
    o.merge(compare_poly(tau_general(s, a.back(), sv, 0), evaluate(tau_th1(s, a), others)), "t=0 s=" + std::to_string(sv));
    o.merge(compare_poly(tau_general(s, a.back(), sv, 1), tau_th2(s, a.back(), sv)), "t=1 s=" + std::to_string(sv));
  }
  BosonSpace s(make_boson_ring(caps, {"c", "d"}));
  const int c = s.param("c"), d = s.param("d");
  o.merge(compare_poly(evaluate(tau_two_factor(s, c, d, 1, 1, 1, 0), {{d, 0}}), tau_general(s, c, 1, 0)), "d=0");
  o.merge(compare_poly(evaluate(tau_two_factor(s, c, d, 1, 1, 1, 0), {{c, 0}, {d, 0}}), s.one()), "c=d=0");
  return o;
}

}  // namespace btau
