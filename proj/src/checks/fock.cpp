#include <functional>

#include "btau/checks.hpp"

namespace btau {

namespace {

using Op = std::function<FockVector(const FockVector&)>;

Op mode_op(Mode m) {
  return [m](const FockVector& v) { return apply_mode(m, v); };
}

Op current_op(Current c, int k) {
  return [c, k](const FockVector& v) { return apply_current(c, k, v); };
}

FockVector bracket(const Op& a, const Op& b, const FockVector& v) { return a(b(v)) - b(a(v)); }

// (op (x) 1) t or (1 (x) op) t.
FockTensor apply_side(const FockTensor& t, const Op& op, bool left) {
  FockTensor out;
  for (const auto& [key, c] : t.terms()) {
    const FockVector image = op(FockVector::basis(left ? key.first : key.second));
    const FockVector other = FockVector::basis(left ? key.second : key.first);
    if (left) out.add_product(image, other, c);
    else out.add_product(other, image, c);
  }
  return out;
}

std::string pair_name(const char* what, int i, int j) { return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Outcome check_charge_convention(int order) {
  Outcome o;
  const int verdict = charge_convention_check(order);
  o.detail = {{"convention", verdict == 1 ? "#phi - #phistar" : verdict == -1 ? "#phistar - #phi" : "none"}};
  if (verdict != 1) o.fail("census does not match the built-in charge convention (verdict " + std::to_string(verdict) + ")");
  return o;
}

Outcome check_fock_commutators(Rng& rng, int trials, int max_degree, int range) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -2, 2, 3);
    for (int i = -range; i <= range; ++i) {
      for (int j = -range; j <= range; ++j) {
        const FockVector expected = i == -j ? v : FockVector();
        o.merge(compare_fock(bracket(mode_op(Mode::phi(i)), mode_op(Mode::phistar(j)), v), expected), pair_name("[phi,phistar]", i, j));
        o.merge(compare_fock(bracket(mode_op(Mode::phi(i)), mode_op(Mode::phi(j)), v), FockVector()), pair_name("[phi,phi]", i, j));
        o.merge(compare_fock(bracket(mode_op(Mode::phistar(i)), mode_op(Mode::phistar(j)), v), FockVector()),
                pair_name("[phistar,phistar]", i, j));
      }
    }
  }
  return o;
}

Outcome check_virasoro(Rng& rng, int trials, int max_degree, int range) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -2, 2, 3);
    for (int m = -range; m <= range; ++m) {
      for (int n = -range; n <= range; ++n) {
        FockVector expected = apply_current(Current::j1, m + n, v) * Rational(m - n);
        if (m == -n) expected = expected + v * ratio(m * m * m - m, 6);
        o.merge(compare_fock(bracket(current_op(Current::j1, m), current_op(Current::j1, n), v), expected), pair_name("[L,L]", m, n));
      }
    }
  }
  return o;
}

Outcome check_heisenberg(Rng& rng, int trials, int max_degree, int range) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -2, 2, 3);
    for (int i = -range; i <= range; ++i) {
      for (int j = -range; j <= range; ++j) {
        const FockVector expected = i == -j ? v * Rational(-i) : FockVector();
        o.merge(compare_fock(bracket(current_op(Current::j0, i), current_op(Current::j0, j), v), expected), pair_name("[J,J]", i, j));
      }
    }
  }
  return o;
}

Outcome check_grading(Rng& rng, int trials, int max_degree) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -3, 3, 5);
    FockVector sum;
    for (const auto& g : grade(v)) {
      const std::string at = "(" + std::to_string(g.charge) + "," + std::to_string(g.degree) + ")";
      o.merge(compare_fock(apply_current(Current::j0, 0, g.component), g.component * Rational(-g.charge)), "J0_0 on " + at);
      o.merge(compare_fock(apply_current(Current::j1, 0, g.component), g.component * Rational(g.degree)), "J1_0 on " + at);
      sum = sum + g.component;
    }
    o.merge(compare_fock(sum, v), "components sum");
  }
  return o;
}

Outcome check_hirota_invariance(Rng& rng, int trials, int max_degree, int range) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const FockVector v = random_fock_vector(rng, max_degree, -2, 2, 2);
    const FockVector w = random_fock_vector(rng, max_degree, -2, 2, 2);
    const FockTensor base = omega_u(v, w);
    for (int m = -range; m <= range; ++m) {
      for (int n = -range; n <= range; ++n) {
        const Op x = [m, n](const FockVector& u) { return apply_mode(Mode::phistar(m), apply_mode(Mode::phi(n), u)); };
        const FockTensor lhs = omega_u(x(v), w) + omega_u(v, x(w));
        const FockTensor rhs = apply_side(base, x, true) + apply_side(base, x, false);
        o.merge(compare_tensor(lhs, rhs), pair_name("phistar_m phi_n", m, n));
      }
    }
  }
  return o;
}

Outcome check_fock_quadratic_tau(Rng& rng, int trials, int degree) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    std::map<std::pair<int, int>, Rational> c;
    for (int k = 0; k < 3; ++k) c[{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3) + 1}] = random_rational(rng);
    const FockVector tau = tau_quadratic_exp(c, degree);
    const FockTensor r = omega_u(tau, tau).truncated_degree(degree);
    if (!r.is_zero()) o.merge(compare_tensor(r, FockTensor()), "trial " + std::to_string(t));
  }
  return o;
}

Outcome check_vacuum_uniqueness(Rng& rng, int trials, int max_degree, int max_charge) {
  Outcome o;
  int witnessed = 0, monomials = 0;
  auto examine = [&](const FockVector& v, const std::string& name) {
    const FockTensor t = omega_u(v, v);
    if (t.is_zero()) {
      o.fail(name + ": Omega(v (x) v) vanishes");
      return;
    }
    bool has_phi = false;
    for (const auto& [m, c] : v.terms()) has_phi = has_phi || !m.phi.empty();
    if (!has_phi) return;
    const ObstructionWitness w = vacuum_obstruction(v);
    const FockTensor seen = project_powers(t, w.top_index, w.top_power - 1, w.top_power + 1);
    if (w.witness.is_zero()) o.fail(name + ": empty witness");
    o.merge(compare_tensor(seen, w.witness), name + " witness");
    ++witnessed;
  };
  std::vector<FockMonomial> pool;
  for (int l = -max_charge; l <= max_charge; ++l) {
    for (const auto& m : enumerate_monomials(l, max_degree)) {
      if (m.is_vacuum()) continue;
      pool.push_back(m);
      examine(FockVector::basis(m), m.to_string());
      ++monomials;
    }
  }
  for (int t = 0; t < trials && o.pass; ++t) {
    FockVector v = FockVector::basis(pool[rng() % pool.size()], random_rational(rng, 5, 3) + 6);
    const int extra = static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) v.add(pool[rng() % pool.size()], random_rational(rng));
    if (rng() % 2) v.add(FockMonomial{}, random_rational(rng));
    bool nonvacuum = false;
    for (const auto& [m, c] : v.terms()) nonvacuum = nonvacuum || !m.is_vacuum();
    if (!nonvacuum) continue;
    examine(v, "combination " + std::to_string(t));
  }
  o.detail = {{"monomials", monomials}, {"witnessed", witnessed}};
  return o;
}

}  // namespace btau
