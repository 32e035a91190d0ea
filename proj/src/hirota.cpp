#include "btau/hirota.hpp"

#include <map>

#include "btau/schur.hpp"

namespace btau {

namespace {

RingPtr params_only(const Ring& ring) {
  std::vector<Variable> vars;
  for (int i : ring.parameter_indices()) vars.push_back(ring.var(i));
  return make_ring(std::move(vars), Caps{0, 0, ring.caps().param_order});
}

void require_p_free(const GradedPoly& f, int p) {
  for (const auto& t : f.terms()) {
    if (t.mono.e[static_cast<std::size_t>(p)] != 0) throw Error("tau must lie in the p^0 sector");
  }
}

}  // namespace

TensorSpace::TensorSpace(const BosonSpace& base) : base_(base) {
  const Ring& b = *base.ring();
  std::vector<Variable> vars;
  for (int i : b.parameter_indices()) vars.push_back(b.var(i));
  for (const char* suffix : {"'", "''"}) {
    auto v = boson_variables(base.degree(), suffix);
    vars.insert(vars.end(), v.begin(), v.end());
  }
  ring_ = make_ring(std::move(vars), b.caps());
  param_ring_ = params_only(b);
  to_left_ = name_map(b, *ring_, "'");
  to_right_ = name_map(b, *ring_, "''");
  to_param_ = name_map(*ring_, *param_ring_);
  p1_ = ring_->index("p'");
  p2_ = ring_->index("p''");
  for (int n = 1; n <= base.degree(); ++n) {
    const std::string k = std::to_string(n);
    x1_.push_back(ring_->index("x" + k + "'"));
    x2_.push_back(ring_->index("x" + k + "''"));
    y1_.push_back(ring_->index("y" + k + "'"));
    y2_.push_back(ring_->index("y" + k + "''"));
  }
}

BosonTensor TensorSpace::left(const BosonState& s) const { return remap(s, ring_, to_left_); }
BosonTensor TensorSpace::right(const BosonState& s) const { return remap(s, ring_, to_right_); }
BosonTensor TensorSpace::tensor(const BosonState& a, const BosonState& b) const { return left(a) * right(b); }

BosonTensor TensorSpace::embed(const FockTensor& t) const {
  PolyBuilder out(ring_);
  const int d = base_.degree();
  for (const auto& [key, c] : t.terms()) {
    const auto& [l, r] = key;
    if (!base_.fits(l) || !base_.fits(r)) continue;
    if (l.degree() - l.charge() + r.degree() - r.charge() > d) continue;
    out.add(tensor(base_.embed_monomial(l), base_.embed_monomial(r)), c);
  }
  return std::move(out).build();
}

BosonTensor TensorSpace::omega_residue(const BosonState& t1, const BosonState& t2, bool beta_reduction) const {
  const int d = base_.degree();
  if (beta_reduction) {
    for (const BosonState* t : {&t1, &t2}) {
      for (int n = 1; n <= d; ++n) {
        if (!derive(*t, base_.y_var(n)).is_zero()) throw Error("beta reduction needs y-free input");
      }
    }
  }
  const BosonTensor h = tensor(t1, t2);
  std::vector<VarShift> shifts;
  for (int n = 1; n <= d; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    shifts.push_back({x1_[i], ratio(-1, n), -n});
    shifts.push_back({x2_[i], ratio(1, n), -n});
    if (!beta_reduction) {
      shifts.push_back({y1_[i], ratio(1, n), -n});
      shifts.push_back({y2_[i], ratio(-1, n), -n});
    }
  }
  const LaurentPolyZ l = shift_substitute(h, shifts);

  // exp(sum (x' - x'' + y' - y'') z^n)
  std::vector<GradedPoly> a(static_cast<std::size_t>(d) + 1, GradedPoly(ring_));
  for (int n = 1; n <= d; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    GradedPoly s = GradedPoly::variable(ring_, x1_[i]) - GradedPoly::variable(ring_, x2_[i]);
    if (!beta_reduction) s += GradedPoly::variable(ring_, y1_[i]) - GradedPoly::variable(ring_, y2_[i]);
    a[static_cast<std::size_t>(n)] = s;
  }
  const auto e = exp_series(ring_, a, d);

  auto middle = [&](int k) {
    PolyBuilder b(ring_);
    for (int n = 1; n <= d; ++n) {
      const std::size_t i = static_cast<std::size_t>(n - 1);
      const GradedPoly lo = l.coeff(k - n + 1);
      if (!lo.is_zero()) b.add(GradedPoly::variable(ring_, x1_[i]) * lo, n);
      const GradedPoly hi = l.coeff(k + n + 1);
      if (!hi.is_zero()) b.add(derive(hi, x1_[i]));
    }
    const GradedPoly c = l.coeff(k + 1);
    if (!c.is_zero()) b.add(euler(c, p1_));
    return std::move(b).build();
  };

  PolyBuilder res(ring_);
  for (int m = 0; m <= d; ++m) {
    const GradedPoly inner = middle(-1 - m);
    if (!inner.is_zero()) res.add(e[static_cast<std::size_t>(m)] * inner);
  }
  Monomial pp;
  pp.e[static_cast<std::size_t>(p1_)] = 1;
  pp.e[static_cast<std::size_t>(p2_)] = -1;
  PolyBuilder unit(ring_);
  unit.add(pp, 1);
  return std::move(unit).build() * std::move(res).build();
}

BosonTensor TensorSpace::mode_sum(const BosonState& t1, const BosonState& t2) const {
  // Only -D-1 <= i <= D+1 can reach total degree <= D.
  const int d = base_.degree();
  PolyBuilder out(ring_);
  for (int i = -d - 1; i <= d + 1; ++i) {
    const BosonState a = base_.apply(Mode::phistar(i), t1);
    if (a.is_zero()) continue;
    const BosonState b = base_.apply(Mode::phi(-i), t2);
    if (b.is_zero()) continue;
    out.add(tensor(a, b));
  }
  return std::move(out).build();
}

namespace {

Rational entry(const std::vector<Rational>& v, int n) {
  return n >= 1 && n <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(n - 1)] : Rational(0);
}

}  // namespace

GradedPoly TensorSpace::at_point(const BosonTensor& t, const HirotaPoint& pt) const {
  std::vector<std::pair<int, Rational>> values{{p1_, 1}, {p2_, 1}};
  for (int n = 1; n <= base_.degree(); ++n) {
    const std::size_t i = static_cast<std::size_t>(n - 1);
    values.emplace_back(x1_[i], entry(pt.xbar, n) + entry(pt.x, n));
    values.emplace_back(x2_[i], entry(pt.xbar, n) - entry(pt.x, n));
    values.emplace_back(y1_[i], entry(pt.ybar, n) + entry(pt.y, n));
    values.emplace_back(y2_[i], entry(pt.ybar, n) - entry(pt.y, n));
  }
  return remap(evaluate(t, values), param_ring_, to_param_);
}

namespace {

// Pairing of a constant-coefficient differential operator in d/dlambda,
// d/dmu with a polynomial H(lambda, mu), evaluated at lambda = mu = 0.
class Pairing {
 public:
  Pairing(const GradedPoly& h, int n_lambda, const RingPtr& params, std::span<const int> to_param)
      : n_(n_lambda), params_(params) {
    for (const auto& t : h.terms()) {
      Key k{};
      Monomial rest;
      for (int i = 0; i < h.ring()->size(); ++i) {
        const int e = t.mono.e[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (i < 2 * n_) {
          k[static_cast<std::size_t>(i)] = e;
        } else {
          rest.e[static_cast<std::size_t>(to_param[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(e);
        }
      }
      by_key_.try_emplace(k, params_).first->second.add(rest, t.coeff);
    }
    for (auto& [k, b] : by_key_) values_.emplace(k, std::move(b).build());
  }

  /// `op` lives in a ring whose first 2N variables are d/dlambda_n, d/dmu_n.
  GradedPoly pair(const GradedPoly& op, int extra_lambda = 0) const {
    PolyBuilder out(params_);
    for (const auto& t : op.terms()) {
      Key k{};
      Rational weight = t.coeff;
      for (int i = 0; i < 2 * n_; ++i) {
        int e = t.mono.e[static_cast<std::size_t>(i)];
        if (i == extra_lambda - 1) ++e;
        k[static_cast<std::size_t>(i)] = e;
        weight *= factorial(e);
      }
      auto it = values_.find(k);
      if (it != values_.end()) out.add(it->second, weight);
    }
    return std::move(out).build();
  }

 private:
  using Key = std::array<int, kMaxVars>;
  int n_;
  RingPtr params_;
  std::map<Key, PolyBuilder> by_key_;
  std::map<Key, GradedPoly> values_;
};

}  // namespace

GradedPoly hirota_schur_form(const TensorSpace& space, const BosonState& tau, const HirotaPoint& pt) {
  const BosonSpace& base = space.base();
  const Ring& b = *base.ring();
  require_p_free(tau, base.p_var());

  int n = 0;  // largest variable index present
  for (int k = 1; k <= base.degree(); ++k) {
    if (!derive(tau, base.x_var(k)).is_zero() || !derive(tau, base.y_var(k)).is_zero()) n = k;
  }
  const int cap = std::max(1, 2 * std::max(0, tau.max_degree()));
  if (cap > 60) throw Error("tau degree too large for exact evaluation");

  // lambda_1..lambda_n, mu_1..mu_n, then the parameters.
  std::vector<Variable> vars;
  for (int k = 1; k <= n; ++k) vars.push_back({"lambda" + std::to_string(k), VarKind::graded, k});
  for (int k = 1; k <= n; ++k) vars.push_back({"mu" + std::to_string(k), VarKind::graded, k});
  for (int i : b.parameter_indices()) vars.push_back(b.var(i));
  const RingPtr lr = make_ring(std::move(vars), Caps{cap, 0, b.caps().param_order});
  const auto to_param = name_map(*lr, *space.param_ring());

  auto shifted = [&](const GradedPoly& f, int sign) {
    std::vector<GradedPoly> images;
    for (int i = 0; i < b.size(); ++i) {
      const Variable& v = b.var(i);
      images.push_back(GradedPoly(lr));
      if (v.kind == VarKind::parameter) {
        images.back() = GradedPoly::variable(lr, v.name);
      } else if (v.kind == VarKind::laurent) {
        images.back() = GradedPoly::constant(lr, 1);
      }
    }
    for (int k = 1; k <= n; ++k) {
      images[static_cast<std::size_t>(base.x_var(k))] =
          GradedPoly::constant(lr, entry(pt.xbar, k) + sign * entry(pt.x, k)) + GradedPoly::variable(lr, k - 1, 1, sign);
      images[static_cast<std::size_t>(base.y_var(k))] =
          GradedPoly::constant(lr, entry(pt.ybar, k) + sign * entry(pt.y, k)) + GradedPoly::variable(lr, n + k - 1, 1, sign);
    }
    return substitute(f, lr, images);
  };

  // h(lambda + x, mu + y) with h = tau(xbar - lambda, ybar - mu) tau(xbar + lambda, ybar + mu)
  const GradedPoly minus = shifted(tau, -1);
  const GradedPoly plus = shifted(tau, 1);
  const Pairing h(minus * plus, n, space.param_ring(), to_param);
  std::vector<Pairing> dh;  // d/dxbar_k h
  for (int k = 1; k <= n; ++k) {
    const GradedPoly tk = derive(tau, base.x_var(k));
    dh.emplace_back(minus * shifted(tk, 1) + shifted(tk, -1) * plus, n, space.param_ring(), to_param);
  }

  // S_j(-D~lambda + D~mu) in the operator ring.
  std::vector<Variable> dvars;
  for (int k = 1; k <= n; ++k) dvars.push_back({"dlambda" + std::to_string(k), VarKind::graded, k});
  for (int k = 1; k <= n; ++k) dvars.push_back({"dmu" + std::to_string(k), VarKind::graded, k});
  const RingPtr dr = make_ring(std::move(dvars), Caps{cap, 0, 0});
  std::vector<GradedPoly> a(static_cast<std::size_t>(cap) + 1, GradedPoly(dr));
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k)] =
        (GradedPoly::variable(dr, n + k - 1) - GradedPoly::variable(dr, k - 1)) * ratio(1, k);
  }
  const auto sj = exp_series(dr, a, cap);

  // S_i(2x + 2y) at the point, i <= cap + n.
  const int imax = cap + n;
  std::vector<Rational> si(static_cast<std::size_t>(imax) + 1);
  si[0] = 1;
  for (int i = 1; i <= imax; ++i) {
    Rational acc = 0;
    for (int k = 1; k <= i; ++k) acc += k * 2 * (entry(pt.x, k) + entry(pt.y, k)) * si[static_cast<std::size_t>(i - k)];
    si[static_cast<std::size_t>(i)] = acc / i;
  }

  PolyBuilder out(space.param_ring());
  for (int j = 0; j <= cap; ++j) {
    const GradedPoly& op = sj[static_cast<std::size_t>(j)];
    if (op.is_zero()) continue;
    const GradedPoly base_pair = h.pair(op);
    for (int i = 0; i <= j + n; ++i) {
      const Rational& s = si[static_cast<std::size_t>(i)];
      if (s == 0) continue;
      if (j > i) {
        const int k = j - i;
        const Rational c = k * (entry(pt.x, k) + entry(pt.xbar, k));
        if (c != 0 && !base_pair.is_zero()) out.add(base_pair, s * c);
      } else if (i > j) {
        const int k = i - j;
        if (k > n) continue;
        out.add(h.pair(op, k), s / 2);
        out.add(dh[static_cast<std::size_t>(k - 1)].pair(op), s / 2);
      }
    }
  }
  return std::move(out).build();
}

BivariateRing make_bivariate_ring(int degree, const std::vector<std::string>& params, int param_order) {
  std::vector<Variable> vars{{"u", VarKind::graded, 1}, {"v", VarKind::graded, 1}};
  auto pv = parameter_variables(params);
  vars.insert(vars.end(), pv.begin(), pv.end());
  return {make_ring(std::move(vars), Caps{degree, 0, param_order}), 0, 1};
}

GradedPoly restricted_log(const BosonState& tau, const BivariateRing& target) {
  const Ring& b = *tau.ring();
  const int p = b.index("p");
  require_p_free(tau, p);
  std::vector<GradedPoly> images;
  for (int i = 0; i < b.size(); ++i) {
    const Variable& v = b.var(i);
    if (v.name == "x1") {
      images.push_back(GradedPoly::variable(target.ring, target.u));
    } else if (v.name == "y1") {
      images.push_back(GradedPoly::variable(target.ring, target.v));
    } else if (v.kind == VarKind::parameter) {
      images.push_back(GradedPoly::variable(target.ring, v.name));
    } else {
      images.push_back(GradedPoly(target.ring));
    }
  }
  const GradedPoly r = substitute(tau, target.ring, images);
  if (r.constant_term() != 1) throw Error("tau must have constant term 1");
  return poly_log1p(r - GradedPoly::constant(target.ring, 1));
}

GradedPoly pde_residual_first(const GradedPoly& g, const BivariateRing& r) {
  const GradedPoly gu = derive(g, r.u);
  const GradedPoly gv = derive(g, r.v);
  return GradedPoly::variable(r.ring, r.u) * (derive(gv, r.v) - derive(gu, r.v)) + gu;
}

GradedPoly pde_residual_harmonic(const GradedPoly& f, const BivariateRing& r) {
  const GradedPoly fu = derive(f, r.u);
  const GradedPoly fv = derive(f, r.v);
  return derive(fu, r.u) - derive(fu, r.v) * 2 + derive(fv, r.v);
}

GradedPoly harmonic_via_ts(const GradedPoly& f, const BivariateRing& r) {
  const Ring& src = *r.ring;
  std::vector<Variable> vars;
  for (int i = 0; i < src.size(); ++i) {
    Variable v = src.var(i);
    if (i == r.u) v.name = "t";
    if (i == r.v) v.name = "s";
    vars.push_back(v);
  }
  const RingPtr ts = make_ring(std::move(vars), src.caps());
  const int t = r.u, s = r.v;
  const GradedPoly T = GradedPoly::variable(ts, t), S = GradedPoly::variable(ts, s);
  const GradedPoly U = GradedPoly::variable(r.ring, r.u), V = GradedPoly::variable(r.ring, r.v);

  std::vector<GradedPoly> to_ts, back;
  for (int i = 0; i < src.size(); ++i) {
    if (i == r.u) {
      to_ts.push_back((S + T) * ratio(1, 2));
      back.push_back(U - V);
    } else if (i == r.v) {
      to_ts.push_back((S - T) * ratio(1, 2));
      back.push_back(U + V);
    } else {
      to_ts.push_back(GradedPoly::variable(ts, i));
      back.push_back(GradedPoly::variable(r.ring, i));
    }
  }
  const GradedPoly ftilde = substitute(f, ts, to_ts);
  const GradedPoly ftt = derive(derive(ftilde, t), t);
  return substitute(ftt, r.ring, back) * 4;
}

}  // namespace btau
