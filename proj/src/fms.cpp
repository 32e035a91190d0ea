#include "btau/fms.hpp"

#include <functional>

#include "btau/schur.hpp"

namespace btau {

BosonSpace::BosonSpace(RingPtr ring) : ring_(std::move(ring)), p_(ring_->index("p")), zero_(ring_) {
  const int d = degree();
  for (int n = 1; n <= d; ++n) {
    if (!ring_->find("x" + std::to_string(n)) || !ring_->find("y" + std::to_string(n))) {
      throw Error("boson ring is missing variables below the degree cap");
    }
  }
  s_mxy_ = elementary_schur_series(d, kMinusXY, ring_);
  s_pxy_ = elementary_schur_series(d, kPlusXY, ring_);
  s_mx_ = elementary_schur_series(d, kMinusX, ring_);
}

int BosonSpace::x_var(int n) const {
  if (n < 1 || n > degree()) return -1;
  return ring_->index("x" + std::to_string(n));
}

int BosonSpace::y_var(int n) const {
  if (n < 1 || n > degree()) return -1;
  return ring_->index("y" + std::to_string(n));
}

const GradedPoly& BosonSpace::s_minus_xy(int k) const {
  return k < 0 || k > degree() ? zero_ : s_mxy_[static_cast<std::size_t>(k)];
}

const GradedPoly& BosonSpace::s_plus_xy(int k) const {
  return k < 0 || k > degree() ? zero_ : s_pxy_[static_cast<std::size_t>(k)];
}

const GradedPoly& BosonSpace::s_minus_x(int k) const {
  return k < 0 || k > degree() ? zero_ : s_mx_[static_cast<std::size_t>(k)];
}

// sign = -1: x_n -> x_n - z^{-n}/n, y_n -> y_n + z^{-n}/n (phistar side);
// sign = +1 is the inverse shift used by phi.
LaurentPolyZ BosonSpace::shifted(const BosonState& s, int sign) const {
  std::vector<VarShift> shifts;
  for (int n = 1; n <= degree(); ++n) {
    shifts.push_back({x_var(n), ratio(sign, n), -n});
    shifts.push_back({y_var(n), ratio(-sign, n), -n});
  }
  return shift_substitute(s, shifts);
}

namespace {

// Coefficient of z^e in M(z) L(z), M the middle operator of phistar(z).
class Middle {
 public:
  Middle(const BosonSpace& space, const LaurentPolyZ& l) : space_(space), l_(l) {}

  const GradedPoly& at(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    const int d = space_.degree();
    PolyBuilder b(space_.ring());
    for (int k = 1; k <= d; ++k) {
      const GradedPoly a = l_.coeff(e - k + 1);
      if (!a.is_zero()) b.add(GradedPoly::variable(space_.ring(), space_.x_var(k)) * a, Rational(k));
      const GradedPoly c = l_.coeff(e + k + 1);
      if (!c.is_zero()) b.add(derive(c, space_.x_var(k)));
    }
    const GradedPoly c = l_.coeff(e + 1);
    if (!c.is_zero()) b.add(euler(c, space_.p_var()));
    return cache_.emplace(e, std::move(b).build()).first->second;
  }

 private:
  const BosonSpace& space_;
  const LaurentPolyZ& l_;
  std::map<int, GradedPoly> cache_;
};

}  // namespace

GradedPoly BosonSpace::phistar_coeff(const LaurentPolyZ& l, int k) const {
  Middle mid(*this, l);
  PolyBuilder b(ring_);
  for (int m = 0; m <= degree(); ++m) {
    const GradedPoly& inner = mid.at(k - m);
    if (!inner.is_zero()) b.add(s_plus_xy(m) * inner);
  }
  return p_power(1) * std::move(b).build();
}

GradedPoly BosonSpace::phi_coeff(const LaurentPolyZ& l, int k) const {
  PolyBuilder b(ring_);
  for (int m = 0; m <= degree(); ++m) {
    const GradedPoly c = l.coeff(k - m);
    if (!c.is_zero()) b.add(s_minus_xy(m) * c);
  }
  return p_power(-1) * std::move(b).build();
}

LaurentPolyZ BosonSpace::phistar_field(const BosonState& s) const {
  const LaurentPolyZ l = shifted(s, -1);
  LaurentPolyZ out(ring_);
  if (l.is_zero()) return out;
  Middle mid(*this, l);
  // M(z) L(z) is supported in [min(L) - D - 1, D - 1]; E_+ adds 0..D.
  for (int e = l.min_exp() - degree() - 1; e <= degree() - 1; ++e) {
    const GradedPoly& inner = mid.at(e);
    if (inner.is_zero()) continue;
    for (int m = 0; m <= degree(); ++m) out.add(e + m, p_power(1) * (s_plus_xy(m) * inner));
  }
  return out;
}

LaurentPolyZ BosonSpace::phi_field(const BosonState& s) const {
  const LaurentPolyZ l = shifted(s, 1);
  LaurentPolyZ out(ring_);
  for (const auto& [e, c] : l.terms()) {
    for (int m = 0; m <= degree(); ++m) out.add(e + m, p_power(-1) * (s_minus_xy(m) * c));
  }
  return out;
}

BosonState BosonSpace::apply(const Mode& m, const BosonState& s) const {
  if (s.is_zero()) return zero();
  if (m.field == Mode::Field::phistar) return phistar_coeff(shifted(s, -1), -m.index);
  return phi_coeff(shifted(s, 1), -m.index - 1);
}

bool BosonSpace::fits(const FockMonomial& m) const {
  const int l = m.charge();
  return m.degree() - l <= degree() && l <= ring_->caps().p_window && -l <= ring_->caps().p_window;
}

BosonState BosonSpace::embed_monomial(const FockMonomial& m) const {
  if (m.is_vacuum()) return one();
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
  }
  // Creation modes commute; peel off the factor that keeps |p| small.
  FockMonomial rest = m;
  Mode mode = Mode::phi(0);
  const int pexp = -m.charge();
  if (m.phi.empty() || (pexp > 0 && !m.phistar.empty())) {
    const int j = m.phistar.rbegin()->first;
    if (--rest.phistar[j] == 0) rest.phistar.erase(j);
    mode = Mode::phistar(-j);
  } else {
    const int i = m.phi.rbegin()->first;
    if (--rest.phi[i] == 0) rest.phi.erase(i);
    mode = Mode::phi(-i);
  }
  BosonState image = apply(mode, embed_monomial(rest));
  std::lock_guard lock(mu_);
  return memo_.emplace(m, std::move(image)).first->second;
}

BosonState BosonSpace::embed(const FockVector& v) const {
  for (const auto& [m, c] : v.terms()) {
    if (!fits(m)) throw Error("truncation overflow: " + m.to_string());
  }
  return embed_truncated(v);
}

BosonState BosonSpace::embed_truncated(const FockVector& v) const {
  PolyBuilder b(ring_);
  for (const auto& [m, c] : v.terms()) {
    if (fits(m)) b.add(embed_monomial(m), c);
  }
  return std::move(b).build();
}

BosonState tau_direct(const BosonSpace& space, const std::vector<Bilinear>& gens) {
  for (const auto& g : gens) {
    if (g.phi_index < 1 || g.phistar_index < 0) throw Error("index out of creation range");
  }
  const RingPtr& ring = space.ring();
  const int order = ring->caps().param_order;
  PolyBuilder out(ring);
  std::vector<int> k(gens.size(), 0);
  // Multi-indices with total order <= P.
  std::function<void(std::size_t, int)> walk = [&](std::size_t r, int left) {
    if (r == gens.size()) {
      FockMonomial m;
      Monomial params;
      Rational c = 1;
      for (std::size_t q = 0; q < gens.size(); ++q) {
        if (k[q] == 0) continue;
        m.phi[gens[q].phi_index] += k[q];
        m.phistar[gens[q].phistar_index] += k[q];
        params.e[static_cast<std::size_t>(gens[q].param)] =
            static_cast<std::int8_t>(params.e[static_cast<std::size_t>(gens[q].param)] + k[q]);
        c /= factorial(k[q]);
      }
      if (!space.fits(m)) return;
      const GradedPoly image = space.embed_monomial(m);
      PolyBuilder mono(ring);
      mono.add(params, c);
      out.add(std::move(mono).build() * image);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      k[r] = e;
      walk(r + 1, left - e);
    }
    k[r] = 0;
  };
  walk(0, order);
  return std::move(out).build();
}

namespace {

GradedPoly param_var(const BosonSpace& space, int idx) {
  if (space.ring()->var(idx).kind != VarKind::parameter) throw Error("not a parameter: " + space.ring()->var(idx).name);
  return GradedPoly::variable(space.ring(), idx);
}

}  // namespace

BosonState tau_th1(const BosonSpace& space, const std::vector<int>& a) {
  const RingPtr& ring = space.ring();
  GradedPoly num(ring), den(ring);
  for (std::size_t q = 0; q < a.size(); ++q) {
    const int j = static_cast<int>(q) + 1;
    const GradedPoly aj = param_var(space, a[q]);
    den += aj * space.s_minus_xy(j);
    num += aj * space.s_minus_xy(j - 1);
  }
  const GradedPoly g = geometric_inverse(den);
  const GradedPoly w = -(num * g);
  GradedPoly exponent(ring);
  GradedPoly wn = w;
  for (int n = 1; !wn.is_zero(); ++n) {
    const int xn = space.x_var(n);
    if (xn >= 0) exponent += GradedPoly::variable(ring, xn) * wn;
    wn = wn * w;
  }
  return g * poly_exp(-exponent);
}

BosonState tau_th2(const BosonSpace& space, int a, int j) {
  if (j < 1) throw Error("j must be positive");
  const RingPtr& ring = space.ring();
  const GradedPoly av = param_var(space, a);
  const GradedPoly& s1 = space.s_plus_xy(1);
  const GradedPoly g = geometric_inverse(av * (space.s_minus_xy(j + 1) + s1 * space.s_minus_xy(j)));
  const GradedPoly w = -(av * space.s_minus_xy(j - 1) * g);
  GradedPoly exponent(ring);
  GradedPoly wn = w;
  for (int n = 1; !wn.is_zero(); ++n) {
    PolyBuilder b(ring);
    for (int i = 0; i <= n; ++i) {
      const int xv = space.x_var(n + i);
      if (xv < 0) continue;
      b.add(pow(s1, n - i) * GradedPoly::variable(ring, xv), binomial(n, i) * ratio(n + i, n));
    }
    exponent += std::move(b).build() * wn;
    wn = wn * w;
  }
  return g * poly_exp(-exponent);
}

GradedPoly a_st(const BosonSpace& space, int s, int t) {
  PolyBuilder b(space.ring());
  for (int m = 0; m <= t; ++m) b.add(space.s_plus_xy(m) * space.s_minus_xy(s + t - m));
  return std::move(b).build();
}

LaurentPolyZ q_series(const BosonSpace& space, int t) {
  LaurentPolyZ q(space.ring());
  for (int m = 0; m <= t; ++m) q.add(-t - 1 + m, space.s_plus_xy(m));
  return q;
}

GradedPoly power_sum_exponent(const BosonSpace& space, const LaurentPolyZ& w) {
  const RingPtr& ring = space.ring();
  PolyBuilder b(ring);
  LaurentPolyZ wn = w;
  for (int n = 1; !wn.is_zero(); ++n) {
    for (const auto& [e, c] : wn.terms()) {
      const int xv = space.x_var(-e);
      if (xv >= 0) b.add(GradedPoly::variable(ring, xv) * c, ratio(e, n));  // -(-e)/n
    }
    wn = wn * w;
  }
  return std::move(b).build();
}

BosonState tau_general(const BosonSpace& space, int a, int s, int t) {
  if (s < 1 || t < 0) throw Error("need s >= 1 and t >= 0");
  const GradedPoly av = param_var(space, a);
  const GradedPoly g = geometric_inverse(av * a_st(space, s, t));
  const GradedPoly w = -(av * space.s_minus_xy(s - 1) * g);
  return g * poly_exp(power_sum_exponent(space, q_series(space, t) * w));
}

BosonState tau_two_factor(const BosonSpace& space, int c, int d, int i, int j, int k, int l) {
  if (i < 1 || j < 1 || l < 0 || k < l) throw Error("need i, j >= 1 and k >= l >= 0");
  const GradedPoly cv = param_var(space, c);
  const GradedPoly dv = param_var(space, d);
  const GradedPoly cil = cv * a_st(space, i, l);
  const GradedPoly cik = cv * a_st(space, i, k);
  const GradedPoly djk = dv * a_st(space, j, k);
  const GradedPoly djl = dv * a_st(space, j, l);
  const GradedPoly ci = cv * space.s_minus_xy(i - 1);
  const GradedPoly dj = dv * space.s_minus_xy(j - 1);
  // 1 - delta = 1 - cA_il - dA_jk + cA_il dA_jk - cA_ik dA_jl
  const GradedPoly g = geometric_inverse(cil + djk - cil * djk + cik * djl);
  const GradedPoly w1 = (-ci + ci * djk - dj * cik) * g;
  const GradedPoly w2 = (-dj + dj * cil - ci * djl) * g;
  const LaurentPolyZ w = q_series(space, l) * w1 + q_series(space, k) * w2;
  return g * poly_exp(power_sum_exponent(space, w));
}

namespace {

void check_window(const BosonSpace& space, int n) {
  if (n < 0) throw Error("power must be non-negative");
  if (n > space.ring()->caps().p_window) throw Error("p-window overflow");
}

}  // namespace

BosonState phistar_zero_power(const BosonSpace& space, int n) {
  check_window(space, n);
  return space.p_power(n) * space.s_minus_x(n) * (factorial(n) * (n % 2 ? -1 : 1));
}

BosonState phistar_minus1_power(const BosonSpace& space, int n) {
  check_window(space, n);
  return space.p_power(n) * sstar(n, space.ring()) * (factorial(n) * (n % 2 ? -1 : 1));
}

BosonState phi_phistar_power_closed(const BosonSpace& space, int n, int j) {
  const RingPtr& ring = space.ring();
  const auto star = sstar_series(n, ring);
  const GradedPoly b = space.s_minus_xy(j + 1) + space.s_plus_xy(1) * space.s_minus_xy(j);
  PolyBuilder out(ring);
  for (int i = 0; i <= n; ++i) {
    const GradedPoly term = pow(space.s_minus_xy(j - 1), i) * pow(b, n - i) * star[static_cast<std::size_t>(i)];
    out.add(term, factorial(n) * binomial(n, i) * (i % 2 ? -1 : 1));
  }
  return std::move(out).build();
}

BosonState mode_power(const BosonSpace& space, const Mode& m, int n, const BosonState& s) {
  BosonState out = s;
  for (int r = 0; r < n; ++r) out = space.apply(m, out);
  return out;
}

}  // namespace btau
