#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "btau/fock.hpp"
#include "btau/laurent.hpp"
#include "btau/poly.hpp"

namespace btau {

/// Elements of C[[x, y; p, 1/p]] are plain GradedPolys over a boson ring.
using BosonState = GradedPoly;

/// The bosonic realization of the charged free bosons: field actions of
/// phi(z) and phistar(z) on a boson ring and the embedding |0> -> 1.
class BosonSpace {
 public:
  explicit BosonSpace(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  int degree() const { return ring_->caps().degree; }
  int p_var() const { return p_; }
  /// Index of x_n / y_n, or -1 when n exceeds the degree cap.
  int x_var(int n) const;
  int y_var(int n) const;
  int param(const std::string& name) const { return ring_->index(name); }

  GradedPoly zero() const { return GradedPoly(ring_); }
  GradedPoly one() const { return GradedPoly::constant(ring_, 1); }
  GradedPoly p_power(int e) const { return GradedPoly::variable(ring_, p_, e); }

  /// Cached S_k(-x-y), S_k(x+y), S_k(-x); zero for k < 0 or k > D.
  const GradedPoly& s_minus_xy(int k) const;
  const GradedPoly& s_plus_xy(int k) const;
  const GradedPoly& s_minus_x(int k) const;

  /// phistar(z) s = p exp(sum (x_n + y_n) z^n) (sum k x_k z^{k-1} + sum d/dx_k z^{-k-1}
  ///   + p d/dp z^{-1}) exp(-sum (d/dx_n - d/dy_n) z^{-n} / n) s
  LaurentPolyZ phistar_field(const BosonState& s) const;
  /// phi(z) s = p^{-1} exp(-sum (x_n + y_n) z^n) exp(sum (d/dx_n - d/dy_n) z^{-n} / n) s
  LaurentPolyZ phi_field(const BosonState& s) const;

  /// A single mode: phistar_i is the z^{-i} coefficient of phistar(z),
  /// phi_i the z^{-i-1} coefficient of phi(z).
  BosonState apply(const Mode& m, const BosonState& s) const;

  /// Image of a Fock vector. Throws "truncation overflow" when a monomial's
  /// image leaves the caps.
  BosonState embed(const FockVector& v) const;
  /// Same, silently dropping monomials whose image lies beyond the caps.
  BosonState embed_truncated(const FockVector& v) const;
  /// Whether the image of a basis monomial fits the caps.
  bool fits(const FockMonomial& m) const;
  BosonState embed_monomial(const FockMonomial& m) const;

 private:
  LaurentPolyZ shifted(const BosonState& s, int sign) const;
  GradedPoly phistar_coeff(const LaurentPolyZ& shifted, int k) const;
  GradedPoly phi_coeff(const LaurentPolyZ& shifted, int k) const;

  RingPtr ring_;
  int p_;
  std::vector<GradedPoly> s_mxy_, s_pxy_, s_mx_;
  GradedPoly zero_;
  mutable std::mutex mu_;
  mutable std::map<FockMonomial, GradedPoly> memo_;
};

/// param * phi_{-phi_index} phistar_{-phistar_index}
struct Bilinear {
  int param;
  int phi_index;
  int phistar_index;
};

/// exp(sum_r a_r phi_{-i_r} phistar_{-j_r}) . 1 expanded term by term on
/// the Fock side, each monomial embedded by iterated mode action.
BosonState tau_direct(const BosonSpace& space, const std::vector<Bilinear>& gens);

/// exp(sum_{j=1}^{s} a_j phi_{-j} phistar_0) . 1 in closed form;
/// `a[j-1]` is the ring index of a_j.
BosonState tau_th1(const BosonSpace& space, const std::vector<int>& a);

/// exp(a phi_{-j} phistar_{-1}) . 1 in closed form.
BosonState tau_th2(const BosonSpace& space, int a, int j);

/// exp(a phi_{-s} phistar_{-t}) . 1 in closed form.
BosonState tau_general(const BosonSpace& space, int a, int s, int t);

/// exp(d phi_{-j} phistar_{-k}) exp(c phi_{-i} phistar_{-l}) . 1 in the
/// displayed closed form, k >= l >= 0.
BosonState tau_two_factor(const BosonSpace& space, int c, int d, int i, int j, int k, int l);

/// A_{s,t} = sum_{m=0}^{t} S_m(x+y) S_{s+t-m}(-x-y)
GradedPoly a_st(const BosonSpace& space, int s, int t);

/// Q_t(z) = sum_{m=0}^{t} S_m(x+y) z^{-t-1+m}
LaurentPolyZ q_series(const BosonSpace& space, int t);

/// -sum_n p_n / n with p_n = sum_e e x_e [z^{-e}] W^n, for nilpotent W.
GradedPoly power_sum_exponent(const BosonSpace& space, const LaurentPolyZ& w);

/// (-1)^n n! p^n S_n(-x); throws "p-window overflow" for n > C.
BosonState phistar_zero_power(const BosonSpace& space, int n);
/// (-1)^n n! p^n S*_n; throws "p-window overflow" for n > C.
BosonState phistar_minus1_power(const BosonSpace& space, int n);

/// n! sum_i C(n,i) (-1)^i S_{j-1}(-x-y)^i (S_{j+1}(-x-y) + S_1(x+y) S_j(-x-y))^{n-i} S*_i
BosonState phi_phistar_power_closed(const BosonSpace& space, int n, int j);

/// n-fold application of a single mode to 1.
BosonState mode_power(const BosonSpace& space, const Mode& m, int n, const BosonState& s);

}  // namespace btau
