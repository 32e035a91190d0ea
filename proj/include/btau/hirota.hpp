#pragma once

#include <vector>

#include "btau/fms.hpp"

namespace btau {

/// Elements of B (x) B written as polynomials in primed and double-primed
/// copies of the boson variables.
using BosonTensor = GradedPoly;

/// Numeric assignment for the averaged/relative coordinates
/// x = (x' - x'')/2, xbar = (x' + x'')/2 (and likewise y). Entry n-1 holds
/// the value of index n; missing entries are zero.
struct HirotaPoint {
  std::vector<Rational> x, xbar, y, ybar;
};

class TensorSpace {
 public:
  explicit TensorSpace(const BosonSpace& base);

  const BosonSpace& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  /// Ring holding only the formal parameters; values at points live here.
  const RingPtr& param_ring() const { return param_ring_; }

  BosonTensor left(const BosonState& s) const;
  BosonTensor right(const BosonState& s) const;
  /// a' b''
  BosonTensor tensor(const BosonState& a, const BosonState& b) const;
  /// Image of a Fock tensor; pairs whose images leave the caps are dropped.
  BosonTensor embed(const FockTensor& t) const;

  /// Res_z p' p''^{-1} exp(sum (x'_n - x''_n + y'_n - y''_n) z^n)
  ///   (sum k x'_k z^{k-1} + sum d/dx'_k z^{-k-1} + p' d/dp' z^{-1})
  ///   exp(-sum (d/dx'_n - d/dx''_n - d/dy'_n + d/dy''_n) z^{-n} / n)  applied to t1' t2''.
  /// With beta_reduction the y variables and y-derivatives are dropped and
  /// both inputs must be free of y.
  BosonTensor omega_residue(const BosonState& t1, const BosonState& t2, bool beta_reduction = false) const;

  /// sum_i (phistar_i t1) (x) (phi_{-i} t2) through mode-by-mode action.
  BosonTensor mode_sum(const BosonState& t1, const BosonState& t2) const;

  /// Sets p' = p'' = 1 and x' = xbar + x, x'' = xbar - x, y' = ybar + y,
  /// y'' = ybar - y; the result is a polynomial in the parameters.
  GradedPoly at_point(const BosonTensor& t, const HirotaPoint& pt) const;

 private:
  const BosonSpace& base_;
  RingPtr ring_, param_ring_;
  std::vector<int> to_left_, to_right_, to_param_;
  int p1_, p2_;
  std::vector<int> x1_, x2_, y1_, y2_;  // index n-1
};

/// Left side of the Schur-expanded bilinear identity
///   sum_{i,j>=0} S_i(2x+2y) [(j-i)(x_{j-i} + xbar_{j-i}) + (d/dlambda_{i-j} + d/dxbar_{i-j})/2]
///     S_j(-D~lambda + D~mu) exp(sum x_l d/dlambda_l + y_l d/dmu_l)
///     tau(xbar - lambda, ybar - mu) tau(xbar + lambda, ybar + mu) |_{lambda = mu = 0}
/// at a rational point, as a polynomial in the formal parameters. tau must
/// lie in the p^0 sector and be an exact polynomial (no degree truncation).
GradedPoly hirota_schur_form(const TensorSpace& space, const BosonState& tau, const HirotaPoint& pt);

/// Functions of two variables u, v (weight 1) with parameter coefficients.
struct BivariateRing {
  RingPtr ring;
  int u, v;
};

BivariateRing make_bivariate_ring(int degree, const std::vector<std::string>& params, int param_order);

/// log tau restricted to x_1 = u, y_1 = v and every other variable zero.
/// tau must lie in the p^0 sector with constant term 1.
GradedPoly restricted_log(const BosonState& tau, const BivariateRing& target);

/// u (-g_uv + g_vv) + g_u
GradedPoly pde_residual_first(const GradedPoly& g, const BivariateRing& r);
/// f_uu - 2 f_uv + f_vv
GradedPoly pde_residual_harmonic(const GradedPoly& f, const BivariateRing& r);

/// f(u, v) = ftilde(t, s) with t = u - v, s = u + v: returns 4 ftilde_tt
/// rewritten in u, v.
GradedPoly harmonic_via_ts(const GradedPoly& f, const BivariateRing& r);

}  // namespace btau
