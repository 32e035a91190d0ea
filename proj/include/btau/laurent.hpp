#pragma once

#include <map>
#include <vector>

#include "btau/poly.hpp"

namespace btau {

/// Finite Laurent polynomial in an auxiliary variable z with GradedPoly
/// coefficients.
class LaurentPolyZ {
 public:
  LaurentPolyZ() = default;
  explicit LaurentPolyZ(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::map<int, GradedPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;

  /// Coefficient of z^k; the zero polynomial outside the support.
  GradedPoly coeff(int k) const;
  void add(int k, const GradedPoly& c);

  LaurentPolyZ operator+(const LaurentPolyZ& other) const;
  LaurentPolyZ operator*(const LaurentPolyZ& other) const;
  LaurentPolyZ operator*(const GradedPoly& c) const;
  /// Multiplies by z^k.
  LaurentPolyZ shifted(int k) const;

  bool operator==(const LaurentPolyZ& other) const;

 private:
  RingPtr ring_;
  std::map<int, GradedPoly> terms_;
};

inline GradedPoly z_coeff(const LaurentPolyZ& f, int k) { return f.coeff(k); }

/// One additive shift var -> var + c * z^{z_power}.
struct VarShift {
  int var;
  Rational c;
  int z_power;
};

/// Expands f at the shifted arguments, collected by powers of z.
LaurentPolyZ shift_substitute(const GradedPoly& f, const std::vector<VarShift>& shifts);

/// sum_{k=0}^{K} coeffs[k] z^{k * step}.
LaurentPolyZ series_in_z(const RingPtr& ring, const std::vector<GradedPoly>& coeffs, int step = 1);

}  // namespace btau
