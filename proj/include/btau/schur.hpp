#pragma once

#include <vector>

#include "btau/poly.hpp"

namespace btau {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class Convention {
  power_sum,  // t_n variables (t_n = sum_i x_i^n / n)
  direct,     // x_n, y_n of the bosonic Fock space
};

/// Which variable sum the generating function exp(sign * sum vars_n z^n)
/// is built from.
struct ArgSignature {
  int sign = 1;
  bool uses_x = true;
  bool uses_y = false;
  Convention convention = Convention::direct;
};

inline constexpr ArgSignature kMinusX{-1, true, false, Convention::direct};
inline constexpr ArgSignature kPlusXY{1, true, true, Convention::direct};
inline constexpr ArgSignature kMinusXY{-1, true, true, Convention::direct};
inline constexpr ArgSignature kPowerSum{1, true, false, Convention::power_sum};

/// Ring with variables t1..tD, used for power-sum demonstrations.
RingPtr make_power_sum_ring(int degree);

/// z^0..z^kmax coefficients of exp(sum_{n>=1} a[n] z^n); a[0] is ignored.
std::vector<GradedPoly> exp_series(const RingPtr& ring, const std::vector<GradedPoly>& a, int kmax);

/// S_0..S_kmax for the given signature.
std::vector<GradedPoly> elementary_schur_series(int kmax, const ArgSignature& sig, const RingPtr& ring);

/// S_k; zero for k < 0, one for k = 0.
GradedPoly elementary_schur(int k, const ArgSignature& sig, const RingPtr& ring);

/// Jacobi-Trudi determinant det(S_{lambda_i - i + j}).
GradedPoly schur_lambda(const Partition& lambda, const ArgSignature& sig, const RingPtr& ring);

/// S*_0..S*_nmax: coefficients of
/// exp(-sum_n sum_{0<=i<=n} C(n,i) S_1(x+y)^{n-i} (n+i) x_{n+i} / n * z^n).
std::vector<GradedPoly> sstar_series(int nmax, const RingPtr& ring);
GradedPoly sstar(int n, const RingPtr& ring);

/// Determinant of a square matrix of polynomials by permutation expansion.
GradedPoly poly_det(const std::vector<std::vector<GradedPoly>>& m, const RingPtr& ring);

}  // namespace btau
