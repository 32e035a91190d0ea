#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "btau/rational.hpp"

namespace btau {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int size() const { return n_; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<Rational> entries_;
};

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det_exact(const RationalMatrix& m);
/// Ryser's formula with Gray-code subset order.
Rational perm_exact(const RationalMatrix& m);

/// Points z_1..z_n, w_1..w_n with z_i, w_j pairwise distinct and z_i != w_j.
struct PointConfig {
  std::vector<Rational> z, w;

  int size() const { return static_cast<int>(z.size()); }
  /// Throws Error("pole configuration") on a repeated or colliding point.
  void validate() const;
};

/// Random rationals k/d in [-range, range] with d <= 4, redrawn until valid.
PointConfig random_config(int n, std::mt19937_64& rng, long range = 50);

/// Entries 1 / (z_i - w_j)^power.
RationalMatrix cauchy_matrix(const PointConfig& pts, int power = 1);
/// (-1)^{n(n-1)/2} prod_{i<j} (z_i - z_j)(w_i - w_j) / prod_{i,j} (z_i - w_j)
Rational cauchy_det(const PointConfig& pts);

struct BorchardtReport {
  int n = 0;
  Rational lhs;       // det(C^{(2)})
  Rational rhs;       // det(C) perm(C)
  Rational cauchy;    // closed form of det(C)
  bool det_matches = false;
  bool equal = false;
};

BorchardtReport borchardt_verify(const PointConfig& pts);

}  // namespace btau
