#pragma once

#include <string>
#include <vector>

#include "btau/rational.hpp"

namespace btau {

/// Power series in q truncated after q^order. Binary operations return a
/// series whose order is the smaller of the two operand orders.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  QSeries(int order, std::vector<Rational> coeffs);

  static QSeries one(int order);
  /// c * q^power (zero if power exceeds the order).
  static QSeries monomial(int order, int power, const Rational& c = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QSeries truncated(int order) const;

  QSeries operator+(const QSeries& other) const;
  QSeries operator-(const QSeries& other) const;
  QSeries operator*(const QSeries& other) const;
  QSeries operator*(const Rational& scalar) const;
  QSeries operator-() const;

  /// Multiplicative inverse; throws Error("non-invertible series") when the
  /// constant term is zero.
  QSeries inverse() const;

  bool operator==(const QSeries& other) const = default;

  /// Comma-separated coefficients starting at q^0.
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// (a q^shift; q)_m = prod_{j<m} (1 - a q^{shift+j}) truncated at `order`.
QSeries pochhammer(const Rational& a, int shift, int m, int order);

/// (q;q)_m.
QSeries q_pochhammer(int m, int order);

/// (q;q)_infinity = prod_{j=1..order} (1 - q^j), exact through q^order.
QSeries q_pochhammer_inf(int order);

}  // namespace btau
