#include "btau/qseries.hpp"

#include <algorithm>

namespace btau {

QSeries::QSeries(int order) {
  if (order < 0) throw Error("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

QSeries QSeries::one(int order) { return monomial(order, 0); }

QSeries QSeries::monomial(int order, int power, const Rational& c) {
  QSeries s(order);
  if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

QSeries QSeries::truncated(int order) const {
  QSeries s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

QSeries QSeries::operator+(const QSeries& other) const {
  QSeries s(std::min(order(), other.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
  return s;
}

QSeries QSeries::operator-(const QSeries& other) const {
  QSeries s(std::min(order(), other.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
  return s;
}

QSeries QSeries::operator-() const { return *this * Rational(-1); }

QSeries QSeries::operator*(const QSeries& other) const {
  QSeries s(std::min(order(), other.order()));
  const int n = s.order();
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      s.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return s;
}

QSeries QSeries::operator*(const Rational& scalar) const {
  QSeries s(order());
  for (int k = 0; k <= order(); ++k) s.coeffs_[k] = coeffs_[k] * scalar;
  return s;
}

QSeries QSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error("non-invertible series");
  const int n = order();
  QSeries inv(n);
  const Rational c0inv = 1 / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (coeffs_[j] != 0) acc += coeffs_[j] * inv.coeffs_[k - j];
    }
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

std::string QSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += btau::to_string(coeffs_[k]);
  }
  return out;
}

QSeries pochhammer(const Rational& a, int shift, int m, int order) {
  QSeries acc = QSeries::one(order);
  for (int j = 0; j < m; ++j) {
    acc = acc * (QSeries::one(order) - QSeries::monomial(order, shift + j, a));
  }
  return acc;
}

QSeries q_pochhammer(int m, int order) { return pochhammer(1, 1, m, order); }

QSeries q_pochhammer_inf(int order) { return q_pochhammer(order, order); }

}  // namespace btau
