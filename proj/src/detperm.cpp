#include "btau/detperm.hpp"

#include <algorithm>
#include <bit>

namespace btau {

RationalMatrix::RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw Error("negative matrix size");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n_) throw Error("matrix is not square");
    for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::size_t RationalMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

Rational det_exact(const RationalMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    scale *= l;
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

Rational perm_exact(const RationalMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  if (n > 30) throw Error("permanent size too large");
  std::vector<Rational> row_sum(static_cast<std::size_t>(n), 0);
  Rational total = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < n; ++i) {
      if (added) row_sum[i] += m.at(i, col);
      else row_sum[i] -= m.at(i, col);
    }
    Rational prod = 1;
    for (const auto& s : row_sum) {
      prod *= s;
      if (prod == 0) break;
    }
    if (std::popcount(gray) % 2 == 0) total += prod;
    else total -= prod;
  }
  return n % 2 == 0 ? total : Rational(-total);
}

void PointConfig::validate() const {
  if (z.size() != w.size()) throw Error("pole configuration: z and w differ in length");
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (z[i] == w[j]) throw Error("pole configuration: z_" + std::to_string(i + 1) + " = w_" + std::to_string(j + 1));
      if (i < j && z[i] == z[j]) throw Error("pole configuration: repeated z");
      if (i < j && w[i] == w[j]) throw Error("pole configuration: repeated w");
    }
  }
}

PointConfig random_config(int n, std::mt19937_64& rng, long range) {
  if (n < 0 || range <= 0 || 2 * range + 1 < 2L * n) throw Error("cannot draw point configuration");
  auto draw = [&] {
    const long den = static_cast<long>(rng() % 4) + 1;
    const auto span = static_cast<std::uint64_t>(2 * range * den + 1);
    return ratio(static_cast<long>(rng() % span) - range * den, den);
  };
  for (;;) {
    PointConfig p;
    for (int i = 0; i < n; ++i) {
      p.z.push_back(draw());
      p.w.push_back(draw());
    }
    try {
      p.validate();
      return p;
    } catch (const Error&) {
    }
  }
}

RationalMatrix cauchy_matrix(const PointConfig& pts, int power) {
  pts.validate();
  const int n = pts.size();
  RationalMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational d = pts.z[i] - pts.w[j];
      Rational e = 1;
      for (int k = 0; k < power; ++k) e *= d;
      c.at(i, j) = 1 / e;
    }
  }
  return c;
}

Rational cauchy_det(const PointConfig& pts) {
  pts.validate();
  const int n = pts.size();
  Rational num = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  Rational den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i < j) num *= (pts.z[i] - pts.z[j]) * (pts.w[i] - pts.w[j]);
      den *= pts.z[i] - pts.w[j];
    }
  }
  return num / den;
}

BorchardtReport borchardt_verify(const PointConfig& pts) {
  BorchardtReport r;
  r.n = pts.size();
  const RationalMatrix c = cauchy_matrix(pts);
  const Rational d = det_exact(c);
  r.lhs = det_exact(cauchy_matrix(pts, 2));
  r.rhs = d * perm_exact(c);
  r.cauchy = cauchy_det(pts);
  r.det_matches = d == r.cauchy;
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace btau
