#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "btau/checks.hpp"
#include "btau/detperm.hpp"
#include "support.hpp"

using namespace btau;

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

std::int64_t cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const std::int64_t term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

std::int64_t permutation_sum_perm(const IntMatrix& m) {
  std::vector<std::size_t> sigma(m.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < m.size(); ++i) prod *= m[i][sigma[i]];
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

IntMatrix random_int_matrix(Rng& rng, int n, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (auto& row : m)
    for (auto& e : row) e = dist(rng);
  return m;
}

RationalMatrix to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (auto e : row) r.emplace_back(static_cast<long>(e));
    rows.push_back(r);
  }
  return RationalMatrix::from_rows(rows);
}

PointConfig points(std::vector<long> z, std::vector<long> w) {
  PointConfig p;
  for (long v : z) p.z.emplace_back(v);
  for (long v : w) p.w.emplace_back(v);
  return p;
}

}  // namespace

TEST_CASE("small determinants and permanents") {
  const RationalMatrix id = RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(det_exact(id) == 1);
  CHECK(perm_exact(id) == 1);
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(det_exact(m) == -2);
  CHECK(perm_exact(m) == 10);
  CHECK(det_exact(RationalMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(RationalMatrix::from_rows({{ratio(1, 2), ratio(1, 3)}, {ratio(1, 4), ratio(1, 5)}})) == ratio(1, 60));
  CHECK(det_exact(RationalMatrix(0)) == 1);
  CHECK(error_message([] { RationalMatrix::from_rows({{1, 2}, {3}}); }) == "matrix is not square");
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const IntMatrix m = random_int_matrix(rng, n, 9);
    REQUIRE(det_exact(to_rational(m)) == static_cast<long>(cofactor_det(m)));
  }
}

TEST_CASE("Ryser permanent matches the permutation sum") {
  Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const IntMatrix m = random_int_matrix(rng, n, 9);
    REQUIRE(perm_exact(to_rational(m)) == static_cast<long>(permutation_sum_perm(m)));
  }
}

TEST_CASE("Cauchy determinant and Borchardt's identity on fixed points") {
  const PointConfig one = points({0}, {1});
  CHECK(cauchy_det(one) == -1);
  const BorchardtReport r1 = borchardt_verify(one);
  CHECK(r1.lhs == 1);
  CHECK(r1.equal);

  const PointConfig two = points({0, 1}, {2, 3});
  CHECK(cauchy_det(two) == det_exact(cauchy_matrix(two)));
  const BorchardtReport r2 = borchardt_verify(two);
  CHECK(r2.equal);
  CHECK(r2.det_matches);
  CHECK(r2.lhs == det_exact(cauchy_matrix(two, 2)));
}

TEST_CASE("Borchardt's identity on random configurations") {
  Rng rng(303);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const PointConfig pts = random_config(n, rng, 20);
      const BorchardtReport r = borchardt_verify(pts);
      CHECK(r.equal);
      CHECK(r.det_matches);
    }
  }
}

TEST_CASE("Borchardt sides transform with the permutation sign") {
  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    PointConfig pts = random_config(5, rng);
    const BorchardtReport base = borchardt_verify(pts);
    const Rational perm = perm_exact(cauchy_matrix(pts));

    std::swap(pts.z[0], pts.z[3]);
    BorchardtReport r = borchardt_verify(pts);
    CHECK(r.lhs == -base.lhs);
    CHECK(r.rhs == -base.rhs);
    CHECK(r.equal);
    CHECK(perm_exact(cauchy_matrix(pts)) == perm);

    std::swap(pts.w[1], pts.w[4]);
    r = borchardt_verify(pts);
    CHECK(r.lhs == base.lhs);
    CHECK(r.equal);

    std::rotate(pts.z.begin(), pts.z.begin() + 1, pts.z.begin() + 3);
    r = borchardt_verify(pts);
    CHECK(r.lhs == base.lhs);
    CHECK(r.equal);
    CHECK(perm_exact(cauchy_matrix(pts)) == perm);
  }
}

TEST_CASE("degenerate pole configurations are rejected") {
  CHECK(starts_with(error_message([] { points({1, 1}, {2, 3}).validate(); }), "pole configuration"));
  CHECK(starts_with(error_message([] { points({1, 2}, {3, 3}).validate(); }), "pole configuration"));
  CHECK(starts_with(error_message([] { cauchy_det(points({1, 2}, {2, 3})); }), "pole configuration"));
  CHECK(starts_with(error_message([] { borchardt_verify(points({1}, {1})); }), "pole configuration"));
  CHECK(starts_with(error_message([] { points({1, 2}, {3}).validate(); }), "pole configuration"));
}

TEST_CASE("determinant and permanent checks") {
  Rng rng(505);
  CHECK(check_det_perm_examples().pass);
  for (int n = 1; n <= 5; ++n) {
    CHECK(check_borchardt(rng, n, 20).pass);
    CHECK(check_cauchy(rng, n, 20).pass);
  }
  const Outcome rec = borchardt_record(points({0, 1}, {2, 3}));
  CHECK(rec.pass);
  CHECK(rec.detail["n"] == 2);
  CHECK(rec.detail["equal"] == true);
}
