#include "btau/schur.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace btau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

RingPtr make_power_sum_ring(int degree) {
  std::vector<Variable> vars;
  for (int n = 1; n <= degree; ++n) vars.push_back({"t" + std::to_string(n), VarKind::graded, n});
  return make_ring(std::move(vars), Caps{degree, 0, 0});
}

std::vector<GradedPoly> exp_series(const RingPtr& ring, const std::vector<GradedPoly>& a, int kmax) {
  // k E_k = sum_{n=1}^{k} n a_n E_{k-n}
  std::vector<GradedPoly> e;
  e.reserve(static_cast<std::size_t>(std::max(kmax, 0)) + 1);
  e.push_back(GradedPoly::constant(ring, 1));
  for (int k = 1; k <= kmax; ++k) {
    PolyBuilder b(ring);
    for (int n = 1; n <= k && n < static_cast<int>(a.size()); ++n) {
      if (a[static_cast<std::size_t>(n)].is_zero()) continue;
      b.add(a[static_cast<std::size_t>(n)] * e[static_cast<std::size_t>(k - n)], ratio(n, k));
    }
    e.push_back(std::move(b).build());
  }
  return e;
}

namespace {

GradedPoly var_or_zero(const RingPtr& ring, const std::string& name) {
  auto idx = ring->find(name);
  return idx ? GradedPoly::variable(ring, *idx) : GradedPoly(ring);
}

}  // namespace

std::vector<GradedPoly> elementary_schur_series(int kmax, const ArgSignature& sig, const RingPtr& ring) {
  if (!sig.uses_x && !sig.uses_y) throw Error("signature must use x or y");
  if (sig.sign != 1 && sig.sign != -1) throw Error("signature sign must be +1 or -1");
  std::vector<GradedPoly> a(static_cast<std::size_t>(std::max(kmax, 0)) + 1, GradedPoly(ring));
  for (int n = 1; n <= kmax; ++n) {
    GradedPoly s(ring);
    if (sig.convention == Convention::power_sum) {
      if (sig.uses_y) throw Error("power-sum convention has no y variables");
      s = var_or_zero(ring, "t" + std::to_string(n));
    } else {
      if (sig.uses_x) s += var_or_zero(ring, "x" + std::to_string(n));
      if (sig.uses_y) s += var_or_zero(ring, "y" + std::to_string(n));
    }
    a[static_cast<std::size_t>(n)] = s * Rational(sig.sign);
  }
  return exp_series(ring, a, kmax);
}

GradedPoly elementary_schur(int k, const ArgSignature& sig, const RingPtr& ring) {
  if (k < 0) return GradedPoly(ring);
  return elementary_schur_series(k, sig, ring)[static_cast<std::size_t>(k)];
}

GradedPoly poly_det(const std::vector<std::vector<GradedPoly>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return GradedPoly::constant(ring, 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PolyBuilder acc(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    GradedPoly prod = GradedPoly::constant(ring, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m[i][perm[i]];
    acc.add(prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(acc).build();
}

GradedPoly schur_lambda(const Partition& lambda, const ArgSignature& sig, const RingPtr& ring) {
  const int l = lambda.length();
  const int kmax = lambda.parts().empty() ? 0 : lambda.parts().front() + l;
  const auto s = elementary_schur_series(kmax, sig, ring);
  auto entry = [&](int k) { return k < 0 || k > kmax ? GradedPoly(ring) : s[static_cast<std::size_t>(k)]; };
  std::vector<std::vector<GradedPoly>> m(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[static_cast<std::size_t>(i)].push_back(entry(lambda.parts()[static_cast<std::size_t>(i)] - i + j));
  }
  return poly_det(m, ring);
}

std::vector<GradedPoly> sstar_series(int nmax, const RingPtr& ring) {
  const GradedPoly s1 = var_or_zero(ring, "x1") + var_or_zero(ring, "y1");
  std::vector<GradedPoly> a(static_cast<std::size_t>(std::max(nmax, 0)) + 1, GradedPoly(ring));
  for (int n = 1; n <= nmax; ++n) {
    PolyBuilder b(ring);
    for (int i = 0; i <= n; ++i) {
      const GradedPoly x = var_or_zero(ring, "x" + std::to_string(n + i));
      if (x.is_zero()) continue;
      b.add(pow(s1, n - i) * x, -binomial(n, i) * ratio(n + i, n));
    }
    a[static_cast<std::size_t>(n)] = std::move(b).build();
  }
  return exp_series(ring, a, nmax);
}

GradedPoly sstar(int n, const RingPtr& ring) {
  if (n < 0) return GradedPoly(ring);
  return sstar_series(n, ring)[static_cast<std::size_t>(n)];
}

}  // namespace btau
