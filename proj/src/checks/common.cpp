#include <algorithm>

#include "btau/checks.hpp"

namespace btau {

void Outcome::merge(const Outcome& o, const std::string& context) {
  if (!o.pass) fail(context + ": " + o.witness);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Outcome compare_poly(const GradedPoly& lhs, const GradedPoly& rhs) {
  Outcome o;
  const GradedPoly diff = lhs - rhs;
  if (!diff.is_zero()) {
    const Monomial& m = diff.terms().front().mono;
    o.fail(monomial_to_string(*lhs.ring(), m) + ": lhs=" + to_string(lhs.coeff(m)) + " rhs=" + to_string(rhs.coeff(m)));
  }
  return o;
}

Outcome expect_zero_through(const GradedPoly& f, int max_degree) {
  Outcome o;
  for (const auto& t : f.terms()) {
    if (graded_degree(*f.ring(), t.mono) <= max_degree) {
      o.fail(monomial_to_string(*f.ring(), t.mono) + ": coefficient " + to_string(t.coeff) + ", expected 0");
      break;
    }
  }
  return o;
}

Outcome compare_series(const QSeries& lhs, const QSeries& rhs) {
  Outcome o;
  const int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k) {
    if (lhs[k] != rhs[k]) {
      o.fail("q^" + std::to_string(k) + ": lhs=" + to_string(lhs[k]) + " rhs=" + to_string(rhs[k]));
      break;
    }
  }
  return o;
}

Outcome compare_fock(const FockVector& lhs, const FockVector& rhs) {
  Outcome o;
  const FockVector diff = lhs - rhs;
  if (!diff.is_zero()) {
    const FockMonomial& m = diff.terms().begin()->first;
    o.fail(m.to_string() + ": lhs=" + to_string(lhs.coeff(m)) + " rhs=" + to_string(rhs.coeff(m)));
  }
  return o;
}

Outcome compare_tensor(const FockTensor& lhs, const FockTensor& rhs) {
  Outcome o;
  const FockTensor diff = lhs - rhs;
  if (!diff.is_zero()) {
    const auto& [key, c] = *diff.terms().begin();
    o.fail(key.first.to_string() + " (x) " + key.second.to_string() + ": lhs=" + to_string(lhs.coeff(key.first, key.second)) +
           " rhs=" + to_string(rhs.coeff(key.first, key.second)));
  }
  return o;
}

Rational random_rational(Rng& rng, long num_range, long den_max) {
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * num_range + 1)) - num_range;
  const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(den_max)) + 1;
  return ratio(num, den);
}

namespace {

Rational random_nonzero(Rng& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (r != 0) return r;
  }
}

}  // namespace

FockVector random_fock_vector(Rng& rng, int max_degree, int min_charge, int max_charge, int terms) {
  std::vector<std::vector<FockMonomial>> pools;
  for (int l = min_charge; l <= max_charge; ++l) pools.push_back(enumerate_monomials(l, max_degree));
  for (;;) {
    FockVector v;
    for (int t = 0; t < terms; ++t) {
      const auto& pool = pools[rng() % pools.size()];
      if (!pool.empty()) v.add(pool[rng() % pool.size()], random_nonzero(rng));
    }
    if (!v.is_zero()) return v;
  }
}

BosonState random_boson_state(const BosonSpace& space, Rng& rng, int max_degree, int p_range, int terms) {
  const RingPtr& ring = space.ring();
  for (;;) {
    PolyBuilder b(ring);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      m.e[static_cast<std::size_t>(space.p_var())] =
          static_cast<std::int8_t>(static_cast<int>(rng() % static_cast<std::uint64_t>(2 * p_range + 1)) - p_range);
      int left = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
      while (left > 0) {
        const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(left)) + 1;
        const int var = rng() % 2 ? space.x_var(n) : space.y_var(n);
        ++m.e[static_cast<std::size_t>(var)];
        left -= n;
      }
      b.add(m, random_nonzero(rng));
    }
    GradedPoly s = std::move(b).build();
    if (!s.is_zero()) return s;
  }
}

}  // namespace btau
