#include "btau/qdim.hpp"

#include <cstdlib>
#include <functional>

#include "btau/fock.hpp"

namespace btau {

namespace {

// f / (1 - q^j), in place.
void divide_one_minus(std::vector<Rational>& f, int j) {
  for (std::size_t k = static_cast<std::size_t>(j); k < f.size(); ++k) f[k] += f[k - static_cast<std::size_t>(j)];
}

// 1/(q;q)_m for m = 0..order, each truncated at `order`.
std::vector<std::vector<Rational>> inverse_pochhammers(int order) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur(static_cast<std::size_t>(order) + 1, 0);
  cur[0] = 1;
  out.push_back(cur);
  for (int m = 1; m <= order; ++m) {
    divide_one_minus(cur, m);
    out.push_back(cur);
  }
  return out;
}

// sum_m q^{e(m)} / ((q)_m (q)_{m+shift}); terms with e(m) > order vanish.
QSeries pochhammer_sum(int order, int shift, const std::function<long(int)>& exponent) {
  const auto inv = inverse_pochhammers(order + shift);
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, 0);
  for (int m = 0;; ++m) {
    const long e = exponent(m);
    if (e > order) {
      // Exponents grow with m in every sum used here.
      if (m > order + 1) break;
      continue;
    }
    const auto& a = inv[static_cast<std::size_t>(std::min(m, order))];
    const auto& b = inv[static_cast<std::size_t>(std::min(m + shift, order + shift))];
    for (int i = 0; i + e <= order; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j + e <= order; ++j) {
        acc[static_cast<std::size_t>(i + j + e)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      }
    }
  }
  return QSeries(order, std::move(acc));
}

// sum_{s >= start} sign(s) q^{e(s)}, e increasing in s.
QSeries theta_sum(int order, int start, const std::function<int(int)>& sign, const std::function<long(int)>& exponent) {
  QSeries out(order);
  for (int s = start;; ++s) {
    const long e = exponent(s);
    if (e > order) break;
    out = out + QSeries::monomial(order, static_cast<int>(e), sign(s));
  }
  return out;
}

int parity_sign(int s) { return s % 2 == 0 ? 1 : -1; }

}  // namespace

QSeries class_gf(const PartitionClassSpec& spec, int order) {
  if (spec.k < 0 || spec.s < 0) throw Error("class needs k >= 0 and s >= 0");
  const long lead = spec.strict ? static_cast<long>(2 * spec.k + spec.s - 1) * spec.s / 2 : static_cast<long>(spec.k) * spec.s;
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, 0);
  if (lead <= order) c[static_cast<std::size_t>(lead)] = 1;
  for (int j = 1; j <= spec.s; ++j) divide_one_minus(c, j);
  return QSeries(order, std::move(c));
}

QSeries class_gf_enum(const PartitionClassSpec& spec, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, 0);
  std::function<void(int, int, int)> walk = [&](int left, int min_part, int weight) {
    if (left == 0) {
      c[static_cast<std::size_t>(weight)] += 1;
      return;
    }
    // Remaining parts are all >= min_part.
    for (int part = min_part; weight + part * left <= order; ++part) {
      walk(left - 1, spec.strict ? part + 1 : part, weight + part);
    }
  };
  walk(spec.s, spec.k, 0);
  return QSeries(order, std::move(c));
}

std::string space_name(Space s) {
  switch (s) {
    case Space::M: return "M";
    case Space::Fbar: return "Fbar";
    case Space::F: return "F";
  }
  return "?";
}

QSeries qdim_sum(Space space, int l, int order) {
  const long a = std::labs(l);
  switch (space) {
    case Space::M:
      return pochhammer_sum(order, static_cast<int>(a), [&](int m) { return m + (l >= 0 ? l : 0); });
    case Space::Fbar:
      return pochhammer_sum(order, static_cast<int>(a), [&](int m) { return static_cast<long>(m) * m + (a + 1) * m + a * (a + 1) / 2; });
    case Space::F:
      return pochhammer_sum(order, static_cast<int>(a), [&](int m) { return static_cast<long>(m) * m + m * a + static_cast<long>(l) * (l + 1) / 2; });
  }
  throw Error("unknown space");
}

QSeries qdim_F_closed(int l, int order) {
  const long lead = static_cast<long>(l) * (l + 1) / 2;
  const QSeries inv = q_pochhammer_inf(order).inverse();
  return lead > order ? QSeries(order) : QSeries::monomial(order, static_cast<int>(lead)) * inv;
}

QSeries qdim_closed(Space space, int l, int order) {
  const long a = std::labs(l);
  const QSeries inv = q_pochhammer_inf(order).inverse();
  switch (space) {
    case Space::M: {
      const int delta = l >= 0 ? 1 : 0;
      return inv * inv * theta_sum(order, 0, parity_sign, [&](int s) { return static_cast<long>(s) * (s + 1) / 2 + (s + delta) * a; });
    }
    case Space::Fbar:
      return inv * theta_sum(order, static_cast<int>(a), [&](int s) { return parity_sign(s + l); },
                             [](int s) { return static_cast<long>(s) * (s + 1) / 2; });
    case Space::F: return qdim_F_closed(l, order);
  }
  throw Error("unknown space");
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::first: return "identity-1";
    case Identity::second: return "identity-2";
    case Identity::euler: return "euler-family";
    case Identity::corollary: return "corollary";
  }
  return "?";
}

Identity parse_identity(const std::string& name) {
  if (name == "identity-1" || name == "1") return Identity::first;
  if (name == "identity-2" || name == "2") return Identity::second;
  if (name == "euler" || name == "euler-family") return Identity::euler;
  if (name == "corollary") return Identity::corollary;
  throw Error("unknown identity " + name);
}

QDimReport compare(std::string tag, int l, const QSeries& lhs, const QSeries& rhs) {
  QDimReport r{std::move(tag), l, std::min(lhs.order(), rhs.order()), lhs, rhs, -1};
  while (r.equal_through < r.order && lhs[r.equal_through + 1] == rhs[r.equal_through + 1]) ++r.equal_through;
  return r;
}

QDimReport verify_identity(Identity id, int l, int order) {
  if (id != Identity::euler && l < 0) throw Error("identity requires l >= 0");
  const QSeries inv = q_pochhammer_inf(order).inverse();
  auto theta = [&] {
    return theta_sum(order, 0, parity_sign, [&](int s) { return static_cast<long>(s) * (s + 1) / 2 + static_cast<long>(s) * l; });
  };
  auto second_sum = [&] { return pochhammer_sum(order, l, [&](int m) { return static_cast<long>(m) * m + (l + 1L) * m; }); };
  const std::string tag = identity_name(id);
  switch (id) {
    case Identity::first:
      return compare(tag, l, pochhammer_sum(order, l, [](int m) { return m; }), inv * inv * theta());
    case Identity::second:
      return compare(tag, l, second_sum(), inv * theta());
    case Identity::euler: {
      const long a = std::labs(l);
      return compare(tag, l, pochhammer_sum(order, static_cast<int>(a), [&](int m) { return static_cast<long>(m) * m + m * a; }), inv);
    }
    case Identity::corollary:
      return compare(tag, l, pochhammer_sum(order, l, [](int m) { return m; }), inv * second_sum());
  }
  throw Error("unknown identity");
}

QDimReport verify_space(Space space, int l, int order) {
  return compare(space_name(space), l, qdim_sum(space, l, order), qdim_closed(space, l, order));
}

QSeries fock_census(int l, int order, bool flipped) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, 0);
  for (const auto& m : enumerate_monomials(flipped ? -l : l, order)) c[static_cast<std::size_t>(m.degree())] += 1;
  return QSeries(order, std::move(c));
}

int charge_convention_check(int order) {
  bool built_in = true, flipped = true;
  for (int l = -3; l <= 3; ++l) {
    const QSeries expected = qdim_sum(Space::M, l, order);
    built_in = built_in && fock_census(l, order) == expected;
    flipped = flipped && fock_census(l, order, true) == expected;
  }
  if (built_in && !flipped) return 1;
  if (flipped && !built_in) return -1;
  return 0;
}

}  // namespace btau
