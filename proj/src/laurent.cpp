#include "btau/laurent.hpp"

#include <unordered_map>

namespace btau {

int LaurentPolyZ::min_exp() const {
  if (terms_.empty()) throw Error("empty Laurent polynomial has no support");
  return terms_.begin()->first;
}

int LaurentPolyZ::max_exp() const {
  if (terms_.empty()) throw Error("empty Laurent polynomial has no support");
  return terms_.rbegin()->first;
}

GradedPoly LaurentPolyZ::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GradedPoly(ring_) : it->second;
}

void LaurentPolyZ::add(int k, const GradedPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolyZ LaurentPolyZ::operator+(const LaurentPolyZ& other) const {
  LaurentPolyZ out = *this;
  if (!out.ring_) out.ring_ = other.ring_;
  for (const auto& [k, c] : other.terms_) out.add(k, c);
  return out;
}

LaurentPolyZ LaurentPolyZ::operator*(const LaurentPolyZ& other) const {
  LaurentPolyZ out(ring_ ? ring_ : other.ring_);
  for (const auto& [i, a] : terms_) {
    for (const auto& [j, b] : other.terms_) out.add(i + j, a * b);
  }
  return out;
}

LaurentPolyZ LaurentPolyZ::operator*(const GradedPoly& c) const {
  LaurentPolyZ out(ring_);
  for (const auto& [k, a] : terms_) out.add(k, a * c);
  return out;
}

LaurentPolyZ LaurentPolyZ::shifted(int k) const {
  LaurentPolyZ out(ring_);
  for (const auto& [i, a] : terms_) out.terms_.emplace(i + k, a);
  return out;
}

bool LaurentPolyZ::operator==(const LaurentPolyZ& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [k, c] : terms_) {
    if (k != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

LaurentPolyZ shift_substitute(const GradedPoly& f, const std::vector<VarShift>& shifts) {
  const RingPtr& ring = f.ring();
  std::vector<const VarShift*> by_var(static_cast<std::size_t>(ring->size()), nullptr);
  for (const auto& s : shifts) {
    if (s.c != 0) by_var.at(static_cast<std::size_t>(s.var)) = &s;
  }

  struct Partial {
    int z;
    Monomial mono;
    Rational c;
  };
  std::map<int, PolyBuilder> acc;
  std::vector<Partial> cur, next;
  for (const auto& t : f.terms()) {
    cur.clear();
    cur.push_back({0, t.mono, t.coeff});
    for (int v = 0; v < ring->size(); ++v) {
      const VarShift* s = by_var[static_cast<std::size_t>(v)];
      const int e = t.mono.e[static_cast<std::size_t>(v)];
      if (!s || e == 0) continue;
      if (e < 0) throw Error("cannot shift a negative power of " + ring->var(v).name);
      // (v + c z^k)^e = sum_j C(e,j) c^j z^{jk} v^{e-j}
      next.clear();
      Rational cpow = 1;
      for (int j = 0; j <= e; ++j) {
        const Rational factor = binomial(e, j) * cpow;
        for (const auto& p : cur) {
          Partial q = p;
          q.z += j * s->z_power;
          q.mono.e[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(e - j);
          q.c *= factor;
          next.push_back(std::move(q));
        }
        cpow *= s->c;
      }
      std::swap(cur, next);
    }
    for (const auto& p : cur) acc.try_emplace(p.z, ring).first->second.add(p.mono, p.c);
  }
  LaurentPolyZ out(ring);
  for (auto& [k, b] : acc) out.add(k, std::move(b).build());
  return out;
}

LaurentPolyZ series_in_z(const RingPtr& ring, const std::vector<GradedPoly>& coeffs, int step) {
  LaurentPolyZ out(ring);
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.add(static_cast<int>(k) * step, coeffs[k]);
  return out;
}

}  // namespace btau
