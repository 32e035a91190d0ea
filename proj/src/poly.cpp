#include "btau/poly.hpp"

#include <algorithm>
#include <cstring>

namespace btau {

Ring::Ring(std::vector<Variable> vars, Caps caps) : vars_(std::move(vars)), caps_(caps) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error("ring has " + std::to_string(vars_.size()) + " variables; at most " +
                std::to_string(kMaxVars) + " supported");
  }
  if (caps_.degree < 0 || caps_.p_window < 0 || caps_.param_order < 0) throw Error("negative cap");
  // Exponents are stored as int8; sums of two capped exponents must not overflow.
  if (caps_.degree > 60 || caps_.p_window > 60 || caps_.param_order > 60) throw Error("cap too large");
  for (int i = 0; i < size(); ++i) {
    const auto& v = vars_[static_cast<std::size_t>(i)];
    if (!by_name_.emplace(v.name, i).second) throw Error("duplicate variable name " + v.name);
    switch (v.kind) {
      case VarKind::graded:
        if (v.weight <= 0) throw Error("graded variable needs positive weight: " + v.name);
        graded_.push_back(i);
        break;
      case VarKind::laurent: laurent_.push_back(i); break;
      case VarKind::parameter: params_.push_back(i); break;
    }
  }
}

std::optional<int> Ring::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int Ring::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable " + std::string(name));
  return *i;
}

bool Ring::operator==(const Ring& other) const {
  if (!(caps_ == other.caps_) || vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.kind != b.kind || a.weight != b.weight) return false;
  }
  return true;
}

RingPtr make_ring(std::vector<Variable> vars, Caps caps) {
  return std::make_shared<const Ring>(std::move(vars), caps);
}

std::vector<Variable> boson_variables(int degree, std::string_view suffix) {
  std::vector<Variable> vars;
  const std::string s(suffix);
  vars.push_back({"p" + s, VarKind::laurent, 0});
  for (int n = 1; n <= degree; ++n) vars.push_back({"x" + std::to_string(n) + s, VarKind::graded, n});
  for (int n = 1; n <= degree; ++n) vars.push_back({"y" + std::to_string(n) + s, VarKind::graded, n});
  return vars;
}

std::vector<Variable> parameter_variables(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, VarKind::parameter, 0});
  return vars;
}

RingPtr make_boson_ring(Caps caps, const std::vector<std::string>& params) {
  auto vars = parameter_variables(params);
  auto xy = boson_variables(caps.degree);
  vars.insert(vars.end(), xy.begin(), xy.end());
  return make_ring(std::move(vars), caps);
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int8_t v) { return v == 0; });
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[kMaxVars / 8];
  std::memcpy(words, m.e.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

int graded_degree(const Ring& ring, const Monomial& m) {
  int d = 0;
  for (int i : ring.graded_indices()) d += ring.var(i).weight * m.e[static_cast<std::size_t>(i)];
  return d;
}

int parameter_order(const Ring& ring, const Monomial& m) {
  int d = 0;
  for (int i : ring.parameter_indices()) d += m.e[static_cast<std::size_t>(i)];
  return d;
}

bool within_caps(const Ring& ring, const Monomial& m) {
  const auto& caps = ring.caps();
  if (graded_degree(ring, m) > caps.degree) return false;
  if (parameter_order(ring, m) > caps.param_order) return false;
  for (int i : ring.laurent_indices()) {
    const int e = m.e[static_cast<std::size_t>(i)];
    if (e > caps.p_window || -e > caps.p_window) return false;
  }
  return true;
}

namespace {

// Graded-lex: higher degree first, then lexicographically larger exponent
// vectors (in ring variable order) first.
struct CanonicalLess {
  const Ring* ring;
  bool operator()(const Term& a, const Term& b) const {
    const int da = graded_degree(*ring, a.mono);
    const int db = graded_degree(*ring, b.mono);
    if (da != db) return da > db;
    for (int i = 0; i < ring->size(); ++i) {
      const auto x = a.mono.e[static_cast<std::size_t>(i)];
      const auto y = b.mono.e[static_cast<std::size_t>(i)];
      if (x != y) return x > y;
    }
    return false;
  }
};

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(a.e[i] + b.e[i]);
  return m;
}

}  // namespace

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0 || !within_caps(*ring_, m)) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const GradedPoly& p, const Rational& scale) {
  if (!(*p.ring() == *ring_)) throw Error("cap mismatch");
  for (const auto& t : p.terms()) add(t.mono, scale == 1 ? t.coeff : Rational(t.coeff * scale));
}

GradedPoly PolyBuilder::build() && { return GradedPoly::from_map(ring_, std::move(acc_)); }

GradedPoly GradedPoly::from_map(RingPtr ring, std::unordered_map<Monomial, Rational, MonomialHash> terms) {
  GradedPoly p(std::move(ring));
  p.terms_.reserve(terms.size());
  for (auto& [m, c] : terms) {
    if (c != 0 && within_caps(*p.ring_, m)) p.terms_.push_back(Term{m, std::move(c)});
  }
  p.canonicalize();
  return p;
}

void GradedPoly::canonicalize() { std::sort(terms_.begin(), terms_.end(), CanonicalLess{ring_.get()}); }

GradedPoly GradedPoly::constant(RingPtr ring, const Rational& c) {
  GradedPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

GradedPoly GradedPoly::variable(RingPtr ring, int index, int power, const Rational& c) {
  if (index < 0 || index >= ring->size()) throw Error("variable index out of range");
  Monomial m;
  m.e[static_cast<std::size_t>(index)] = static_cast<std::int8_t>(power);
  GradedPoly p(std::move(ring));
  if (c != 0 && within_caps(*p.ring_, m)) p.terms_.push_back(Term{m, c});
  return p;
}

GradedPoly GradedPoly::variable(RingPtr ring, std::string_view name, int power, const Rational& c) {
  const int idx = ring->index(name);
  return variable(std::move(ring), idx, power, c);
}

Rational GradedPoly::constant_term() const { return coeff(Monomial{}); }

Rational GradedPoly::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

int GradedPoly::max_degree() const {
  // Canonical order puts the highest degree first.
  return terms_.empty() ? -1 : graded_degree(*ring_, terms_.front().mono);
}

int GradedPoly::min_parameter_order() const {
  int best = -1;
  for (const auto& t : terms_) {
    const int o = parameter_order(*ring_, t.mono);
    if (best < 0 || o < best) best = o;
  }
  return best;
}

void GradedPoly::require_same_ring(const GradedPoly& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_ || !(*ring_ == *other.ring_)) throw Error("cap mismatch");
}

GradedPoly GradedPoly::operator+(const GradedPoly& other) const {
  require_same_ring(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  PolyBuilder b(ring_);
  b.add(*this);
  b.add(other);
  return std::move(b).build();
}

GradedPoly GradedPoly::operator-(const GradedPoly& other) const { return *this + (-other); }

GradedPoly GradedPoly::operator-() const { return *this * Rational(-1); }

GradedPoly GradedPoly::operator*(const Rational& scalar) const {
  GradedPoly out(ring_);
  if (scalar == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= scalar;
  return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& other) const {
  require_same_ring(other);
  GradedPoly out(ring_);
  if (is_zero() || other.is_zero()) return out;
  const Ring& ring = *ring_;
  const Caps& caps = ring.caps();

  struct Info {
    int degree;
    int porder;
    const Term* term;
  };
  auto infos = [&](const std::vector<Term>& ts) {
    std::vector<Info> v;
    v.reserve(ts.size());
    for (const auto& t : ts) v.push_back({graded_degree(ring, t.mono), parameter_order(ring, t.mono), &t});
    std::sort(v.begin(), v.end(), [](const Info& a, const Info& b) { return a.degree < b.degree; });
    return v;
  };
  const auto lhs = infos(terms_);
  const auto rhs = infos(other.terms_);
  const auto laurent = ring.laurent_indices();

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(lhs.size() + rhs.size());
  Rational prod;
  for (const auto& a : lhs) {
    if (a.degree + rhs.front().degree > caps.degree) break;
    for (const auto& b : rhs) {
      if (a.degree + b.degree > caps.degree) break;
      if (a.porder + b.porder > caps.param_order) continue;
      Monomial m = add_monomials(a.term->mono, b.term->mono);
      bool ok = true;
      for (int i : laurent) {
        const int e = m.e[static_cast<std::size_t>(i)];
        if (e > caps.p_window || -e > caps.p_window) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      mpq_mul(prod.get_mpq_t(), a.term->coeff.get_mpq_t(), b.term->coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(m);
      if (inserted) {
        it->second = prod;
      } else {
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
      }
    }
  }
  return from_map(ring_, std::move(acc));
}

bool GradedPoly::operator==(const GradedPoly& other) const {
  require_same_ring(other);
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

GradedPoly GradedPoly::truncated_degree(int max_degree) const {
  const Ring& ring = *ring_;
  return filtered([&](const Monomial& m) { return graded_degree(ring, m) <= max_degree; });
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.size(); ++i) {
    const int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var(i).name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_to_string(*ring_, t.mono);
    if (mono.empty()) {
      out += btau::to_string(mag);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += btau::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

GradedPoly pow(const GradedPoly& base, int n) {
  if (n < 0) throw Error("negative power");
  GradedPoly result = GradedPoly::constant(base.ring(), 1);
  GradedPoly b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return result;
}

namespace {

void require_nilpotent(const GradedPoly& a) {
  const Ring& ring = *a.ring();
  for (const auto& t : a.terms()) {
    if (graded_degree(ring, t.mono) == 0 && parameter_order(ring, t.mono) == 0) {
      throw Error("non-nilpotent exponent");
    }
  }
}

}  // namespace

GradedPoly poly_exp(const GradedPoly& a) {
  require_nilpotent(a);
  GradedPoly result = GradedPoly::constant(a.ring(), 1);
  GradedPoly term = result;
  for (int k = 1; !term.is_zero(); ++k) {
    term = (term * a) * ratio(1, k);
    result += term;
  }
  return result;
}

GradedPoly poly_log1p(const GradedPoly& a) {
  require_nilpotent(a);
  GradedPoly result(a.ring());
  GradedPoly power = a;
  for (int k = 1; !power.is_zero(); ++k) {
    result += power * ratio(k % 2 ? 1 : -1, k);
    power = power * a;
  }
  return result;
}

GradedPoly geometric_inverse(const GradedPoly& a) {
  require_nilpotent(a);
  GradedPoly result = GradedPoly::constant(a.ring(), 1);
  GradedPoly power = a;
  while (!power.is_zero()) {
    result += power;
    power = power * a;
  }
  return result;
}

GradedPoly derive(const GradedPoly& f, int var) {
  PolyBuilder b(f.ring());
  for (const auto& t : f.terms()) {
    const int e = t.mono.e[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.e[static_cast<std::size_t>(var)] = static_cast<std::int8_t>(e - 1);
    b.add(m, t.coeff * e);
  }
  return std::move(b).build();
}

GradedPoly euler(const GradedPoly& f, int var) {
  PolyBuilder b(f.ring());
  for (const auto& t : f.terms()) {
    const int e = t.mono.e[static_cast<std::size_t>(var)];
    if (e != 0) b.add(t.mono, t.coeff * e);
  }
  return std::move(b).build();
}

namespace {

Rational rational_pow(const Rational& v, int e) {
  if (e < 0) {
    if (v == 0) throw Error("division by zero in evaluation");
    return 1 / rational_pow(v, -e);
  }
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= v;
  return r;
}

}  // namespace

GradedPoly evaluate(const GradedPoly& f, const std::vector<std::pair<int, Rational>>& values) {
  PolyBuilder b(f.ring());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (const auto& [var, value] : values) {
      const int e = m.e[static_cast<std::size_t>(var)];
      if (e == 0) continue;
      c *= rational_pow(value, e);
      m.e[static_cast<std::size_t>(var)] = 0;
    }
    b.add(m, c);
  }
  return std::move(b).build();
}

GradedPoly substitute(const GradedPoly& f, const RingPtr& target, const std::vector<GradedPoly>& images) {
  if (static_cast<int>(images.size()) != f.ring()->size()) throw Error("substitution arity mismatch");
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const GradedPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(GradedPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  PolyBuilder b(target);
  for (const auto& t : f.terms()) {
    GradedPoly term = GradedPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
      const int e = t.mono.e[i];
      if (e < 0) throw Error("cannot substitute into a negative power of " + f.ring()->var(static_cast<int>(i)).name);
      if (e > 0) term = term * power_of(i, e);
    }
    b.add(term);
  }
  return std::move(b).build();
}

GradedPoly remap(const GradedPoly& f, const RingPtr& target, std::span<const int> index_map) {
  PolyBuilder b(target);
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->size(); ++i) {
      const int e = t.mono.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      const int j = index_map[static_cast<std::size_t>(i)];
      if (j < 0) throw Error("variable " + f.ring()->var(i).name + " has no image in target ring");
      m.e[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(m.e[static_cast<std::size_t>(j)] + e);
    }
    b.add(m, t.coeff);
  }
  return std::move(b).build();
}

std::vector<int> name_map(const Ring& from, const Ring& to, std::string_view suffix) {
  std::vector<int> map(static_cast<std::size_t>(from.size()), -1);
  for (int i = 0; i < from.size(); ++i) {
    const auto& v = from.var(i);
    const std::string name = v.kind == VarKind::parameter ? v.name : v.name + std::string(suffix);
    if (auto j = to.find(name)) map[static_cast<std::size_t>(i)] = *j;
  }
  return map;
}

}  // namespace btau
