#include "btau/fock.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace btau {

int FockMonomial::degree() const {
  int d = 0;
  for (auto [i, n] : phi) d += i * n;
  for (auto [j, n] : phistar) d += j * n;
  return d;
}

int FockMonomial::charge() const {
  int c = 0;
  for (auto [i, n] : phi) c += n;
  for (auto [j, n] : phistar) c -= n;
  return c;
}

int FockMonomial::phi_power(int i) const {
  auto it = phi.find(i);
  return it == phi.end() ? 0 : it->second;
}

int FockMonomial::phistar_power(int j) const {
  auto it = phistar.find(j);
  return it == phistar.end() ? 0 : it->second;
}

std::string FockMonomial::to_string() const {
  std::string out;
  // Factors sorted by mode index: phi[-i] with the most negative first.
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
    out += "phi[" + std::to_string(-it->first) + "]^" + std::to_string(it->second) + " ";
  }
  for (auto it = phistar.rbegin(); it != phistar.rend(); ++it) {
    out += "phistar[" + std::to_string(-it->first) + "]^" + std::to_string(it->second) + " ";
  }
  return out + "|0>";
}

std::string Mode::to_string() const {
  return std::string(field == Field::phi ? "phi" : "phistar") + "[" + std::to_string(index) + "]";
}

FockVector FockVector::vacuum() { return basis(FockMonomial{}); }

FockVector FockVector::basis(FockMonomial m, const Rational& c) {
  FockVector v;
  v.add(m, c);
  return v;
}

Rational FockVector::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const FockMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockVector FockVector::operator+(const FockVector& other) const {
  FockVector out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, c);
  return out;
}

FockVector FockVector::operator-(const FockVector& other) const { return *this + other * Rational(-1); }

FockVector FockVector::operator*(const Rational& c) const {
  FockVector out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

int FockVector::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

FockVector FockVector::truncated_degree(int max_degree) const {
  FockVector out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= max_degree) out.terms_.emplace(m, c);
  }
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + btau::to_string(c) + ") " + m.to_string();
  }
  return out;
}

void FockTensor::add(const FockMonomial& left, const FockMonomial& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void FockTensor::add_product(const FockVector& left, const FockVector& right, const Rational& c) {
  for (const auto& [a, ca] : left.terms()) {
    for (const auto& [b, cb] : right.terms()) add(a, b, ca * cb * c);
  }
}

Rational FockTensor::coeff(const FockMonomial& left, const FockMonomial& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

FockTensor FockTensor::operator+(const FockTensor& other) const {
  FockTensor out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k.first, k.second, c);
  return out;
}

FockTensor FockTensor::operator-(const FockTensor& other) const {
  FockTensor out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k.first, k.second, -c);
  return out;
}

FockTensor FockTensor::truncated_degree(int max_degree) const {
  FockTensor out;
  for (const auto& [k, c] : terms_) {
    if (k.first.degree() + k.second.degree() <= max_degree) out.terms_.emplace(k, c);
  }
  return out;
}

std::string FockTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + btau::to_string(c) + ") " + k.first.to_string() + " (x) " + k.second.to_string();
  }
  return out;
}

namespace {

void bump(std::map<int, int>& exps, int key, int delta) {
  const int v = (exps[key] += delta);
  if (v == 0) exps.erase(key);
}

}  // namespace

FockVector apply_mode(const Mode& m, const FockVector& v) {
  FockVector out;
  for (const auto& [mono, c] : v.terms()) {
    FockMonomial r = mono;
    if (m.field == Mode::Field::phi) {
      if (m.index <= -1) {
        bump(r.phi, -m.index, 1);
        out.add(r, c);
      } else {
        const int e = mono.phistar_power(m.index);
        if (e == 0) continue;
        bump(r.phistar, m.index, -1);
        out.add(r, c * e);
      }
    } else {
      if (m.index <= 0) {
        bump(r.phistar, -m.index, 1);
        out.add(r, c);
      } else {
        const int e = mono.phi_power(m.index);
        if (e == 0) continue;
        bump(r.phi, m.index, -1);
        out.add(r, -c * e);
      }
    }
  }
  return out;
}

FockVector apply_current(Current which, int k, const FockVector& v) {
  // Only finitely many i contribute: both factors creating (k <= i <= -1),
  // phi_i annihilating a present phistar_{-i}, or phistar_{k-i} annihilating
  // a present phi_{-(k-i)}.
  std::set<int> candidates;
  for (int i = k; i <= -1; ++i) candidates.insert(i);
  for (const auto& [mono, c] : v.terms()) {
    for (auto [j, n] : mono.phistar) candidates.insert(j);
    for (auto [m, n] : mono.phi) candidates.insert(k - m);
  }
  FockVector out;
  for (int i : candidates) {
    const Rational weight = which == Current::j0 ? Rational(1) : Rational(-(k - i));
    if (weight == 0) continue;
    const Mode left = Mode::phi(i);
    const Mode right = Mode::phistar(k - i);
    // Normal ordering: an annihilating phi_i acts first.
    const FockVector w = i >= 0 ? apply_mode(right, apply_mode(left, v)) : apply_mode(left, apply_mode(right, v));
    out = out + w * weight;
  }
  return out;
}

std::vector<GradedComponent> grade(const FockVector& v) {
  std::map<std::pair<int, int>, FockVector> parts;
  for (const auto& [m, c] : v.terms()) parts[{m.charge(), m.degree()}].add(m, c);
  std::vector<GradedComponent> out;
  for (auto& [key, comp] : parts) out.push_back({key.first, key.second, std::move(comp)});
  return out;
}

FockTensor omega_u(const FockVector& v, const FockVector& w) {
  std::set<int> indices;
  for (const auto& [m, c] : v.terms())
    for (auto [i, n] : m.phi) indices.insert(i);
  for (const auto& [m, c] : w.terms())
    for (auto [j, n] : m.phistar) indices.insert(-j);
  FockTensor out;
  for (int i : indices) {
    const FockVector left = apply_mode(Mode::phistar(i), v);
    if (left.is_zero()) continue;
    const FockVector right = apply_mode(Mode::phi(-i), w);
    out.add_product(left, right);
  }
  return out;
}

FockVector tau_quadratic_exp(const std::map<std::pair<int, int>, Rational>& coeffs, int max_degree) {
  for (const auto& [ij, c] : coeffs) {
    if (ij.first < 0 || ij.second <= 0) throw Error("index out of creation range");
  }
  auto apply_x = [&](const FockVector& v) {
    FockVector out;
    for (const auto& [ij, c] : coeffs) {
      if (c == 0) continue;
      out = out + apply_mode(Mode::phistar(-ij.first), apply_mode(Mode::phi(-ij.second), v)) * c;
    }
    return out.truncated_degree(max_degree);
  };
  FockVector result = FockVector::vacuum();
  FockVector term = result;
  for (int k = 1; !term.is_zero(); ++k) {
    term = apply_x(term) * ratio(1, k);
    result = result + term;
  }
  return result;
}

ObstructionWitness vacuum_obstruction(const FockVector& v) {
  int top = 0;
  for (const auto& [m, c] : v.terms())
    if (!m.phi.empty()) top = std::max(top, m.phi.rbegin()->first);
  if (top == 0) throw Error("no obstruction applicable");
  int power = 0;
  for (const auto& [m, c] : v.terms()) power = std::max(power, m.phi_power(top));

  FockVector top_part;  // P_m |0>
  for (const auto& [m, c] : v.terms()) {
    if (m.phi_power(top) != power) continue;
    FockMonomial r = m;
    r.phi.erase(top);
    top_part.add(r, c);
  }
  auto with_power = [&](int e) {
    FockVector out;
    for (const auto& [m, c] : top_part.terms()) {
      FockMonomial r = m;
      if (e > 0) r.phi[top] = e;
      out.add(r, c);
    }
    return out;
  };
  ObstructionWitness w{top, power, {}};
  w.witness.add_product(with_power(power - 1), with_power(power + 1), Rational(-power));
  return w;
}

FockTensor project_powers(const FockTensor& t, int index, int left_power, int right_power) {
  FockTensor out;
  for (const auto& [k, c] : t.terms()) {
    if (k.first.phi_power(index) == left_power && k.second.phi_power(index) == right_power) {
      out.add(k.first, k.second, c);
    }
  }
  return out;
}

namespace {

// Multisets of parts >= min_part, given size, total weight <= budget.
void multisets(int min_part, int size, int budget, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& emit) {
  if (size == 0) {
    emit(cur);
    return;
  }
  const int start = cur.empty() ? min_part : cur.back();
  for (int part = start; part * size <= budget; ++part) {
    cur.push_back(part);
    multisets(min_part, size - 1, budget - part, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FockMonomial> enumerate_monomials(int charge, int max_degree) {
  std::vector<FockMonomial> out;
  std::vector<int> phi_parts, star_parts;
  // Each phi factor costs at least one unit of degree.
  for (int r = 0; r <= max_degree; ++r) {
    const int stars = r - charge;
    if (stars < 0) continue;
    multisets(1, r, max_degree, phi_parts, [&](const std::vector<int>& ps) {
      int used = 0;
      for (int p : ps) used += p;
      multisets(0, stars, max_degree - used, star_parts, [&](const std::vector<int>& ss) {
        FockMonomial m;
        for (int p : ps) ++m.phi[p];
        for (int s : ss) ++m.phistar[s];
        out.push_back(std::move(m));
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace btau
