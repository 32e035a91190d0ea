#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btau/rational.hpp"

namespace btau {

/// Normal-ordered basis vector phi_{-i}^{a_i} ... phistar_{-j}^{b_j} |0>.
/// `phi` maps i >= 1 to the multiplicity of phi_{-i}; `phistar` maps j >= 0
/// to the multiplicity of phistar_{-j}. Absent keys mean multiplicity 0.
struct FockMonomial {
  std::map<int, int> phi;
  std::map<int, int> phistar;

  /// Eigenvalue of the degree operator J^1_0.
  int degree() const;
  /// Eigenvalue of -J^0_0: (#phi factors) - (#phistar factors).
  int charge() const;
  int phi_power(int i) const;
  int phistar_power(int j) const;
  bool is_vacuum() const { return phi.empty() && phistar.empty(); }

  /// "phi[-2]^3 phistar[0]^1 |0>".
  std::string to_string() const;

  auto operator<=>(const FockMonomial&) const = default;
};

/// Finite linear combination of basis monomials.
class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum();
  static FockVector basis(FockMonomial m, const Rational& c = 1);

  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const FockMonomial& m) const;
  void add(const FockMonomial& m, const Rational& c);

  FockVector operator+(const FockVector& other) const;
  FockVector operator-(const FockVector& other) const;
  FockVector operator*(const Rational& c) const;
  bool operator==(const FockVector& other) const = default;

  int max_degree() const;
  FockVector truncated_degree(int max_degree) const;
  std::string to_string() const;

 private:
  std::map<FockMonomial, Rational> terms_;
};

class FockTensor {
 public:
  using Key = std::pair<FockMonomial, FockMonomial>;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const FockMonomial& left, const FockMonomial& right, const Rational& c);
  void add_product(const FockVector& left, const FockVector& right, const Rational& c = 1);
  Rational coeff(const FockMonomial& left, const FockMonomial& right) const;

  FockTensor operator+(const FockTensor& other) const;
  FockTensor operator-(const FockTensor& other) const;
  bool operator==(const FockTensor& other) const = default;

  /// Terms whose total degree (left + right) is at most max_degree.
  FockTensor truncated_degree(int max_degree) const;
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

/// A mode phi_i or phistar_i, i any integer.
struct Mode {
  enum class Field { phi, phistar };
  Field field;
  int index;

  static Mode phi(int i) { return {Field::phi, i}; }
  static Mode phistar(int i) { return {Field::phistar, i}; }
  /// phi_{-i} (i >= 1) and phistar_{-j} (j >= 0) create; the rest annihilate.
  bool is_creation() const { return field == Field::phi ? index <= -1 : index <= 0; }
  std::string to_string() const;
};

/// Action on the Fock space: creation modes multiply, phi_i (i >= 0) acts as
/// d/d phistar_{-i} and phistar_j (j >= 1) as -d/d phi_{-j}.
FockVector apply_mode(const Mode& m, const FockVector& v);

enum class Current { j0, j1 };

/// Normal-ordered currents J^0_k = sum_i :phi_i phistar_{k-i}: and
/// J^1_k = sum_i -(k-i) :phi_i phistar_{k-i}:.
FockVector apply_current(Current which, int k, const FockVector& v);

struct GradedComponent {
  int charge;
  int degree;
  FockVector component;
};

/// Joint (charge, degree) eigencomponents, sorted by charge then degree.
std::vector<GradedComponent> grade(const FockVector& v);

/// Omega_U (v (x) w) = sum_i phistar_i v (x) phi_{-i} w.
FockTensor omega_u(const FockVector& v, const FockVector& w);

/// exp(sum c_{ij} phistar_{-i} phi_{-j}) |0> expanded through degree D.
/// Keys are (i >= 0, j >= 1).
FockVector tau_quadratic_exp(const std::map<std::pair<int, int>, Rational>& coeffs, int max_degree);

/// Nonvanishing component of Omega_U(v (x) v) predicted by the vacuum
/// uniqueness argument: with N the largest index of a phi_{-N} factor and
/// m its top power, -m phi_{-N}^{m-1} P_m |0> (x) phi_{-N}^{m+1} P_m |0>.
struct ObstructionWitness {
  int top_index;  // N
  int top_power;  // m
  FockTensor witness;
};

/// Throws Error("no obstruction applicable") when v has no phi factor.
ObstructionWitness vacuum_obstruction(const FockVector& v);

/// Part of a tensor whose left and right factors carry phi_{-index} to
/// exactly the given powers.
FockTensor project_powers(const FockTensor& t, int index, int left_power, int right_power);

/// All basis monomials with the given charge and degree <= max_degree.
std::vector<FockMonomial> enumerate_monomials(int charge, int max_degree);

}  // namespace btau
