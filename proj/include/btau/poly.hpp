#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "btau/rational.hpp"

namespace btau {

inline constexpr int kMaxVars = 64;

enum class VarKind : std::uint8_t { graded, laurent, parameter };

struct Variable {
  std::string name;
  VarKind kind = VarKind::graded;
  int weight = 0;  // degree contribution per unit exponent (graded only)
};

/// Truncation caps shared by every value of a ring: xy-degree D, Laurent
/// window C, total formal-parameter order P.
struct Caps {
  int degree = 8;
  int p_window = 6;
  int param_order = 3;

  bool operator==(const Caps&) const = default;
};

class Ring {
 public:
  Ring(std::vector<Variable> vars, Caps caps);

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
  const std::vector<Variable>& vars() const { return vars_; }
  const Caps& caps() const { return caps_; }

  std::optional<int> find(std::string_view name) const;
  /// Index of a named variable; throws if absent.
  int index(std::string_view name) const;

  std::span<const int> graded_indices() const { return graded_; }
  std::span<const int> laurent_indices() const { return laurent_; }
  std::span<const int> parameter_indices() const { return params_; }

  bool operator==(const Ring& other) const;

 private:
  std::vector<Variable> vars_;
  Caps caps_;
  std::map<std::string, int, std::less<>> by_name_;
  std::vector<int> graded_, laurent_, params_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> vars, Caps caps);

/// Laurent p, then x1..xD and y1..yD (weight n).
/// `suffix` is appended to x/y/p names (used for the primed copies of a
/// tensor square).
std::vector<Variable> boson_variables(int degree, std::string_view suffix = "");
std::vector<Variable> parameter_variables(const std::vector<std::string>& names);
/// Named parameters first, then the boson variables.
RingPtr make_boson_ring(Caps caps, const std::vector<std::string>& params = {});

struct Monomial {
  std::array<std::int8_t, kMaxVars> e{};

  bool operator==(const Monomial&) const = default;
  bool is_one() const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

int graded_degree(const Ring& ring, const Monomial& m);
int parameter_order(const Ring& ring, const Monomial& m);
bool within_caps(const Ring& ring, const Monomial& m);

/// Sparse polynomial over a Ring with exact rational coefficients. Terms
/// beyond the ring caps are discarded on construction, zero coefficients
/// are pruned and terms are kept in canonical (graded-lex) order.
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static GradedPoly constant(RingPtr ring, const Rational& c);
  static GradedPoly variable(RingPtr ring, int index, int power = 1, const Rational& c = 1);
  static GradedPoly variable(RingPtr ring, std::string_view name, int power = 1, const Rational& c = 1);
  static GradedPoly from_map(RingPtr ring, std::unordered_map<Monomial, Rational, MonomialHash> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  /// Largest graded degree among the terms (-1 for zero).
  int max_degree() const;
  int min_parameter_order() const;

  GradedPoly operator+(const GradedPoly& other) const;
  GradedPoly operator-(const GradedPoly& other) const;
  GradedPoly operator*(const GradedPoly& other) const;
  GradedPoly operator*(const Rational& scalar) const;
  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& other) { return *this = *this + other; }

  bool operator==(const GradedPoly& other) const;

  /// Keep terms satisfying the predicate.
  template <typename Pred>
  GradedPoly filtered(Pred pred) const {
    GradedPoly out(ring_);
    for (const auto& t : terms_) {
      if (pred(t.mono)) out.terms_.push_back(t);
    }
    return out;
  }

  GradedPoly truncated_degree(int max_degree) const;

  std::string to_string() const;

 private:
  void require_same_ring(const GradedPoly& other) const;
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

/// Accumulates terms into a hash map, dropping over-cap monomials.
class PolyBuilder {
 public:
  explicit PolyBuilder(RingPtr ring) : ring_(std::move(ring)) {}
  void add(const Monomial& m, const Rational& c);
  void add(const GradedPoly& p, const Rational& scale = 1);
  GradedPoly build() &&;
  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

GradedPoly pow(const GradedPoly& base, int n);

/// exp(a) for nilpotent a: zero constant term and every term of positive
/// degree or positive parameter order. Throws "non-nilpotent exponent".
GradedPoly poly_exp(const GradedPoly& a);

/// log(1 + a) for nilpotent a (same precondition as poly_exp).
GradedPoly poly_log1p(const GradedPoly& a);

/// (1 - a)^{-1} as a geometric series; a must be nilpotent.
GradedPoly geometric_inverse(const GradedPoly& a);

GradedPoly derive(const GradedPoly& f, int var);
/// Multiplies each term by its exponent of the Laurent variable `var`.
GradedPoly euler(const GradedPoly& f, int var);

/// Substitutes rational values for the given variables.
GradedPoly evaluate(const GradedPoly& f, const std::vector<std::pair<int, Rational>>& values);

/// Substitutes a polynomial (in the target ring) for each variable of f.
/// `images[i]` is the image of variable i of f's ring.
GradedPoly substitute(const GradedPoly& f, const RingPtr& target, const std::vector<GradedPoly>& images);

/// Renames variables into another ring: variable i of f maps to
/// `index_map[i]` of the target (-1 means the variable must not occur).
GradedPoly remap(const GradedPoly& f, const RingPtr& target, std::span<const int> index_map);

/// Index map sending each variable of `from` to the same-named variable of
/// `to` (-1 when absent).
std::vector<int> name_map(const Ring& from, const Ring& to, std::string_view suffix = "");

}  // namespace btau
