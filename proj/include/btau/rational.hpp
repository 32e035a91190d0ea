#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace btau {

// Exact rational backed by GMP. Arithmetic results are canonical (lowest
// terms, positive denominator); build fractions with ratio().
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n" for integers, "n/d" otherwise.
/// num/den in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
Rational ratio(long num, long den);

std::string to_string(const Rational& r);

Rational parse_rational(std::string_view text);

Rational factorial(int n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(int n, int k);

}  // namespace btau
