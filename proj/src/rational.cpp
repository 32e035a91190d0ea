#include "btau/rational.hpp"

namespace btau {

Rational ratio(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw Error("malformed rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw Error("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace btau
