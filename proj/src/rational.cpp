#include "wcent/rational.hpp"

#include <stdexcept>

namespace wcent {

namespace {

mpz_class parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational rational_from_strings(const std::string& num, const std::string& den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }

std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace wcent
