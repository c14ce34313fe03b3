#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace birkhoff {

// Exact rational scalar. Everything at the space level is computed in
// arbitrary-precision rationals so that equalities and strict inequalities
// are decidable, not approximated.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("rat_from_strings: malformed integer");
  if (d == 0) throw std::invalid_argument("rat_from_strings: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return Rational(abs(q)); }

inline const Rational& rational_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

inline const Rational& rational_max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// "p/q" (or just "p" when q = 1); used for logs and report details.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

// 2^-pow as a rational, pow >= 0.
inline Rational dyadic_unit(unsigned pow) {
  mpz_class den = 1;
  den <<= pow;
  Rational q(1, den);
  q.canonicalize();
  return q;
}

inline Rational pow2(unsigned pow) {
  mpz_class num = 1;
  num <<= pow;
  return Rational(num);
}

}  // namespace birkhoff
