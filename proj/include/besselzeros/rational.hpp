#pragma once

#include <gmpxx.h>

#include <string>

namespace besselzeros {

// Exact fraction; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p" or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

}  // namespace besselzeros
