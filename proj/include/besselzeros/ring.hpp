#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "besselzeros/big_real.hpp"
#include "besselzeros/rational.hpp"

namespace besselzeros {

// sigma^e_sigma * zeta^e_zeta * z^e_z. Ordered lexicographically on
// (e_sigma, e_zeta, e_z).
struct Monomial {
  int e_sigma = 0;
  int e_zeta = 0;
  int e_z = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.e_sigma + b.e_sigma, a.e_zeta + b.e_zeta, a.e_z + b.e_z};
  }
};

// A point (sigma, zeta, z) at which ring elements are evaluated.
template <class T>
struct Triple {
  T sigma;
  T zeta;
  T z;
};

// Laurent polynomial in the free variables sigma, zeta, z with rational
// coefficients. No zero coefficient is ever stored.
class RingElem {
 public:
  using TermMap = std::map<Monomial, Rational>;

  RingElem() = default;
  RingElem(const Rational& c);  // NOLINT(google-explicit-constructor)
  RingElem(long c);             // NOLINT(google-explicit-constructor)

  static RingElem monomial(const Rational& c, Monomial m);
  static RingElem sigma() { return monomial(1, {1, 0, 0}); }
  static RingElem zeta() { return monomial(1, {0, 1, 0}); }
  static RingElem z() { return monomial(1, {0, 0, 1}); }
  // Sums duplicate monomials and drops zeros, so any term list is accepted.
  static RingElem from_terms(const std::vector<std::pair<Monomial, Rational>>& terms);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_z() const;
  // Smallest exponent of zeta over all terms (0 for the zero element).
  int min_zeta_exponent() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const Rational& c);

  friend RingElem operator-(const RingElem& a);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(RingElem a, const Rational& c) { return a *= c; }
  friend RingElem operator*(const Rational& c, RingElem a) { return a *= c; }
  friend RingElem operator*(RingElem a, long c) { return a *= Rational(c); }
  friend RingElem operator*(long c, RingElem a) { return a *= Rational(c); }
  // Multiplication by a single monomial only shifts exponents.
  friend RingElem operator*(const RingElem& a, const Monomial& m);

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  void accumulate(const Monomial& m, const Rational& c);
  TermMap terms_;
};

RingElem pow(const RingElem& x, int n);

RingElem partial_sigma(const RingElem& f);
RingElem partial_zeta(const RingElem& f);
RingElem partial_z(const RingElem& f);

// Total derivative d/dz along zeta(z), sigma(z):
//   zeta' = -1/(sigma z),  sigma' = z sigma^3/zeta - 1/(2 z zeta).
RingElem ring_diff(const RingElem& f);

// Numeric evaluation; NumericFailure if a variable with a negative exponent is zero.
BigReal ring_eval(const RingElem& f, const Triple<BigReal>& at);
// Exact substitution.
Rational ring_eval(const RingElem& f, const Triple<Rational>& at);

// Serialization record: exponents plus decimal numerator / denominator.
struct TermRecord {
  int e_sigma;
  int e_zeta;
  int e_z;
  std::string num;
  std::string den;

  friend bool operator==(const TermRecord&, const TermRecord&) = default;
};

std::vector<TermRecord> to_records(const RingElem& f);
RingElem from_records(const std::vector<TermRecord>& records);

// Human-readable form such as "5/48*sigma^3*zeta^-2 - 1/8*sigma*zeta^-1".
std::string to_string(const RingElem& f);

}  // namespace besselzeros
