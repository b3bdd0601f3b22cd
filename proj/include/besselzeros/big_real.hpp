#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "besselzeros/rational.hpp"

namespace besselzeros {

// Decimal digits carried by `bits` binary digits, and the converse.
int bits_to_digits(mpfr_prec_t bits);
mpfr_prec_t digits_to_bits(int digits);

// Scoped working precision for the current thread. Every BigReal produced by
// arithmetic while the scope is active is rounded to this precision.
class WorkingPrecision {
 public:
  static constexpr int kMinDigits = 15;
  static constexpr int kDefaultDigits = 40;

  explicit WorkingPrecision(int digits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static int digits();
  static mpfr_prec_t bits();

 private:
  int previous_;
};

// Multiprecision real backed by an MPFR value.
class BigReal {
 public:
  BigReal();
  BigReal(int v);   // NOLINT(google-explicit-constructor)
  BigReal(long v);  // NOLINT(google-explicit-constructor)
  explicit BigReal(double v);
  explicit BigReal(const Rational& q);
  explicit BigReal(const std::string& decimal);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const;
  long to_long() const;  // rounds toward zero
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // floor(log10|x|) estimate; INT_MIN for zero.
  long decimal_exponent() const;

  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  std::string to_string() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator-(const BigReal& a);
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  struct Uninit {};
  explicit BigReal(Uninit);
  friend BigReal make_uninit();
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal acos(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal ldexp(const BigReal& x, long e);
BigReal pi();
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

// Copy of x rounded to the current working precision.
BigReal at_working_precision(const BigReal& x);

// 10^-n at working precision.
BigReal epsilon_digits(int n);

}  // namespace besselzeros
