#include "besselzeros/big_real.hpp"

#include <climits>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "besselzeros/errors.hpp"

namespace besselzeros {

namespace {

thread_local int t_digits = WorkingPrecision::kDefaultDigits;

constexpr double kLog2Of10 = 3.32192809488736234787;

}  // namespace

int bits_to_digits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits) / kLog2Of10));
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 8;
}

WorkingPrecision::WorkingPrecision(int digits) : previous_(t_digits) {
  if (digits < kMinDigits) {
    throw DomainError("working precision below " + std::to_string(kMinDigits) +
                      " digits: " + std::to_string(digits));
  }
  t_digits = digits;
}

WorkingPrecision::~WorkingPrecision() { t_digits = previous_; }

int WorkingPrecision::digits() { return t_digits; }

mpfr_prec_t WorkingPrecision::bits() { return digits_to_bits(t_digits); }

BigReal::BigReal(Uninit) { mpfr_init2(value_, WorkingPrecision::bits()); }

BigReal make_uninit() { return BigReal(BigReal::Uninit{}); }

BigReal::BigReal() : BigReal(Uninit{}) { mpfr_set_zero(value_, 1); }

BigReal::BigReal(int v) : BigReal(Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }

BigReal::BigReal(long v) : BigReal(Uninit{}) { mpfr_set_si(value_, v, MPFR_RNDN); }

BigReal::BigReal(double v) : BigReal(Uninit{}) { mpfr_set_d(value_, v, MPFR_RNDN); }

BigReal::BigReal(const Rational& q) : BigReal(Uninit{}) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal) : BigReal(Uninit{}) {
  char* end = nullptr;
  mpfr_strtofr(value_, decimal.c_str(), &end, 10, MPFR_RNDN);
  // The delegated-to constructor already completed, so the destructor frees value_.
  if (end == decimal.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + decimal + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

long BigReal::to_long() const { return mpfr_get_si(value_, MPFR_RNDZ); }

long BigReal::decimal_exponent() const {
  if (is_zero()) return LONG_MIN;
  long e2 = 0;
  double m = mpfr_get_d_2exp(&e2, value_, MPFR_RNDN);
  return static_cast<long>(std::floor(std::log10(std::fabs(m)) + e2 * 0.30102999566398119521));
}

std::string BigReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigReal::to_string() const { return to_string(bits_to_digits(precision())); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal operator-(const BigReal& a) {
  BigReal r = make_uninit();
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw NumericFailure("division by zero");
  BigReal r = make_uninit();
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <class F>
BigReal apply(const BigReal& x, F f) {
  BigReal r = make_uninit();
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal abs(const BigReal& x) { return apply(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return apply(x, mpfr_sqrt);
}

BigReal cbrt(const BigReal& x) { return apply(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return apply(x, mpfr_exp); }

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a nonpositive number");
  return apply(x, mpfr_log);
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of a nonpositive number");
  return apply(x, mpfr_log10);
}

BigReal sin(const BigReal& x) { return apply(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return apply(x, mpfr_cos); }
BigReal atan(const BigReal& x) { return apply(x, mpfr_atan); }
BigReal acos(const BigReal& x) { return apply(x, mpfr_acos); }
BigReal gamma(const BigReal& x) { return apply(x, mpfr_gamma); }

BigReal floor(const BigReal& x) {
  BigReal r = make_uninit();
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r = make_uninit();
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r = make_uninit();
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r = make_uninit();
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigReal pi() {
  BigReal r = make_uninit();
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal at_working_precision(const BigReal& x) {
  BigReal r = make_uninit();
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal epsilon_digits(int n) { return pow(BigReal(10), -static_cast<long>(n)); }

}  // namespace besselzeros
