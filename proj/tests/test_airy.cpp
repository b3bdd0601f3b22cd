#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "besselzeros/airy.hpp"
#include "besselzeros/errors.hpp"
#include "support/airy_oracle.hpp"

using namespace besselzeros;
namespace oracle = testsupport::airy_oracle;

namespace {

// t_m = (3/8)(4m - 1) pi
BigReal t_of(int m) { return BigReal(3) * BigReal(4 * m - 1) * pi() / 8; }

BigReal lower_a(int m) {
  const BigReal t = t_of(m);
  return -pow(t, BigReal(2) / 3) * (1 + BigReal(5) / (48 * t * t));
}

}  // namespace

TEST_CASE("a_s sequence values") {
  CHECK(a_seq(1, Family::Standard) == make_rational(5, 72));
  CHECK(a_seq(2, Family::Standard) == make_rational(5, 72));
  CHECK(a_seq(3, Family::Standard) == make_rational(1105, 10368));
  CHECK(a_seq(1, Family::Derivative) == make_rational(-7, 72));
  CHECK(a_seq(2, Family::Derivative) == make_rational(-7, 72));
  CHECK_THROWS_AS(a_seq(0, Family::Standard), DomainError);
}

TEST_CASE("a_s recursion holds for later terms") {
  for (Family f : {Family::Standard, Family::Derivative}) {
    AirySequence a(f);
    for (int s = 2; s < 12; ++s) {
      Rational sum = 0;
      for (int j = 1; j <= s - 1; ++j) sum += a(j) * a(s - j);
      CHECK(a(s + 1) == make_rational(s + 1, 2) * a(s) + sum / 2);
    }
    CHECK(a.values().size() == 12);
  }
}

TEST_CASE("Airy values at the origin") {
  WorkingPrecision wp(50);
  const BigReal ai0 = 1 / (pow(BigReal(3), BigReal(2) / 3) * gamma(BigReal(2) / 3));
  CHECK(abs(airy_eval(0, AiryFunction::Ai, 0) - ai0) < epsilon_digits(49));
  CHECK(airy_eval(0, AiryFunction::Ai, 0).to_string(10) == "3.550280539e-01");
  const BigReal bi0 = 1 / (pow(BigReal(3), BigReal(1) / 6) * gamma(BigReal(2) / 3));
  CHECK(abs(airy_eval(0, AiryFunction::Bi, 0) - bi0) < epsilon_digits(49));
  const BigReal aip0 = -1 / (pow(BigReal(3), BigReal(1) / 3) * gamma(BigReal(1) / 3));
  CHECK(abs(airy_eval(0, AiryFunction::Ai, 1) - aip0) < epsilon_digits(49));
}

TEST_CASE("Airy evaluation agrees with the reference series") {
  WorkingPrecision wp(30);
  for (const char* xs : {"-0.5", "-3.7", "-9.25", "-11.9", "1.5", "4"}) {
    const BigReal x(xs);
    const oracle::Values ref = oracle::eval(x, 30);
    CHECK(abs(airy_eval(x, AiryFunction::Ai, 0) - ref.ai) < epsilon_digits(28));
    CHECK(abs(airy_eval(x, AiryFunction::Ai, 1) - ref.aip) < epsilon_digits(28));
    CHECK(abs(airy_eval(x, AiryFunction::Bi, 0) - ref.bi) < epsilon_digits(28) * max(BigReal(1), abs(ref.bi)));
    CHECK(abs(airy_eval(x, AiryFunction::Bi, 1) - ref.bip) < epsilon_digits(28) * max(BigReal(1), abs(ref.bip)));
  }
}

TEST_CASE("asymptotic branch agrees with the reference series far out") {
  WorkingPrecision wp(20);
  for (const char* xs : {"-30", "-55.5"}) {
    const BigReal x(xs);
    const oracle::Values ref = oracle::eval(x, 20);
    CHECK(abs(airy_eval(x, AiryFunction::Ai, 0) - ref.ai) < epsilon_digits(19));
    CHECK(abs(airy_eval(x, AiryFunction::Bi, 1) - ref.bip) < epsilon_digits(18));
  }
}

TEST_CASE("invalid evaluation requests") {
  CHECK_THROWS_AS(airy_eval(1, AiryFunction::Ai, 2), DomainError);
  CHECK_THROWS_AS(airy_zero(AiryZeroKind::A, 0), DomainError);
  CHECK_THROWS_AS(airy_zero_bracket(AiryZeroKind::APrime, 0), DomainError);
}

TEST_CASE("first zero of Ai") {
  WorkingPrecision wp(40);
  CHECK(airy_zero(AiryZeroKind::A, 1).to_string(22) == "-2.338107410459767038489e+00");
}

TEST_CASE("a'_1 bracket endpoints") {
  WorkingPrecision wp(30);
  const Bracket b = airy_zero_bracket(AiryZeroKind::APrime, 1);
  CHECK(b.hi.is_zero());
  // -(1/4)(9 pi)^{2/3}(1 + (20/27)(3 pi)^{-2})
  CHECK(std::fabs(b.lo.to_double() - (-2.3396)) < 5e-5);
}

TEST_CASE("zeros match the reference root finder to 1e-12") {
  WorkingPrecision wp(25);
  struct Row {
    AiryZeroKind kind;
    oracle::Which which;
  };
  for (Row r : {Row{AiryZeroKind::A, oracle::Which::Ai}, Row{AiryZeroKind::B, oracle::Which::Bi},
                Row{AiryZeroKind::APrime, oracle::Which::AiPrime}}) {
    for (int m = 1; m <= 10; ++m) {
      const BigReal got = airy_zero(r.kind, m);
      const BigReal ref = oracle::zero(r.which, m, 20);
      CAPTURE(kind_name(r.kind));
      CAPTURE(m);
      CHECK(abs(got - ref).to_double() < 1e-12);
    }
  }
}

TEST_CASE("zeros are residual-small, ordered and interlaced") {
  const int digits = 40;
  WorkingPrecision wp(digits);
  const BigReal tol = epsilon_digits(digits - 5);
  std::vector<BigReal> a, ap, b;
  for (int m = 1; m <= 50; ++m) {
    a.push_back(airy_zero(AiryZeroKind::A, m));
    ap.push_back(airy_zero(AiryZeroKind::APrime, m));
    b.push_back(airy_zero(AiryZeroKind::B, m));
    CHECK(abs(airy_eval(a.back(), AiryFunction::Ai, 0)) < tol);
    CHECK(abs(airy_eval(ap.back(), AiryFunction::Ai, 1)) < tol);
    CHECK(abs(airy_eval(b.back(), AiryFunction::Bi, 0)) < tol);
    const Bracket br = airy_zero_bracket(AiryZeroKind::APrime, m);
    CHECK(br.lo < ap.back());
    CHECK(ap.back() < br.hi);
  }
  for (int m = 2; m <= 50; ++m) {
    CAPTURE(m);
    const BigReal& am = a[m - 1];
    CHECK(lower_a(m) < am);
    CHECK(am < ap[m - 1]);
    CHECK(ap[m - 1] < a[m - 2]);
    CHECK(a[m - 2] < -pow(t_of(m - 1), BigReal(2) / 3));
    CHECK(abs(am) > abs(a[m - 2]));
    CHECK(b[m - 1] < b[m - 2]);
  }
}

TEST_CASE("Ai changes sign between consecutive zeros") {
  WorkingPrecision wp(30);
  int previous = 0;
  BigReal left = 0;
  for (int m = 1; m <= 12; ++m) {
    const BigReal zm = airy_zero(AiryZeroKind::A, m);
    const int s = airy_eval((left + zm) / 2, AiryFunction::Ai, 0).sign();
    if (m > 1) CHECK(s == -previous);
    previous = s;
    left = zm;
  }
}

TEST_CASE("zero cache stores, serializes and reloads") {
  WorkingPrecision wp(30);
  AiryZeroCache cache;
  const BigReal a3 = cache.get(AiryZeroKind::A, 3);
  CHECK(cache.size() == 1);
  CHECK(cache.get(AiryZeroKind::A, 3) == a3);
  CHECK(cache.size() == 1);
  cache.get(AiryZeroKind::APrime, 2);
  {
    WorkingPrecision more(45);
    cache.get(AiryZeroKind::A, 3);
  }
  CHECK(cache.size() == 3);

  std::stringstream io;
  cache.save(io);
  AiryZeroCache back;
  back.load(io);
  CHECK(back.size() == 3);
  const auto found = back.find(AiryZeroKind::A, 3, 30);
  REQUIRE(found.has_value());
  CHECK(abs(*found - a3) < epsilon_digits(29));
  CHECK_FALSE(back.find(AiryZeroKind::B, 3, 30).has_value());

  std::istringstream bad("q 1 30 -1.0\n");
  CHECK_THROWS_AS(back.load(bad), FormatError);
}

TEST_CASE("zeros converge at several hundred digits") {
  // Newton steps landing on a bracket end must not fall back to bisection,
  // which would cap the accuracy near 300 digits.
  BigReal low;
  {
    WorkingPrecision wp(40);
    low = airy_zero(AiryZeroKind::APrime, 2);
  }
  WorkingPrecision wp(600);
  for (AiryZeroKind k : {AiryZeroKind::A, AiryZeroKind::B, AiryZeroKind::APrime}) {
    CAPTURE(kind_name(k));
    const BigReal x = airy_zero(k, 2);
    const BigReal r = k == AiryZeroKind::A    ? airy_eval(x, AiryFunction::Ai, 0)
                      : k == AiryZeroKind::B  ? airy_eval(x, AiryFunction::Bi, 0)
                                              : airy_eval(x, AiryFunction::Ai, 1);
    CHECK(abs(r) < epsilon_digits(595));
    if (k == AiryZeroKind::APrime) CHECK(abs(x - low) < epsilon_digits(39));
  }
}
