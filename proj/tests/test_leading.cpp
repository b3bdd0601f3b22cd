#include <doctest.h>

#include <cmath>

#include "besselzeros/errors.hpp"
#include "besselzeros/leading.hpp"

using namespace besselzeros;

namespace {

// Closed form at triple the working digits; no series branch.
BigReal phi_direct(const BigReal& z) {
  WorkingPrecision wp(3 * WorkingPrecision::digits());
  const BigReal zz = at_working_precision(z);
  return sqrt(zz * zz - 1) - acos(1 / zz);
}

double rel(const BigReal& a, const BigReal& b) { return abs(a / b - 1).to_double(); }

void check_triple(const LeadingTriple& t, int digits) {
  CHECK(t.z0 > BigReal(1));
  CHECK(t.zeta0.sign() < 0);
  CHECK(t.sigma0.sign() > 0);
  const BigReal R = BigReal(2) / 3 * pow(abs(t.zeta0), BigReal(3) / 2);
  CHECK(abs(phi_eval(t.z0) - R) <= epsilon_digits(digits - 3) * max(BigReal(1), R));
  const BigReal lhs = t.sigma0 * t.sigma0 * t.z0_minus_1 * (t.z0 + 1);
  CHECK(rel(lhs, abs(t.zeta0)) < std::pow(10.0, -(digits - 3)));
  CHECK(abs(t.z0 - 1 - t.z0_minus_1) <= epsilon_digits(digits - 2) * t.z0);
}

}  // namespace

TEST_CASE("zero families map to Airy kinds and coefficient families") {
  CHECK(airy_kind(ZeroFamily::J) == AiryZeroKind::A);
  CHECK(airy_kind(ZeroFamily::Y) == AiryZeroKind::B);
  CHECK(airy_kind(ZeroFamily::JPrime) == AiryZeroKind::APrime);
  CHECK(coefficient_family(ZeroFamily::Y) == Family::Standard);
  CHECK(coefficient_family(ZeroFamily::JPrime) == Family::Derivative);
}

TEST_CASE("phi at simple points") {
  WorkingPrecision wp(40);
  CHECK(phi_eval(1).is_zero());
  const BigReal want = sqrt(BigReal(3)) - pi() / 3;
  CHECK(abs(phi_eval(2) - want) < epsilon_digits(39));
  CHECK(phi_eval(2).to_string(10) == "6.848532564e-01");
  CHECK_THROWS_AS(phi_eval(BigReal("0.999")), DomainError);
}

TEST_CASE("phi agrees with the closed form on both sides of the series switch") {
  WorkingPrecision wp(40);
  for (const char* t : {"1e-8", "9.99999e-5", "1e-4", "1.00001e-4", "3e-3", "0.5", "7"}) {
    CAPTURE(t);
    const BigReal z = 1 + BigReal(t);
    CHECK(rel(phi_eval(z), phi_direct(z)) < 1e-37);
  }
}

TEST_CASE("phi' matches a central difference") {
  WorkingPrecision wp(50);
  const BigReal h("1e-15");
  for (const char* zs : {"1.01", "2", "30"}) {
    const BigReal z(zs);
    const BigReal fd = (phi_eval(z + h) - phi_eval(z - h)) / (2 * h);
    CHECK(rel(phi_prime(z), fd) < 1e-25);
    CHECK(abs(phi_prime(z) - sqrt(z * z - 1) / z) < epsilon_digits(48));
  }
}

TEST_CASE("solve_leading inverts phi") {
  WorkingPrecision wp(40);
  CHECK(abs(solve_leading(phi_eval(2)) - 2) < epsilon_digits(38));
  for (const char* Rs : {"1e-9", "0.000999", "0.001", "0.001001", "0.3", "2.3834466125308", "50", "1e5"}) {
    CAPTURE(Rs);
    const BigReal R(Rs);
    const BigReal z = solve_leading(R);
    CHECK(z > max(R, BigReal(1)));
    CHECK(z < R + 1 + pi() / 2);
    CHECK(rel(phi_eval(z), R) < 1e-36);
  }
  CHECK_THROWS_AS(solve_leading(0), DomainError);
  CHECK_THROWS_AS(solve_leading(-1), DomainError);
}

TEST_CASE("solve_leading is stable across precisions") {
  // Newton must not be replaced by bisection once phi(z) - R is exactly zero.
  const BigReal R("2.3834466125308274586");
  BigReal ref;
  {
    WorkingPrecision wp(120);
    ref = solve_leading(R);
  }
  for (int d = 20; d <= 90; d += 5) {
    CAPTURE(d);
    WorkingPrecision wp(d);
    CHECK(abs(solve_leading(R) - ref) < epsilon_digits(d - 2));
  }
}

TEST_CASE("series and bracketed branches meet continuously") {
  WorkingPrecision wp(40);
  const BigReal R(kSmallR);
  const BigReal eps("1e-20");
  const BigReal below = solve_leading(R - eps), above = solve_leading(R + eps);
  const BigReal slope = 1 / phi_prime(solve_leading(R));
  CHECK(rel(above - below, 2 * eps * slope) < 1e-10);
}

TEST_CASE("small zeta0: z0 - 1 ~ 2^(-1/3) |zeta0|") {
  WorkingPrecision wp(40);
  const LeadingTriple t = triple_from_zeta(BigReal("-1e-6"));
  CHECK(rel(t.z0_minus_1, BigReal("1e-6") / cbrt(BigReal(2))) < 1e-5);
  CHECK(rel(t.sigma0, 1 / cbrt(BigReal(2))) < 1e-5);
  check_triple(t, 40);
}

TEST_CASE("large R: z0 = R + pi/2 + O(1/R)") {
  WorkingPrecision wp(40);
  const BigReal R(1000);
  const BigReal z0 = solve_leading(R);
  CHECK(abs(z0 - R - pi() / 2).to_double() < 1.0 / 1000);
}

TEST_CASE("triples from z0 and zeta0 agree") {
  WorkingPrecision wp(50);
  for (const char* zs : {"1.000001", "1.2", "3", "1e3"}) {
    const LeadingTriple a = triple_from_z0(BigReal(zs));
    check_triple(a, 50);
    const LeadingTriple b = triple_from_zeta(a.zeta0);
    CHECK(rel(b.z0, a.z0) < 1e-45);
    CHECK(rel(b.sigma0, a.sigma0) < 1e-45);
  }
  CHECK_THROWS_AS(triple_from_zeta(BigReal(0)), DomainError);
  CHECK_THROWS_AS(triple_from_z0(BigReal(1)), DomainError);
}

TEST_CASE("leading triple for J at nu = 1, m = 1") {
  WorkingPrecision wp(40);
  const LeadingTriple t = leading_triple(ZeroFamily::J, 1, 1);
  const BigReal R = BigReal(2) / 3 * pow(abs(t.zeta0), BigReal(3) / 2);
  CHECK(std::fabs(R.to_double() - 2.3835) < 1e-4);
  CHECK(t.z0 > R);
  CHECK(t.z0 < R + 1 + pi() / 2);
  check_triple(t, 40);
  CHECK(t.family == ZeroFamily::J);
  CHECK(t.m == 1);
}

TEST_CASE("leading triple for J' at nu = 1, m = 1 uses a'_1") {
  WorkingPrecision wp(40);
  const LeadingTriple t = leading_triple(ZeroFamily::JPrime, 1, 1);
  CHECK(std::fabs(t.zeta0.to_double() - (-1.0188)) < 1e-4);
  check_triple(t, 40);
}

TEST_CASE("leading triple approaches the turning point as nu grows") {
  WorkingPrecision wp(40);
  AiryZeroCache cache;
  const LeadingTriple t = leading_triple(ZeroFamily::J, BigReal("1e12"), 1, &cache);
  CHECK(t.z0_minus_1.to_double() < 1e-7);
  CHECK(rel(t.sigma0, 1 / cbrt(BigReal(2))) < 1e-6);
  check_triple(t, 40);
  CHECK(cache.size() == 1);
}

TEST_CASE("leading triple rejects bad inputs") {
  CHECK_THROWS_AS(leading_triple(ZeroFamily::J, 0, 1), DomainError);
  CHECK_THROWS_AS(leading_triple(ZeroFamily::J, 1, 0), DomainError);
}
