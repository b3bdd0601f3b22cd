#include <doctest.h>

#include <cmath>
#include <vector>

#include "besselzeros/errors.hpp"
#include "besselzeros/residual.hpp"
#include "besselzeros/zero_expansion.hpp"
#include "support/expr.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

using namespace besselzeros;
using testsupport::parse_expression;

namespace {

ZeroSolver& solver() {
  static ZeroSolver s;
  return s;
}

double rel(const BigReal& a, const BigReal& b) { return abs(a / b - 1).to_double(); }

// Coefficients z_{m,0..S} at a triple, with enough digits to absorb the
// cancellation near the turning point.
std::vector<BigReal> coefficients_at(ZeroFamily f, const LeadingTriple& t, int terms) {
  return zero_coefficients(solver().table(coefficient_family(f), terms), t, terms);
}

// Exact agreement at random rational points; the closed forms only need to
// agree as functions, not term by term.
void check_agrees(const RingElem& got, const RingElem& want, std::uint64_t seed) {
  testsupport::Gen g(seed);
  for (int i = 0; i < 25; ++i) {
    const auto p = g.triple();
    CHECK(ring_eval(got, p) == ring_eval(want, p));
  }
}

}  // namespace

TEST_CASE("derivative table starts with zeta' = -1/(sigma z)") {
  const DerivTable& t = solver().table(Family::Standard, 4);
  REQUIRE(t.zeta_derivs.size() == 5);
  CHECK(t.zeta_derivs[0] == RingElem::zeta());
  CHECK(t.zeta_derivs[1] == RingElem::monomial(-1, {-1, 0, -1}));
  CHECK(t.zeta_derivs[2] == ring_diff(t.zeta_derivs[1]));
  for (int j = 1; j <= 4; ++j) {
    for (int k = 0; j + k <= 4; ++k) {
      CHECK(t.ups_derivs.count({j, k}) == 1);
    }
  }
  CHECK(t.ups_derivs.count({4, 1}) == 0);
}

TEST_CASE("symbolic z_{m,1}, z_{m,2} match their closed forms") {
  const auto vars = testsupport::sigma_zeta_z();
  const auto zm = symbolic_zero_coefficients(solver().table(Family::Standard, 2), 2);
  const auto zt = symbolic_zero_coefficients(solver().table(Family::Derivative, 2), 2);
  check_agrees(zm[0], parse_expression(golden::kZeroCoeff[0], vars), 101);
  check_agrees(zm[1], parse_expression(golden::kZeroCoeff[1], vars), 102);
  check_agrees(zt[0], parse_expression(golden::kZeroCoeffTilde[0], vars), 103);
  check_agrees(zt[1], parse_expression(golden::kZeroCoeffTilde[1], vars), 104);
  // z_{m,1} is exactly z sigma Upsilon_1.
  CHECK(zm[0] == parse_expression(golden::kZeroCoeff[0], vars));
}

TEST_CASE("symbolic z_{m,1..4} match the worksheet expressions") {
  const auto zm = symbolic_zero_coefficients(solver().table(Family::Standard, 4), 4);
  const auto zt = symbolic_zero_coefficients(solver().table(Family::Derivative, 4), 4);
  REQUIRE(zm.size() == 4);
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    check_agrees(zm[s - 1], parse_expression(golden::kWorksheetZm[s - 1], testsupport::worksheet_xyz()), 200 + s);
    check_agrees(zt[s - 1], parse_expression(golden::kWorksheetZt[s - 1], testsupport::worksheet_uvw()), 300 + s);
  }
}

TEST_CASE("second coefficient follows the chain-rule formula") {
  // z_2 = -(1/(2 zeta')) (z_1^2 zeta'' + 2 z_1 Upsilon_1' + 2 Upsilon_2), -1/zeta' = z sigma
  const DerivTable& t = solver().table(Family::Standard, 2);
  const auto zm = symbolic_zero_coefficients(t, 2);
  const RingElem half_z_sigma = RingElem::monomial(make_rational(1, 2), {1, 0, 1});
  const RingElem z1 = zm[0];
  const RingElem want =
      half_z_sigma * (z1 * z1 * t.zeta_derivs[2] + 2 * z1 * t.ups_derivs.at({1, 1}) + 2 * t.ups_derivs.at({2, 0}));
  CHECK(zm[1] == want);
}

TEST_CASE("numeric coefficients equal the symbolic ones evaluated") {
  WorkingPrecision wp(50);
  const DerivTable& table = solver().table(Family::Derivative, 4);
  const auto sym = symbolic_zero_coefficients(table, 4);
  const LeadingTriple t = triple_from_z0(BigReal("2.75"));
  const auto num = zero_coefficients(table, t, 4);
  REQUIRE(num.size() == 5);
  CHECK(num[0] == t.z0);
  for (int s = 1; s <= 4; ++s) CHECK(rel(num[s], ring_eval(sym[s - 1], t.point())) < 1e-45);
}

TEST_CASE("turning-point limits of z_{m,1..4}") {
  WorkingPrecision wp(140);
  const LeadingTriple t = triple_from_zeta(BigReal("-1e-4"));
  const auto c = coefficients_at(ZeroFamily::J, t, 4);
  const BigReal want[] = {BigReal(1) / 70, -BigReal(3781) / 3185 * BigReal("1e-3"),
                          BigReal(722735647) / BigReal(163087925) * BigReal("1e-4"),
                          -BigReal(56446083463751L) / BigReal(14841001175L) * BigReal("1e-7")};
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    CHECK(rel(c[s], want[s - 1]) <= 1e-3);
  }
}

TEST_CASE("large-z0 behaviour") {
  WorkingPrecision wp(60);
  const BigReal lead[] = {BigReal(1) / 18, -BigReal(71) / 1944, BigReal(6673) / 58320,
                          -BigReal(25500599) / BigReal(29393280)};
  const BigReal k[] = {BigReal(5) / 18, BigReal(25) / 1944, BigReal(1465) / 11664,
                       BigReal(5354165) / BigReal(5878656)};
  auto devs = [&](const char* z0s, std::vector<double>& std_dev, std::vector<double>& tilde_dev) {
    const LeadingTriple t = triple_from_z0(BigReal(z0s));
    const auto c = coefficients_at(ZeroFamily::J, t, 4);
    const auto ct = coefficients_at(ZeroFamily::JPrime, t, 4);
    for (int s = 1; s <= 4; ++s) {
      const BigReal scale = pow(t.z0, static_cast<long>(2 * s - 1));
      std_dev.push_back(rel(c[s] * scale, lead[s - 1]));
      const BigReal sign = s % 2 == 0 ? BigReal(1) : BigReal(-1);
      tilde_dev.push_back(rel(ct[s] * scale, sign * k[s - 1]));
    }
  };
  std::vector<double> d3, t3, d4, t4;
  devs("1e3", d3, t3);
  devs("1e4", d4, t4);
  // Within 1e-2 at z0 = 1e3 where the O(1/z0) coefficient allows it.
  CHECK(d3[0] <= 1e-2);
  CHECK(d3[1] <= 1e-2);
  CHECK(d3[2] <= 1e-2);
  CHECK(t3[0] <= 1e-2);
  CHECK(t3[2] <= 1e-2);
  // Everywhere: deviations fall tenfold per decade, the O(1/z0) rate.
  for (int s = 0; s < 4; ++s) {
    CAPTURE(s);
    CHECK(d4[s] <= 2e-3);
    CHECK(t4[s] <= 2e-3);
    CHECK(d3[s] / d4[s] == doctest::Approx(10).epsilon(0.1));
    CHECK(t3[s] / t4[s] == doctest::Approx(10).epsilon(0.1));
  }
}

TEST_CASE("derivative-family coefficients blow up at the turning point") {
  WorkingPrecision wp(120);
  const BigReal t("1e-3");
  const LeadingTriple tr = triple_from_z0(1 + t);
  const auto c = coefficients_at(ZeroFamily::JPrime, tr, 4);
  const BigReal want[] = {BigReal(-1) / 10, BigReal(-1) / 200, BigReal(-1) / 2000, BigReal(-1) / 16000};
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    CHECK(rel(c[s] * pow(t, static_cast<long>(2 * s - 1)), want[s - 1]) <= 1e-2);
  }
}

TEST_CASE("zeros of J_1 and J_1' at m = 1") {
  const ZeroResult j = solver().solve(ZeroFamily::J, 1, 1, 4, 40);
  CHECK(std::fabs(j.x().to_double() - 3.8317059702) <= 5e-6);
  const ZeroResult jp = solver().solve(ZeroFamily::JPrime, 1, 1, 4, 40);
  CHECK(std::fabs(jp.x().to_double() - 1.8411837813) <= 5e-4);
}

TEST_CASE("zero result bookkeeping") {
  WorkingPrecision wp(40);
  const BigReal nu(7);
  const ZeroResult r = solver().solve(ZeroFamily::J, nu, 3, 4, 40);
  REQUIRE(r.partial_sums.size() == 5);
  REQUIRE(r.coefficients.size() == 5);
  CHECK(r.partial_sums[0] == r.triple.z0);
  CHECK(r.proximity == r.triple.z0_minus_1);
  for (int S = 1; S <= 4; ++S) {
    const BigReal step = r.coefficients[S] / pow(nu, static_cast<long>(2 * S));
    CHECK(abs(r.partial_sums[S] - r.partial_sums[S - 1] - step) <= epsilon_digits(38) * r.z());
    CHECK(abs(r.x_values[S] - nu * r.partial_sums[S]) <= epsilon_digits(38) * r.x());
  }
  const ZeroResult r0 = solver().solve(ZeroFamily::J, nu, 3, 0, 40);
  CHECK(r0.partial_sums.size() == 1);
  CHECK(r0.z() == r0.triple.z0);
  CHECK_THROWS_AS(solver().solve(ZeroFamily::J, nu, 3, 7, 40), DomainError);
  CHECK_THROWS_AS(solver().solve(ZeroFamily::J, nu, 0, 4, 40), DomainError);
}

TEST_CASE("Y zeros use b_m") {
  const FixtureSet fixtures = FixtureSet::load_file(BESSELZEROS_FIXTURES);
  const auto row = fixtures.find(ZeroFamily::Y, "10", 3, FixtureKind::TrueZero);
  REQUIRE(row.has_value());
  WorkingPrecision wp(60);
  const ZeroResult r = solver().solve(ZeroFamily::Y, 10, 3, 4, 40);
  CHECK(r.triple.family == ZeroFamily::Y);
  CHECK(abs(r.x() - BigReal(row->value)).to_double() < 1e-9);
  // The three-term result is worse than the four-term one.
  CHECK(abs(r.x_values[3] - BigReal(row->value)) > abs(r.x() - BigReal(row->value)));
}

TEST_CASE("successive corrections shrink like nu^-2 for J zeros") {
  for (int nu : {5, 10, 50}) {
    for (int m = 1; m <= 20; ++m) {
      const ZeroResult r = solver().solve(ZeroFamily::J, nu, m, 4, 30);
      for (int S = 2; S <= 4; ++S) {
        CAPTURE(nu);
        CAPTURE(m);
        CAPTURE(S);
        const BigReal now = abs(r.partial_sums[S] - r.partial_sums[S - 1]);
        const BigReal before = abs(r.partial_sums[S - 1] - r.partial_sums[S - 2]);
        CHECK(now <= 10 * before / (nu * nu));
      }
    }
  }
}

TEST_CASE("J and J' zeros interlace") {
  for (int nu : {2, 10, 100}) {
    ZeroResult next = solver().solve(ZeroFamily::JPrime, nu, 1, 4, 30);
    for (int m = 1; m <= 20; ++m) {
      CAPTURE(nu);
      CAPTURE(m);
      const ZeroResult jp = next;
      const ZeroResult j = solver().solve(ZeroFamily::J, nu, m, 4, 30);
      next = solver().solve(ZeroFamily::JPrime, nu, m + 1, 4, 30);
      CHECK(jp.x() < j.x());
      CHECK(j.x() < next.x());
    }
  }
}

TEST_CASE("free function matches the solver") {
  const ZeroResult a = zero_expansion(ZeroFamily::JPrime, 3, 2, 3, 30);
  const ZeroResult b = solver().solve(ZeroFamily::JPrime, 3, 2, 3, 30);
  CHECK(a.x() == b.x());
}
