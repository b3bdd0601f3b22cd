#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "besselzeros/bessel_series.hpp"
#include "besselzeros/big_real.hpp"
#include "besselzeros/leading.hpp"
#include "besselzeros/zero_expansion.hpp"

namespace besselzeros {

enum class FixtureKind { TrueZero, ScaledValue };

// One offline reference record. For a TrueZero the value is x = nu z at the
// exact zero. A ScaledValue pairs with the TrueZero of the same (family, nu, m)
// and holds the complementary scaled function there: the scaled J' at a zero
// of J, or the scaled J at a zero of J'.
struct FixtureRow {
  ZeroFamily family = ZeroFamily::J;
  std::string nu;
  int m = 0;
  FixtureKind kind = FixtureKind::TrueZero;
  int digits = 0;
  std::string value;
};

// Records "<family> <nu> <m> <kind> <digits> <value>"; '#' starts a comment.
class FixtureSet {
 public:
  static constexpr int kMinDigits = 30;

  FixtureSet() = default;
  static FixtureSet load(std::istream& in);
  static FixtureSet load_file(const std::string& path);

  const std::vector<FixtureRow>& rows() const { return rows_; }
  void add(FixtureRow row);
  std::optional<FixtureRow> find(ZeroFamily family, const std::string& nu, int m,
                                 FixtureKind kind) const;

 private:
  std::vector<FixtureRow> rows_;
};

// J_nu and J_nu' for real order nu >= 0: the ascending series up to
// kXBessel, beyond that a Taylor expansion of Bessel's equation about a
// fixture zero with the same order.
class BesselEvaluator {
 public:
  // Largest admissible distance from a fixture anchor.
  static constexpr double kMaxAnchorDistance = 0.5;

  explicit BesselEvaluator(const FixtureSet* fixtures = nullptr) : fixtures_(fixtures) {}
  BesselPair eval(const BigReal& nu, const BigReal& x) const;

 private:
  const FixtureSet* fixtures_;
};

// Taylor expansion about x = a of the solution of
// x^2 y'' + x y' + (x^2 - nu^2) y = 0 with y(a) = y0, y'(a) = y1.
BesselPair bessel_taylor(const BigReal& nu, const BigReal& a, const BigReal& y0, const BigReal& y1,
                         const BigReal& x);

// sqrt(pi nu / 2) (z^2 - 1)^{1/4} J_nu(nu z)
BigReal scaled_J(const BigReal& nu, const BigReal& z, const BesselEvaluator& eval);
// sqrt(pi nu / 2) z J_nu'(nu z) / (z^2 - 1)^{1/4}
BigReal scaled_Jprime(const BigReal& nu, const BigReal& z, const BesselEvaluator& eval);

struct TableCell {
  int nu = 0;
  int m = 0;
  std::string expected;  // printed constant
  std::optional<BigReal> computed;
  double rel_dev = 0;
  bool pass = false;
  std::string error;  // set when the cell could not be evaluated
};

struct TableReport {
  int which = 1;
  int digits = 0;
  double tolerance = 0;
  std::vector<TableCell> cells;

  bool all_pass() const;
  std::size_t failures() const;
};

struct TableGrid {
  static const int kNus[5];
  static const int kMs[5];
  // expected(which, i, j) for nu = kNus[i], m = kMs[j].
  static const char* expected(int which, int i, int j);
};

inline constexpr double kTableTolerance = 5e-3;

// Table 1: scaled J at z_4(nu, m). Table 2: scaled J' at the J' zero estimate.
TableReport reproduce_table(int which, ZeroSolver& solver, const BesselEvaluator& eval,
                            int digits = WorkingPrecision::kDefaultDigits,
                            double tolerance = kTableTolerance);

}  // namespace besselzeros
