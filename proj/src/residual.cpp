#include "besselzeros/residual.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "besselzeros/errors.hpp"

namespace besselzeros {

namespace {

ZeroFamily parse_family(const std::string& s, int lineno) {
  if (s == "j") return ZeroFamily::J;
  if (s == "y") return ZeroFamily::Y;
  if (s == "jprime") return ZeroFamily::JPrime;
  throw FormatError("fixture line " + std::to_string(lineno) + ": unknown family " + s);
}

FixtureKind parse_kind(const std::string& s, int lineno) {
  if (s == "true_zero") return FixtureKind::TrueZero;
  if (s == "scaled_value") return FixtureKind::ScaledValue;
  throw FormatError("fixture line " + std::to_string(lineno) + ": unknown kind " + s);
}

}  // namespace

FixtureSet FixtureSet::load(std::istream& in) {
  FixtureSet set;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::string family, kind;
    FixtureRow r;
    if (!(row >> family >> r.nu >> r.m >> kind >> r.digits >> r.value)) {
      throw FormatError("fixture line " + std::to_string(lineno) + ": expected 6 fields");
    }
    r.family = parse_family(family, lineno);
    r.kind = parse_kind(kind, lineno);
    if (r.digits < kMinDigits) {
      throw FormatError("fixture line " + std::to_string(lineno) + ": fewer than " +
                        std::to_string(kMinDigits) + " digits");
    }
    set.add(std::move(r));
  }
  return set;
}

FixtureSet FixtureSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureMissing("cannot open fixture file " + path);
  return load(in);
}

void FixtureSet::add(FixtureRow row) { rows_.push_back(std::move(row)); }

std::optional<FixtureRow> FixtureSet::find(ZeroFamily family, const std::string& nu, int m,
                                           FixtureKind kind) const {
  for (const auto& r : rows_) {
    if (r.family == family && r.nu == nu && r.m == m && r.kind == kind) return r;
  }
  return std::nullopt;
}

BesselPair bessel_taylor(const BigReal& nu, const BigReal& a, const BigReal& y0, const BigReal& y1,
                         const BigReal& x) {
  const int target = WorkingPrecision::digits();
  BesselPair out;
  {
    WorkingPrecision wp(target + 10);
    const BigReal t = x - a;
    const BigReal a2 = a * a;
    const BigReal nu2 = nu * nu;
    const BigReal scale = abs(y0) + abs(y1);
    const BigReal eps = epsilon_digits(target + 5) * (scale.is_zero() ? BigReal(1) : scale);
    // c_{n+2} a^2 (n+2)(n+1) = -[a (n+1)(2n+1) c_{n+1} + (n^2 + a^2 - nu^2) c_n + 2a c_{n-1} + c_{n-2}]
    BigReal cm2 = 0, cm1 = 0, c0 = y0, c1 = y1;
    BigReal J = y0 + y1 * t, Jp = y1;
    BigReal tn = t;  // t^{n+1} for the current n
    int small = 0;
    for (long n = 0; n < 100000; ++n) {
      const BigReal c2 = -(a * BigReal((n + 1) * (2 * n + 1)) * c1 + (BigReal(n * n) + a2 - nu2) * c0 +
                           2 * a * cm1 + cm2) /
                         (a2 * BigReal((n + 2) * (n + 1)));
      const BigReal dJp = BigReal(n + 2) * c2 * tn;
      tn *= t;
      const BigReal dJ = c2 * tn;
      J += dJ;
      Jp += dJp;
      small = (abs(dJ) < eps && abs(dJp) < eps) ? small + 1 : 0;
      if (small >= 4) break;
      cm2 = cm1;
      cm1 = c0;
      c0 = c1;
      c1 = c2;
    }
    if (small < 4) throw NumericFailure("Taylor expansion about the fixture zero did not converge");
    out.J = J;
    out.Jprime = Jp;
  }
  out.J = at_working_precision(out.J);
  out.Jprime = at_working_precision(out.Jprime);
  return out;
}

BesselPair BesselEvaluator::eval(const BigReal& nu, const BigReal& x) const {
  if (x.to_double() <= kXBessel) return bessel_j_series(nu, x);
  const std::string where = "nu=" + nu.to_string(10) + ", x=" + x.to_string(10);
  if (fixtures_ == nullptr) throw FixtureMissing("no fixtures loaded for " + where);

  const BigReal tol_nu = epsilon_digits(WorkingPrecision::digits() - 5) * max(BigReal(1), nu);
  const FixtureRow* best = nullptr;
  BigReal best_anchor, best_dist;
  for (const auto& r : fixtures_->rows()) {
    if (r.kind != FixtureKind::TrueZero || r.family == ZeroFamily::Y) continue;
    WorkingPrecision wp(std::max(WorkingPrecision::digits(), r.digits));
    if (abs(BigReal(r.nu) - nu) > tol_nu) continue;
    BigReal anchor(r.value);
    BigReal dist = abs(anchor - x);
    if (dist.to_double() <= kMaxAnchorDistance && (best == nullptr || dist < best_dist)) {
      best = &r;
      best_anchor = anchor;
      best_dist = dist;
    }
  }
  if (best == nullptr) throw FixtureMissing("no fixture anchor near " + where);
  const auto paired = fixtures_->find(best->family, best->nu, best->m, FixtureKind::ScaledValue);
  if (!paired) throw FixtureMissing("fixture anchor without scaled value near " + where);

  BigReal y0, y1;
  {
    WorkingPrecision wp(std::max(WorkingPrecision::digits(), paired->digits));
    const BigReal a = best_anchor;
    const BigReal scaled(paired->value);
    const BigReal za = a / nu;
    const BigReal quarter = sqrt(sqrt(za * za - 1));
    const BigReal norm = sqrt(pi() * nu / 2);
    if (best->family == ZeroFamily::J) {
      y0 = 0;
      y1 = scaled * quarter / (norm * za);
    } else {
      y0 = scaled / (norm * quarter);
      y1 = 0;
    }
  }
  return bessel_taylor(nu, best_anchor, y0, y1, x);
}

BigReal scaled_J(const BigReal& nu, const BigReal& z, const BesselEvaluator& eval) {
  if (!(z > BigReal(1))) throw DomainError("scaled_J needs z > 1");
  const BesselPair p = eval.eval(nu, nu * z);
  return sqrt(pi() * nu / 2) * sqrt(sqrt(z * z - 1)) * p.J;
}

BigReal scaled_Jprime(const BigReal& nu, const BigReal& z, const BesselEvaluator& eval) {
  if (!(z > BigReal(1))) throw DomainError("scaled_Jprime needs z > 1");
  const BesselPair p = eval.eval(nu, nu * z);
  return sqrt(pi() * nu / 2) * z * p.Jprime / sqrt(sqrt(z * z - 1));
}

bool TableReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.pass; });
}

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.pass; }));
}

const int TableGrid::kNus[5] = {1, 5, 10, 100, 1000};
const int TableGrid::kMs[5] = {1, 5, 10, 100, 1000};

const char* TableGrid::expected(int which, int i, int j) {
  static const char* const kTable1[5][5] = {
      {"1.5166e-06", "5.5411e-11", "-2.0881e-13", "-3.8278e-22", "-4.0685e-31"},
      {"4.8691e-11", "4.8816e-13", "-1.2090e-14", "-2.6932e-22", "-3.9246e-31"},
      {"1.6998e-13", "1.1644e-14", "-8.6674e-16", "-1.7677e-22", "-3.7526e-31"},
      {"1.9854e-22", "2.0479e-22", "-1.4881e-22", "-7.8795e-25", "-1.7358e-31"},
      {"1.0908e-31", "1.7930e-31", "-2.0627e-31", "-1.4651e-31", "-7.8009e-36"},
  };
  static const char* const kTable2[5][5] = {
      {"-6.1638e-05", "-1.3266e-10", "3.3843e-13", "4.2065e-22", "4.2923e-31"},
      {"-2.5791e-07", "-8.6953e-13", "1.7800e-14", "2.9612e-22", "4.1413e-31"},
      {"-2.8314e-08", "-1.8659e-14", "1.2075e-15", "1.9451e-22", "3.9608e-31"},
      {"-1.4954e-11", "-5.9170e-19", "5.9462e-21", "8.8919e-25", "1.8405e-31"},
      {"-7.1291e-15", "-3.4984e-22", "4.0750e-24", "3.9395e-30", "8.6458e-34"},
  };
  if (which != 1 && which != 2) throw DomainError("table must be 1 or 2");
  if (i < 0 || i > 4 || j < 0 || j > 4) throw DomainError("table index out of range");
  return which == 1 ? kTable1[i][j] : kTable2[i][j];
}

TableReport reproduce_table(int which, ZeroSolver& solver, const BesselEvaluator& eval, int digits,
                            double tolerance) {
  if (which != 1 && which != 2) throw DomainError("table must be 1 or 2");
  TableReport report;
  report.which = which;
  report.digits = digits;
  report.tolerance = tolerance;
  const ZeroFamily family = which == 1 ? ZeroFamily::J : ZeroFamily::JPrime;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      TableCell cell;
      cell.nu = TableGrid::kNus[i];
      cell.m = TableGrid::kMs[j];
      cell.expected = TableGrid::expected(which, i, j);
      try {
        const ZeroResult r = solver.solve(family, BigReal(cell.nu), cell.m, 4, digits);
        WorkingPrecision wp(digits + ZeroSolver::kGuardDigits);
        const BigReal nu(cell.nu);
        BigReal value = which == 1 ? scaled_J(nu, r.z(), eval) : scaled_Jprime(nu, r.z(), eval);
        const BigReal expected(std::string(cell.expected));
        cell.rel_dev = (abs(value - expected) / abs(expected)).to_double();
        cell.pass = cell.rel_dev <= tolerance;
        cell.computed = value;
      } catch (const FixtureMissing& e) {
        cell.error = e.what();
      } catch (const NumericFailure& e) {
        cell.error = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace besselzeros
