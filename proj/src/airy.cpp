#include "besselzeros/airy.hpp"

#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "besselzeros/errors.hpp"

namespace besselzeros {

AirySequence::AirySequence(Family family) : family_(family) {
  const Rational a1 = family == Family::Standard ? make_rational(5, 72) : make_rational(-7, 72);
  values_ = {a1, a1};
}

Rational AirySequence::operator()(int n) {
  if (n < 1) throw DomainError("a_seq index must be >= 1, got " + std::to_string(n));
  while (static_cast<int>(values_.size()) < n) {
    const int s = static_cast<int>(values_.size());  // computing a_{s+1}
    Rational next = make_rational(s + 1, 2) * values_[s - 1];
    Rational conv = 0;
    for (int j = 1; j <= s - 1; ++j) conv += values_[j - 1] * values_[s - j - 1];
    next += conv / 2;
    values_.push_back(next);
  }
  return values_[n - 1];
}

Rational a_seq(int n, Family family) {
  AirySequence seq(family);
  return seq(n);
}

const char* kind_name(AiryZeroKind k) {
  switch (k) {
    case AiryZeroKind::A: return "a";
    case AiryZeroKind::B: return "b";
    case AiryZeroKind::APrime: return "aprime";
  }
  return "?";
}

namespace {

constexpr double kXAiry = 12.0;
constexpr int kMaxDigits = 100000;

// Trigonometric expansion for x = -X, X > 0. Empty when its smallest term
// cannot reach the target precision.
std::optional<BigReal> airy_asymptotic(const BigReal& X, AiryFunction which, int order, int target) {
  const double xd = X.to_double();
  const double xi_d = 2.0 / 3.0 * std::pow(xd, 1.5);
  if (2.0 * xi_d * 0.4342944819 < target + 5) return std::nullopt;

  WorkingPrecision wp(target + 10);
  const BigReal xi = BigReal(2) / 3 * X * sqrt(X);
  const BigReal eps = epsilon_digits(target + 5);
  BigReal even = 0, odd = 0;
  BigReal u = 1, inv_xi_k = 1;
  BigReal last = 0;
  bool converged = false;
  for (int k = 0; k < 100000; ++k) {
    if (k > 0) {
      u *= BigReal((6L * k - 5) * (6L * k - 3) * (6L * k - 1)) / BigReal((2L * k - 1) * 216L * k);
      inv_xi_k /= xi;
    }
    BigReal c = order == 0 ? u : -BigReal(6L * k + 1) / BigReal(6L * k - 1) * u;
    if (k == 0) c = 1;
    BigReal term = c * inv_xi_k;
    if (k > 0 && abs(term) > abs(last)) break;
    const bool negative = (k / 2) % 2 == 1;
    if (k % 2 == 0) {
      even += negative ? -term : term;
    } else {
      odd += negative ? -term : term;
    }
    last = term;
    if (abs(term) < eps) {
      converged = true;
      break;
    }
  }
  if (!converged) return std::nullopt;

  const BigReal phase = xi - pi() / 4;
  const BigReal c = cos(phase), s = sin(phase);
  const BigReal x4 = sqrt(sqrt(X));
  const BigReal rpi = sqrt(pi());
  BigReal r;
  if (order == 0) {
    r = which == AiryFunction::Ai ? c * even + s * odd : -s * even + c * odd;
    r = r / (rpi * x4);
  } else {
    r = which == AiryFunction::Ai ? s * even - c * odd : c * even + s * odd;
    r = r * x4 / rpi;
  }
  return r;
}

BigReal airy_maclaurin(const BigReal& x, AiryFunction which, int order, int target) {
  const double xd = std::fabs(x.to_double());
  const double growth = (x.sign() < 0 ? 2.0 / 3.0 : 4.0 / 3.0) * std::pow(xd, 1.5) * 0.4342944819;
  const double work_d = target + std::ceil(growth) + 10;
  if (work_d > kMaxDigits) {
    throw NumericFailure("airy_eval: cancellation at x = " + x.to_string(10) +
                         " needs more than " + std::to_string(kMaxDigits) + " digits");
  }
  WorkingPrecision wp(static_cast<int>(work_d));
  const BigReal eps = epsilon_digits(static_cast<int>(work_d));
  const BigReal x3 = x * x * x;
  const double x3d = xd * xd * xd;
  // f = sum t_k, f' = x^2 sum_{k>=1} t_{k-1}/(3k-1); g = x sum v_k, g' = sum (3k+1) v_k.
  BigReal t = 1, v = 1;
  BigReal f = 1, fp = 0, g = 1, gp = 1;
  for (long k = 1;; ++k) {
    fp += t / BigReal(3 * k - 1);
    t = t * x3 / BigReal((3 * k - 1) * (3 * k));
    v = v * x3 / BigReal((3 * k) * (3 * k + 1));
    f += t;
    g += v;
    gp += BigReal(3 * k + 1) * v;
    const bool shrinking = x3d < 4.5 * static_cast<double>(k * k);
    if (shrinking && abs(t) * BigReal(1 + xd * xd) < eps &&
        abs(v) * BigReal((3 * k + 1) * (1 + xd)) < eps) break;
    if (k > 10000000) throw NumericFailure("airy_eval: Maclaurin series did not converge");
  }
  const BigReal c1 = pow(BigReal(3), BigReal(-2) / 3) / gamma(BigReal(2) / 3);
  const BigReal c2 = pow(BigReal(3), BigReal(-1) / 3) / gamma(BigReal(1) / 3);
  BigReal F, G;
  if (order == 0) {
    F = f;
    G = x * g;
  } else {
    F = x * x * fp;
    G = gp;
  }
  if (which == AiryFunction::Ai) return c1 * F - c2 * G;
  return sqrt(BigReal(3)) * (c1 * F + c2 * G);
}

}  // namespace

BigReal airy_eval(const BigReal& x, AiryFunction which, int order) {
  if (order != 0 && order != 1) throw DomainError("airy_eval order must be 0 or 1");
  if (!x.is_finite()) throw DomainError("airy_eval at a non-finite point");
  const int target = WorkingPrecision::digits();
  if (x.to_double() < -kXAiry) {
    if (auto r = airy_asymptotic(-x, which, order, target)) return at_working_precision(*r);
  }
  return at_working_precision(airy_maclaurin(x, which, order, target));
}

Bracket airy_zero_bracket(AiryZeroKind kind, int m) {
  if (m < 1) throw DomainError("Airy zero index must be >= 1, got " + std::to_string(m));
  const BigReal p = pi();
  const BigReal two_thirds = BigReal(2) / 3;
  switch (kind) {
    case AiryZeroKind::A: {
      const BigReal t = BigReal(3) / 8 * BigReal(4L * m - 1) * p;
      const BigReal t23 = pow(t, two_thirds);
      return {-t23 * (1 + BigReal(5) / (48 * t * t)), -t23};
    }
    case AiryZeroKind::APrime: {
      const BigReal w = BigReal(4L * m - 1) * p;
      const BigReal x1 = -pow(3 * w, two_thirds) / 4 * (1 + BigReal(20) / (27 * w * w));
      const long k = std::max(4L * m - 5, 0L);
      const BigReal x2 = k == 0 ? BigReal(0) : -pow(BigReal(3 * k) * p, two_thirds) / 4;
      return {x1, x2};
    }
    case AiryZeroKind::B: {
      // Phase-shifted analogue of the Ai seed, widened by a quarter of the local spacing.
      const BigReal t = BigReal(3) / 8 * BigReal(4L * m - 3) * p;
      const BigReal seed = -pow(t, two_thirds) * (1 + BigReal(5) / (48 * t * t));
      const BigReal quarter = p / sqrt(abs(seed)) / 4;
      return {seed - quarter, seed + quarter};
    }
  }
  throw DomainError("unknown Airy zero kind");
}

namespace {

struct FnPair {
  BigReal f;
  BigReal df;
};

FnPair zero_function(AiryZeroKind kind, const BigReal& x) {
  switch (kind) {
    case AiryZeroKind::A:
      return {airy_eval(x, AiryFunction::Ai, 0), airy_eval(x, AiryFunction::Ai, 1)};
    case AiryZeroKind::B:
      return {airy_eval(x, AiryFunction::Bi, 0), airy_eval(x, AiryFunction::Bi, 1)};
    case AiryZeroKind::APrime:
      return {airy_eval(x, AiryFunction::Ai, 1), x * airy_eval(x, AiryFunction::Ai, 0)};
  }
  throw DomainError("unknown Airy zero kind");
}

}  // namespace

BigReal airy_zero(AiryZeroKind kind, int m) {
  const int digits = WorkingPrecision::digits();
  Bracket br = airy_zero_bracket(kind, m);
  BigReal lo = br.lo, hi = br.hi;
  {
    WorkingPrecision wp(digits + 5);
    const BigReal tol = epsilon_digits(digits + 2);
    FnPair flo = zero_function(kind, lo);
    FnPair fhi = zero_function(kind, hi);
    if (flo.f.sign() * fhi.f.sign() > 0) {
      throw NumericFailure(std::string("bracket failure for Airy zero ") + kind_name(kind) + "_" +
                           std::to_string(m));
    }
    if (flo.f.is_zero()) return at_working_precision(lo);
    if (fhi.f.is_zero()) return at_working_precision(hi);
    const int sign_lo = flo.f.sign();
    BigReal x = (lo + hi) / 2;
    for (int it = 0; it < 1000; ++it) {
      FnPair fx = zero_function(kind, x);
      if (fx.f.is_zero()) return at_working_precision(x);
      if (fx.f.sign() == sign_lo) {
        lo = x;
      } else {
        hi = x;
      }
      BigReal next;
      bool newton_ok = !fx.df.is_zero();
      if (newton_ok) {
        next = x - fx.f / fx.df;
        newton_ok = next >= lo && next <= hi;
      }
      if (!newton_ok) next = (lo + hi) / 2;
      const BigReal step = abs(next - x);
      x = next;
      if (step <= tol * max(BigReal(1), abs(x))) return at_working_precision(x);
    }
  }
  throw NumericFailure(std::string("iteration limit for Airy zero ") + kind_name(kind) + "_" +
                       std::to_string(m));
}

BigReal AiryZeroCache::get(AiryZeroKind kind, int m) {
  const int digits = WorkingPrecision::digits();
  if (auto hit = find(kind, m, digits)) return *hit;
  BigReal v = airy_zero(kind, m);
  store(kind, m, digits, v);
  return v;
}

std::optional<BigReal> AiryZeroCache::find(AiryZeroKind kind, int m, int digits) const {
  auto it = entries_.find({static_cast<int>(kind), m, digits});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void AiryZeroCache::store(AiryZeroKind kind, int m, int digits, const BigReal& value) {
  entries_.insert_or_assign(std::tuple{static_cast<int>(kind), m, digits}, value);
}

void AiryZeroCache::load(std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string kind, value;
    int m = 0, digits = 0;
    if (!(row >> kind >> m >> digits >> value)) {
      throw FormatError("zero cache line " + std::to_string(lineno) + ": expected 4 fields");
    }
    AiryZeroKind k;
    if (kind == "a") {
      k = AiryZeroKind::A;
    } else if (kind == "b") {
      k = AiryZeroKind::B;
    } else if (kind == "aprime") {
      k = AiryZeroKind::APrime;
    } else {
      throw FormatError("zero cache line " + std::to_string(lineno) + ": unknown kind " + kind);
    }
    WorkingPrecision wp(std::max(digits, WorkingPrecision::kMinDigits));
    store(k, m, digits, BigReal(value));
  }
}

void AiryZeroCache::save(std::ostream& out) const {
  out << "# kind m digits value\n";
  for (const auto& [key, value] : entries_) {
    const auto [kind, m, digits] = key;
    out << kind_name(static_cast<AiryZeroKind>(kind)) << ' ' << m << ' ' << digits << ' '
        << value.to_string(digits) << '\n';
  }
}

}  // namespace besselzeros
