#include "besselzeros/leading.hpp"

#include <cmath>
#include <string>

#include "besselzeros/errors.hpp"

namespace besselzeros {

const char* family_name(ZeroFamily f) {
  switch (f) {
    case ZeroFamily::J: return "j";
    case ZeroFamily::Y: return "y";
    case ZeroFamily::JPrime: return "jprime";
  }
  return "?";
}

AiryZeroKind airy_kind(ZeroFamily f) {
  switch (f) {
    case ZeroFamily::J: return AiryZeroKind::A;
    case ZeroFamily::Y: return AiryZeroKind::B;
    case ZeroFamily::JPrime: return AiryZeroKind::APrime;
  }
  return AiryZeroKind::A;
}

Family coefficient_family(ZeroFamily f) {
  return f == ZeroFamily::JPrime ? Family::Derivative : Family::Standard;
}

namespace {

constexpr double kSeriesT = 1e-4;

// phi(1+t) = sqrt(2) sum_k c_k t^{k+3/2} / (k+3/2) and its t-derivative
// sqrt(2) sum_k c_k t^{k+1/2}, where sum_k c_k u^k = (1+u/2)^{1/2} / (1+u).
struct SeriesValue {
  BigReal phi;
  BigReal dphi;
};

SeriesValue phi_series(const BigReal& t) {
  const BigReal eps = epsilon_digits(WorkingPrecision::digits() + 2);
  // b_j: coefficients of (1+u/2)^{1/2}; c_k = sum_{j<=k} b_j (-1)^{k-j}.
  Rational b = 1, c = 0;
  BigReal tk = 1, sum = 0, dsum = 0;
  for (int k = 0; k < 100000; ++k) {
    if (k > 0) b *= make_rational(3 - 2 * k, 4 * k);  // binom(1/2,k)/2^k from its predecessor
    c = b - c;
    const BigReal ck(c);
    const BigReal term = ck * tk;
    dsum += term;
    sum += term / (BigReal(2 * k + 3) / 2);
    if (k > 2 && abs(term) < eps * abs(dsum)) break;
    tk *= t;
  }
  const BigReal rt = sqrt(2 * t);
  return {rt * t * sum, rt * dsum};
}

}  // namespace

BigReal phi_eval(const BigReal& z) {
  if (z < BigReal(1)) throw DomainError("phi_eval needs z >= 1, got " + z.to_string(20));
  const BigReal t = z - 1;
  if (t.is_zero()) return BigReal(0);
  if (t < BigReal(kSeriesT)) return phi_series(t).phi;
  BigReal r;
  {
    WorkingPrecision wp(WorkingPrecision::digits() + 10);
    r = sqrt(t * (z + 1)) - acos(1 / z);
  }
  return at_working_precision(r);
}

BigReal phi_prime(const BigReal& z) {
  if (z < BigReal(1)) throw DomainError("phi_prime needs z >= 1");
  return sqrt((z - 1) * (z + 1)) / z;
}

LeadingRoot solve_leading_root(const BigReal& R) {
  if (R.sign() <= 0) throw DomainError("solve_leading needs R > 0, got " + R.to_string(20));
  const int digits = WorkingPrecision::digits();
  LeadingRoot out;
  {
    WorkingPrecision wp(digits + 10);
    const BigReal tol = epsilon_digits(digits + 3);
    if (R < BigReal(kSmallR)) {
      // Newton in t = z - 1 on the series; phi ~ (2 sqrt 2 / 3) t^{3/2}.
      BigReal t = pow(3 * R / (2 * sqrt(BigReal(2))), BigReal(2) / 3);
      bool done = false;
      for (int it = 0; it < 200 && !done; ++it) {
        SeriesValue v = phi_series(t);
        const BigReal step = (v.phi - R) / v.dphi;
        t -= step;
        done = abs(step) <= tol * t;
      }
      if (!done) throw NumericFailure("solve_leading: series Newton did not converge");
      out.t = t;
      out.z0 = 1 + t;
    } else {
      BigReal lo = max(R, BigReal(1));
      BigReal hi = R + 1 + pi() / 2;
      if (phi_eval(lo) > R || phi_eval(hi) < R) {
        throw NumericFailure("solve_leading: root not bracketed for R = " + R.to_string(20));
      }
      BigReal z = (lo + hi) / 2;
      bool done = false;
      for (int it = 0; it < 2000 && !done; ++it) {
        const BigReal f = phi_eval(z) - R;
        if (f.is_zero()) {
          done = true;
          break;
        }
        if (f.sign() < 0) {
          lo = z;
        } else {
          hi = z;
        }
        BigReal next = z - f / phi_prime(z);
        if (!(next >= lo && next <= hi)) next = (lo + hi) / 2;
        const BigReal step = abs(next - z);
        z = next;
        done = step <= tol * z;
      }
      if (!done) throw NumericFailure("solve_leading: iteration limit");
      out.z0 = z;
      out.t = z - 1;
    }
  }
  out.z0 = at_working_precision(out.z0);
  out.t = at_working_precision(out.t);
  return out;
}

BigReal solve_leading(const BigReal& R) { return solve_leading_root(R).z0; }

LeadingTriple triple_from_zeta(const BigReal& zeta0) {
  if (zeta0.sign() >= 0) throw DomainError("zeta0 must be negative");
  const BigReal mag = -zeta0;
  const BigReal R = BigReal(2) / 3 * mag * sqrt(mag);
  LeadingRoot root = solve_leading_root(R);
  LeadingTriple tr;
  tr.z0 = root.z0;
  tr.z0_minus_1 = root.t;
  tr.zeta0 = zeta0;
  tr.sigma0 = sqrt(mag / (root.t * (root.t + 2)));
  return tr;
}

LeadingTriple triple_from_z0(const BigReal& z0) {
  if (!(z0 > BigReal(1))) throw DomainError("triple_from_z0 needs z0 > 1");
  LeadingTriple tr;
  tr.z0 = z0;
  tr.z0_minus_1 = z0 - 1;
  const BigReal mag = pow(BigReal(3) / 2 * phi_eval(z0), BigReal(2) / 3);
  tr.zeta0 = -mag;
  tr.sigma0 = sqrt(mag / (tr.z0_minus_1 * (z0 + 1)));
  return tr;
}

LeadingTriple leading_triple(ZeroFamily family, const BigReal& nu, int m, AiryZeroCache* cache) {
  if (nu.sign() <= 0) throw DomainError("nu must be positive");
  if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
  const AiryZeroKind kind = airy_kind(family);
  const BigReal zero = cache ? cache->get(kind, m) : airy_zero(kind, m);
  LeadingTriple tr = triple_from_zeta(pow(nu, BigReal(-2) / 3) * zero);
  tr.family = family;
  tr.nu = nu;
  tr.m = m;
  return tr;
}

}  // namespace besselzeros
