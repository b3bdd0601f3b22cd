#include "besselzeros/bessel_series.hpp"

#include <cmath>

#include "besselzeros/errors.hpp"

namespace besselzeros {

BesselPair bessel_j_series(const BigReal& nu, const BigReal& x) {
  if (nu.sign() < 0) throw DomainError("bessel_j_series needs nu >= 0");
  if (x.sign() <= 0) throw DomainError("bessel_j_series needs x > 0");
  const double xd = x.to_double();
  if (xd > kXBessel) throw DomainError("bessel_j_series argument beyond series range");

  const int target = WorkingPrecision::digits();
  BesselPair out;
  {
    WorkingPrecision wp(target + static_cast<int>(std::ceil(0.9 * xd * 0.4342944819)) + 15);
    const BigReal eps = epsilon_digits(WorkingPrecision::digits());
    const BigReal half_x = x / 2;
    const BigReal q = half_x * half_x;
    // Gamma(nu+k+1) enters through the recurrence T_k = -T_{k-1} q / (k (nu+k)).
    BigReal term = pow(half_x, nu) / gamma(nu + 1);
    BigReal j = 0, j1 = 0, peak = abs(term);
    for (long k = 0;; ++k) {
      if (k > 0) term = -term * q / (BigReal(k) * (nu + k));
      j += term;
      j1 += term * half_x / (nu + k + 1);
      const BigReal mag = abs(term);
      if (mag > peak) peak = mag;
      if (BigReal(k) > half_x && mag < eps * peak) break;
      if (k > 1000000) throw NumericFailure("Bessel series did not converge");
    }
    out.J = j;
    out.Jprime = nu / x * j - j1;
  }
  out.J = at_working_precision(out.J);
  out.Jprime = at_working_precision(out.Jprime);
  return out;
}

}  // namespace besselzeros
