#pragma once

#include "besselzeros/big_real.hpp"

namespace besselzeros {

// Largest argument handled by the ascending series.
inline constexpr double kXBessel = 200.0;

struct BesselPair {
  BigReal J;       // J_nu(x)
  BigReal Jprime;  // J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x)
};

// Ascending series sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)), summed with
// ceil(0.9 x log10 e) + 15 extra digits to absorb cancellation. Accurate in
// absolute terms to the working precision. Requires nu >= 0, 0 < x <= kXBessel.
BesselPair bessel_j_series(const BigReal& nu, const BigReal& x);

}  // namespace besselzeros
