#pragma once

#include "besselzeros/airy.hpp"
#include "besselzeros/big_real.hpp"
#include "besselzeros/lg_coefficients.hpp"
#include "besselzeros/ring.hpp"

namespace besselzeros {

enum class ZeroFamily { J, Y, JPrime };

const char* family_name(ZeroFamily f);
AiryZeroKind airy_kind(ZeroFamily f);
Family coefficient_family(ZeroFamily f);

// phi(z) = sqrt(z^2 - 1) - arcsec(z), z >= 1.
BigReal phi_eval(const BigReal& z);
// phi'(z) = sqrt(z^2 - 1) / z.
BigReal phi_prime(const BigReal& z);

struct LeadingRoot {
  BigReal z0;
  BigReal t;  // z0 - 1, kept separately so sigma has no cancellation near z0 = 1
};

// Unique root of phi(z) = R in (max(R,1), R + 1 + pi/2).
LeadingRoot solve_leading_root(const BigReal& R);
BigReal solve_leading(const BigReal& R);

// Below this R the root is found from the series of phi about z = 1.
inline constexpr double kSmallR = 1e-3;

struct LeadingTriple {
  BigReal z0;
  BigReal zeta0;
  BigReal sigma0;
  BigReal z0_minus_1;
  ZeroFamily family = ZeroFamily::J;
  BigReal nu;
  int m = 0;

  Triple<BigReal> point() const { return {sigma0, zeta0, z0}; }
};

// Triple on the curve zeta(z), sigma(z) through a given zeta0 < 0.
LeadingTriple triple_from_zeta(const BigReal& zeta0);
// Triple at a given z0 > 1: zeta0 = -((3/2) phi(z0))^{2/3}.
LeadingTriple triple_from_z0(const BigReal& z0);

LeadingTriple leading_triple(ZeroFamily family, const BigReal& nu, int m, AiryZeroCache* cache = nullptr);

}  // namespace besselzeros
