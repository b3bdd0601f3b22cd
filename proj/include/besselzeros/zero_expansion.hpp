#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "besselzeros/airy.hpp"
#include "besselzeros/big_real.hpp"
#include "besselzeros/leading.hpp"
#include "besselzeros/partitions.hpp"
#include "besselzeros/ring.hpp"
#include "besselzeros/upsilon.hpp"

namespace besselzeros {

// Symbolic derivatives needed by the inversion up to order S:
// zeta^(k) for k = 0..S and Upsilon_j^(k) for j + k <= S.
struct DerivTable {
  Family family = Family::Standard;
  int order = 0;
  std::vector<RingElem> zeta_derivs;                 // [k] = zeta^(k), [0] = zeta
  std::map<std::pair<int, int>, RingElem> ups_derivs;  // (j, k) -> Upsilon_j^(k)

  friend bool operator==(const DerivTable&, const DerivTable&) = default;
};

DerivTable build_deriv_table(UpsilonEngine& engine, int order);

// Values of the table entries at one point, in any scalar type that supports
// ring arithmetic (BigReal numerically, RingElem symbolically).
template <class Scalar>
struct PointData {
  std::vector<Scalar> zeta;                      // [k] = zeta^(k)
  std::map<std::pair<int, int>, Scalar> ups;     // (j, k) -> Upsilon_j^(k)
  Scalar neg_inv_zeta_prime;                     // -1/zeta' = z sigma
};

namespace detail {

inline BigReal scale(const BigReal& x, const Rational& c) { return x * BigReal(c); }
inline RingElem scale(const RingElem& x, const Rational& c) { return x * c; }

inline Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// prod_l prior_l^{q_l} / q_l!
template <class Scalar>
Scalar weight(const MultiIndex& mi, const std::vector<Scalar>& prior) {
  Scalar w(1L);
  Rational denom = 1;
  for (std::size_t l = 0; l < mi.q.size(); ++l) {
    for (int i = 0; i < mi.q[l]; ++i) w = w * prior[l];
    denom *= factorial(mi.q[l]);
  }
  return scale(w, 1 / denom);
}

}  // namespace detail

// z_{m,s} from z_{m,1}..z_{m,s-1} (prior[l-1] = z_{m,l}):
//   z_{m,s} = -(1/zeta') { sum_{q : max part s-1} zeta^(k) prod z_l^{q_l}/q_l!
//             + sum_{j=1}^{s-1} sum_{q of j} Upsilon_{s-j}^(k) prod z_l^{q_l}/q_l! + Upsilon_s }.
template <class Scalar>
Scalar zm_coefficient(int s, const PointData<Scalar>& at, const std::vector<Scalar>& prior) {
  Scalar total = at.ups.at({s, 0});
  if (s >= 2) {
    for (const MultiIndex& mi : partition_multi_indices(s, s - 1)) {
      total = total + at.zeta.at(mi.k) * detail::weight(mi, prior);
    }
    for (int j = 1; j <= s - 1; ++j) {
      for (const MultiIndex& mi : partition_multi_indices(j, j)) {
        total = total + at.ups.at({s - j, mi.k}) * detail::weight(mi, prior);
      }
    }
  }
  return at.neg_inv_zeta_prime * total;
}

// z_{m,1}..z_{m,S} as ring elements in (sigma, zeta, z).
std::vector<RingElem> symbolic_zero_coefficients(const DerivTable& table, int terms);

PointData<BigReal> evaluate_table(const DerivTable& table, const Triple<BigReal>& at);

// z_{m,0}..z_{m,S} at a triple, at the current working precision.
std::vector<BigReal> zero_coefficients(const DerivTable& table, const LeadingTriple& triple, int terms);

struct ZeroResult {
  ZeroFamily family = ZeroFamily::J;
  BigReal nu;
  int m = 0;
  int terms = 0;
  int digits = 0;
  LeadingTriple triple;
  std::vector<BigReal> coefficients;  // [s] = z_{m,s}, s = 0..terms
  std::vector<BigReal> partial_sums;  // [S] = z_S(nu, m)
  std::vector<BigReal> x_values;      // nu * partial_sums
  BigReal proximity;                  // z0 - 1

  const BigReal& z() const { return partial_sums.back(); }
  const BigReal& x() const { return x_values.back(); }
};

// Owns the symbolic machinery so repeated queries reuse generated tables and
// Airy zeros.
class ZeroSolver {
 public:
  static constexpr int kGuardDigits = 20;
  // Requests needing more working digits than this fail with NumericFailure.
  static constexpr int kMaxWorkingDigits = 20000;

  explicit ZeroSolver(int max_terms = UpsilonEngine::kDefaultMaxOrder);

  int max_terms() const { return max_terms_; }
  const DerivTable& table(Family family, int terms);
  AiryZeroCache& zeros() { return zeros_; }

  // Evaluated at digits + kGuardDigits plus extra digits that offset the
  // cancellation of the removable singularity when zeta0 is small.
  ZeroResult solve(ZeroFamily family, const BigReal& nu, int m, int terms = 4,
                   int digits = WorkingPrecision::kDefaultDigits);

 private:
  int max_terms_;
  std::map<Family, std::unique_ptr<UpsilonEngine>> engines_;
  std::map<Family, DerivTable> tables_;
  AiryZeroCache zeros_;
};

ZeroResult zero_expansion(ZeroFamily family, const BigReal& nu, int m, int terms = 4,
                          int digits = WorkingPrecision::kDefaultDigits);

}  // namespace besselzeros
