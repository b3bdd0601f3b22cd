#pragma once

#include <vector>

#include "besselzeros/rational.hpp"
#include "besselzeros/ring.hpp"

namespace besselzeros {

// Standard: coefficients for J and Y zeros. Derivative: zeros of J'.
enum class Family { Standard, Derivative };

const char* family_name(Family f);

// Dense univariate polynomial in beta; coeffs[i] multiplies beta^i.
class BetaPoly {
 public:
  BetaPoly() = default;
  explicit BetaPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }

  BetaPoly derivative() const;
  // Antiderivative vanishing at beta = 0.
  BetaPoly integral() const;
  Rational eval(const Rational& beta) const;

  friend BetaPoly operator+(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator*(const Rational& c, const BetaPoly& a);
  friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Liouville-Green coefficients E_s(beta) of Bessel's equation, generated
// bottom-up and memoized:
//   E_{s+1} = 1/2 beta^2 (beta^2-1) E_s' + 1/2 int_0^beta p^2 (p^2-1) sum_{j=1}^{s-1} E_j' E_{s-j}' dp.
class LgTable {
 public:
  static constexpr int kDefaultMaxOrder = 9;

  explicit LgTable(Family family, int max_order = kDefaultMaxOrder);

  Family family() const { return family_; }
  int max_order() const { return max_order_; }
  // Number of coefficients generated so far.
  int generated() const { return static_cast<int>(memo_.size()); }
  const BetaPoly& E(int s);

  // xi * E_{2s+1}, lifted into the ring via beta^{2j+1} -> (2/3) sigma^{2j+1} zeta^{1-j}.
  RingElem xiE_odd(int s);

 private:
  Family family_;
  int max_order_;
  std::vector<BetaPoly> memo_;  // memo_[s-1] = E_s
};

// Convenience wrappers over a fresh table.
BetaPoly lg_E(int s, Family family);
RingElem xiE_odd(int s, Family family);

}  // namespace besselzeros
