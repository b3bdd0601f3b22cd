#include "besselzeros/lg_coefficients.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "besselzeros/errors.hpp"

namespace besselzeros {

const char* family_name(Family f) { return f == Family::Standard ? "standard" : "derivative"; }

BetaPoly::BetaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational BetaPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

BetaPoly BetaPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return BetaPoly(std::move(out));
}

BetaPoly BetaPoly::integral() const {
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return BetaPoly(std::move(out));
}

Rational BetaPoly::eval(const Rational& beta) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * beta + *it;
  return acc;
}

BetaPoly operator+(const BetaPoly& a, const BetaPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
  return BetaPoly(std::move(out));
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BetaPoly(std::move(out));
}

BetaPoly operator*(const Rational& c, const BetaPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return BetaPoly(std::move(out));
}

namespace {

BetaPoly seed(Family family, int s) {
  auto q = [](long n, long d) { return make_rational(n, d); };
  // beta^2 (beta^2 - 1) (k beta^2 - l) / 16 with (k,l) = (5,1) or -(7,3).
  if (family == Family::Standard) {
    if (s == 1) return BetaPoly({0, q(-3, 24), 0, q(5, 24)});
    return BetaPoly({0, 0, q(1, 16), 0, q(-6, 16), 0, q(5, 16)});
  }
  if (s == 1) return BetaPoly({0, q(9, 24), 0, q(-7, 24)});
  return BetaPoly({0, 0, q(-3, 16), 0, q(10, 16), 0, q(-7, 16)});
}

// beta^2 (beta^2 - 1)
const BetaPoly& weight() {
  static const BetaPoly w({0, 0, -1, 0, 1});
  return w;
}

}  // namespace

LgTable::LgTable(Family family, int max_order) : family_(family), max_order_(max_order) {
  if (max_order < 2) throw DomainError("LG table order must be at least 2");
}

const BetaPoly& LgTable::E(int s) {
  if (s < 1) throw DomainError("LG coefficient index must be >= 1, got " + std::to_string(s));
  if (s > max_order_) {
    throw DomainError("LG coefficient E_" + std::to_string(s) + " beyond configured order " +
                      std::to_string(max_order_));
  }
  const Rational half(1, 2);
  while (generated() < s) {
    const int next = generated() + 1;
    BetaPoly e;
    if (next <= 2) {
      e = seed(family_, next);
    } else {
      const int prev = next - 1;
      BetaPoly conv;
      for (int j = 1; j <= prev - 1; ++j) {
        conv = conv + memo_[j - 1].derivative() * memo_[prev - j - 1].derivative();
      }
      e = half * (weight() * memo_[prev - 1].derivative()) + half * (weight() * conv).integral();
    }
    if (e.coeff(0) != 0) throw std::logic_error("LG coefficient with nonzero constant term");
    for (int i = 0; i <= e.degree(); ++i) {
      if (e.coeff(i) != 0 && (i - next) % 2 != 0) {
        throw std::logic_error("LG coefficient E_" + std::to_string(next) + " breaks parity");
      }
    }
    if (e.degree() > 3 * next) throw std::logic_error("LG coefficient degree exceeds 3s");
    memo_.push_back(std::move(e));
  }
  return memo_[s - 1];
}

RingElem LgTable::xiE_odd(int s) {
  if (s < 0) throw DomainError("xiE_odd index must be >= 0");
  const BetaPoly& e = E(2 * s + 1);
  const Rational two_thirds(2, 3);
  RingElem r;
  for (int i = 0; i <= e.degree(); ++i) {
    if (e.coeff(i) == 0) continue;
    if (i % 2 == 0) throw std::logic_error("odd LG coefficient has an even power of beta");
    const int j = (i - 1) / 2;
    r += RingElem::monomial(two_thirds * e.coeff(i), {i, 1 - j, 0});
  }
  return r;
}

BetaPoly lg_E(int s, Family family) {
  LgTable t(family, std::max(s, LgTable::kDefaultMaxOrder));
  return t.E(s);
}

RingElem xiE_odd(int s, Family family) {
  LgTable t(family, std::max(2 * s + 1, LgTable::kDefaultMaxOrder));
  return t.xiE_odd(s);
}

}  // namespace besselzeros
