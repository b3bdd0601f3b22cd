#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "besselzeros/big_real.hpp"
#include "besselzeros/lg_coefficients.hpp"
#include "besselzeros/rational.hpp"

namespace besselzeros {

// a_1 = a_2 = 5/72 (Standard) or -7/72 (Derivative),
// a_{s+1} = (s+1)/2 a_s + 1/2 sum_{j=1}^{s-1} a_j a_{s-j}.
class AirySequence {
 public:
  explicit AirySequence(Family family);
  Family family() const { return family_; }
  Rational operator()(int n);
  const std::vector<Rational>& values() const { return values_; }  // values()[n-1] = a_n

 private:
  Family family_;
  std::vector<Rational> values_;
};

Rational a_seq(int n, Family family);

enum class AiryFunction { Ai, Bi };
enum class AiryZeroKind { A, B, APrime };

const char* kind_name(AiryZeroKind k);

// Ai, Bi (order 0) or their first derivative (order 1) at x, accurate to the
// working precision in absolute terms.
BigReal airy_eval(const BigReal& x, AiryFunction which, int order);

struct Bracket {
  BigReal lo;
  BigReal hi;
};

// Starting interval containing the m-th zero.
Bracket airy_zero_bracket(AiryZeroKind kind, int m);

// The m-th negative zero (m >= 1), ordered by increasing absolute value.
BigReal airy_zero(AiryZeroKind kind, int m);

// Zeros keyed by (kind, m, digits). Rows on disk: "<kind> <m> <digits> <value>".
class AiryZeroCache {
 public:
  BigReal get(AiryZeroKind kind, int m);  // at the current working precision
  std::optional<BigReal> find(AiryZeroKind kind, int m, int digits) const;
  void store(AiryZeroKind kind, int m, int digits, const BigReal& value);
  std::size_t size() const { return entries_.size(); }

  void load(std::istream& in);
  void save(std::ostream& out) const;

 private:
  std::map<std::tuple<int, int, int>, BigReal> entries_;
};

}  // namespace besselzeros
