#include "besselzeros/upsilon.hpp"

#include <algorithm>
#include <stdexcept>

#include "besselzeros/errors.hpp"

namespace besselzeros {

const RingElem& DTable::get(int s, int l, std::span<const RingElem> ups) {
  if (l < 0) throw DomainError("d_coeff needs l >= 0");
  auto key = std::pair{s, l};
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  if (l == 0) return entries_.emplace(key, RingElem(1L)).first->second;
  if (static_cast<int>(ups.size()) < l) {
    throw std::logic_error("d_coeff(" + std::to_string(s) + "," + std::to_string(l) +
                           ") needs Upsilon_" + std::to_string(l));
  }
  RingElem sum;
  for (int k = 1; k <= l; ++k) {
    const RingElem& prev = get(s, l - k, ups);
    sum += Rational((6L * s + 1) * k + 2L * l) * (ups[k - 1] * prev);
  }
  // -1/(2 l zeta)
  RingElem r = sum * Monomial{0, -1, 0} * make_rational(-1, 2L * l);
  return entries_.emplace(key, std::move(r)).first->second;
}

RingElem d_coeff(int s, int l, const UpsilonSet& ups) {
  DTable t;
  return t.get(s, l, ups.elems);
}

namespace {

RingElem g_fold(int s, std::span<const RingElem> ups, DTable& d, AirySequence& a) {
  RingElem r;
  Rational nine_fourths_k = 1;
  for (int k = 0; k <= s; ++k) {
    const Rational c = Rational(3, 2) * nine_fourths_k * a(2 * k + 1) / Rational(2 * k + 1);
    r += d.get(k, s - k, ups) * Monomial{0, -(3 * k + 2), 0} * c;
    nine_fourths_k *= Rational(9, 4);
  }
  return r;
}

}  // namespace

RingElem g_ring(int s, const UpsilonSet& ups) {
  if (s < 0) throw DomainError("g_ring needs s >= 0");
  DTable d;
  AirySequence a(ups.family);
  return g_fold(s, ups.elems, d, a);
}

UpsilonEngine::UpsilonEngine(Family family, int max_order, std::size_t term_limit)
    : family_(family),
      max_order_(max_order),
      term_limit_(term_limit),
      lg_(family, std::max(LgTable::kDefaultMaxOrder, 2 * max_order - 1)),
      a_(family) {
  if (max_order < 1) throw DomainError("Upsilon order must be >= 1");
}

void UpsilonEngine::check_size(const RingElem& r, const std::string& what) const {
  if (r.size() > term_limit_) {
    throw SizeLimitExceeded(what + " has " + std::to_string(r.size()) + " terms, limit " +
                            std::to_string(term_limit_));
  }
}

RingElem UpsilonEngine::g_internal(int s) { return g_fold(s, ups_, d_, a_); }

RingElem UpsilonEngine::g_ring(int s) {
  if (s < 0) throw DomainError("g_ring needs s >= 0");
  if (s > 0) upsilon(s);
  return g_internal(s);
}

const RingElem& UpsilonEngine::d_coeff(int s, int l) {
  if (l > 0) upsilon(l);
  return d_.get(s, l, ups_);
}

const RingElem& UpsilonEngine::upsilon(int s) {
  if (s < 1) throw DomainError("Upsilon index must be >= 1, got " + std::to_string(s));
  if (s > max_order_) {
    throw DomainError("Upsilon_" + std::to_string(s) + " beyond configured order " +
                      std::to_string(max_order_));
  }
  const Monomial inv_zeta2{0, -2, 0};
  while (static_cast<int>(ups_.size()) < s) {
    const int n = static_cast<int>(ups_.size());  // generating Upsilon_{n+1}
    RingElem next = lg_.xiE_odd(n) * inv_zeta2 * Rational(3, 2) - g_internal(n);
    if (n >= 1) {
      RingElem sum;
      for (int k = 1; k <= n; ++k) {
        sum += Rational(2L * n + 2 - 5L * k) * (ups_[k - 1] * d_.get(-1, n - k + 1, ups_));
      }
      next += sum * make_rational(1, 3L * (n + 1));
    }
    const std::string name = "Upsilon_" + std::to_string(n + 1);
    check_size(next, name);
    if (next.has_z()) throw std::logic_error(name + " contains powers of z");
    if (next.min_zeta_exponent() < -(3 * (n + 1) - 1)) {
      flags_.push_back(name + " has zeta exponent " + std::to_string(next.min_zeta_exponent()));
    }
    ups_.push_back(std::move(next));
  }
  return ups_[s - 1];
}

UpsilonSet UpsilonEngine::set(int s) {
  upsilon(s);
  return {family_, std::vector<RingElem>(ups_.begin(), ups_.begin() + s)};
}

RingElem upsilon(int s, Family family) {
  UpsilonEngine e(family, std::max(s, UpsilonEngine::kDefaultMaxOrder));
  return e.upsilon(s);
}

}  // namespace besselzeros
