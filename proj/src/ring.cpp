#include "besselzeros/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "besselzeros/errors.hpp"

namespace besselzeros {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

RingElem::RingElem(const Rational& c) { accumulate({}, c); }

RingElem::RingElem(long c) { accumulate({}, Rational(c)); }

RingElem RingElem::monomial(const Rational& c, Monomial m) {
  RingElem r;
  r.accumulate(m, c);
  return r;
}

RingElem RingElem::from_terms(const std::vector<std::pair<Monomial, Rational>>& terms) {
  RingElem r;
  for (const auto& [m, c] : terms) r.accumulate(m, c);
  return r;
}

void RingElem::accumulate(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElem::has_z() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.e_z != 0; });
}

int RingElem::min_zeta_exponent() const {
  int lo = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.e_zeta < lo) lo = m.e_zeta;
    first = false;
  }
  return lo;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem& RingElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

RingElem operator-(const RingElem& a) { return a * Rational(-1); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  RingElem r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
  }
  return r;
}

RingElem operator*(const RingElem& a, const Monomial& m) {
  RingElem r;
  for (const auto& [ma, ca] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), ma * m, ca);
  return r;
}

RingElem pow(const RingElem& x, int n) {
  if (n < 0) throw DomainError("negative power of a ring element");
  RingElem r(1L);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

RingElem partial_sigma(const RingElem& f) {
  RingElem r;
  for (const auto& [m, c] : f.terms()) {
    if (m.e_sigma != 0) r += RingElem::monomial(c * m.e_sigma, {m.e_sigma - 1, m.e_zeta, m.e_z});
  }
  return r;
}

RingElem partial_zeta(const RingElem& f) {
  RingElem r;
  for (const auto& [m, c] : f.terms()) {
    if (m.e_zeta != 0) r += RingElem::monomial(c * m.e_zeta, {m.e_sigma, m.e_zeta - 1, m.e_z});
  }
  return r;
}

RingElem partial_z(const RingElem& f) {
  RingElem r;
  for (const auto& [m, c] : f.terms()) {
    if (m.e_z != 0) r += RingElem::monomial(c * m.e_z, {m.e_sigma, m.e_zeta, m.e_z - 1});
  }
  return r;
}

RingElem ring_diff(const RingElem& f) {
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(4 * f.size());
  const Rational half(1, 2);
  for (const auto& [m, c] : f.terms()) {
    const int a = m.e_sigma, b = m.e_zeta, e = m.e_z;
    if (e != 0) out.push_back({{a, b, e - 1}, c * e});
    if (b != 0) out.push_back({{a - 1, b - 1, e - 1}, -c * b});
    if (a != 0) {
      out.push_back({{a + 2, b - 1, e + 1}, c * a});
      out.push_back({{a - 1, b - 1, e - 1}, -c * a * half});
    }
  }
  return RingElem::from_terms(out);
}

namespace {

template <class T>
class PowerCache {
 public:
  PowerCache(const T& base, const char* name) : base_(base), name_(name) {}

  const T& get(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(e, compute(e)).first->second;
  }

 private:
  T compute(int e) const;

  T base_;
  const char* name_;
  std::map<int, T> cache_;
};

template <>
BigReal PowerCache<BigReal>::compute(int e) const {
  if (e < 0 && base_.is_zero()) {
    throw NumericFailure(std::string("ring_eval: ") + name_ + " = 0 with negative exponent");
  }
  return pow(base_, static_cast<long>(e));
}

template <>
Rational PowerCache<Rational>::compute(int e) const {
  if (e < 0 && base_ == 0) {
    throw NumericFailure(std::string("ring_eval: ") + name_ + " = 0 with negative exponent");
  }
  const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base_.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base_.get_den_mpz_t(), n);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

template <class T>
T evaluate(const RingElem& f, const Triple<T>& at) {
  PowerCache<T> ps(at.sigma, "sigma"), pz(at.zeta, "zeta"), px(at.z, "z");
  T sum(0L);
  for (const auto& [m, c] : f.terms()) {
    sum += T(c) * ps.get(m.e_sigma) * pz.get(m.e_zeta) * px.get(m.e_z);
  }
  return sum;
}

}  // namespace

BigReal ring_eval(const RingElem& f, const Triple<BigReal>& at) { return evaluate(f, at); }

Rational ring_eval(const RingElem& f, const Triple<Rational>& at) { return evaluate(f, at); }

std::vector<TermRecord> to_records(const RingElem& f) {
  std::vector<TermRecord> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    out.push_back({m.e_sigma, m.e_zeta, m.e_z, c.get_num().get_str(), c.get_den().get_str()});
  }
  return out;
}

RingElem from_records(const std::vector<TermRecord>& records) {
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(records.size());
  for (const auto& r : records) {
    mpz_class num, den;
    if (num.set_str(r.num, 10) != 0 || den.set_str(r.den, 10) != 0 || den <= 0) {
      throw FormatError("bad term coefficient " + r.num + "/" + r.den);
    }
    Rational q(num, den);
    q.canonicalize();
    terms.push_back({{r.e_sigma, r.e_zeta, r.e_z}, q});
  }
  return RingElem::from_terms(terms);
}

std::string to_string(const RingElem& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || (m.e_sigma == 0 && m.e_zeta == 0 && m.e_z == 0)) {
      os << mag.get_str();
      wrote = true;
    }
    auto factor = [&](const char* name, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      wrote = true;
    };
    factor("sigma", m.e_sigma);
    factor("zeta", m.e_zeta);
    factor("z", m.e_z);
  }
  return os.str();
}

}  // namespace besselzeros
