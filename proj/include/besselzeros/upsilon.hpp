#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "besselzeros/airy.hpp"
#include "besselzeros/lg_coefficients.hpp"
#include "besselzeros/ring.hpp"

namespace besselzeros {

// Generated coefficient functions Upsilon_1..Upsilon_S of one family.
struct UpsilonSet {
  Family family = Family::Standard;
  std::vector<RingElem> elems;  // elems[s-1] = Upsilon_s

  int max_order() const { return static_cast<int>(elems.size()); }
  const RingElem& operator[](int s) const { return elems.at(s - 1); }

  friend bool operator==(const UpsilonSet&, const UpsilonSet&) = default;
};

// d_{s,0} = 1,  d_{s,l} = -1/(2 l zeta) sum_{k=1}^{l} ((6s+1)k + 2l) Upsilon_k d_{s,l-k}.
// Entries are memoized; ups must hold Upsilon_1..Upsilon_l.
class DTable {
 public:
  const RingElem& get(int s, int l, std::span<const RingElem> ups);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<int, int>, RingElem> entries_;
};

RingElem d_coeff(int s, int l, const UpsilonSet& ups);

// (3 xi / (2 zeta^2)) g_s
//   = sum_{k=0}^{s} (3/2) (9/4)^k a_{2k+1} d_{k,s-k} / ((2k+1) zeta^{3k+2}).
RingElem g_ring(int s, const UpsilonSet& ups);

// Memoized generator of Upsilon_s for one family.
class UpsilonEngine {
 public:
  static constexpr int kDefaultMaxOrder = 6;
  static constexpr std::size_t kDefaultTermLimit = 1000000;

  explicit UpsilonEngine(Family family, int max_order = kDefaultMaxOrder,
                         std::size_t term_limit = kDefaultTermLimit);

  Family family() const { return family_; }
  int max_order() const { return max_order_; }

  const RingElem& upsilon(int s);
  UpsilonSet set(int s);
  RingElem g_ring(int s);  // needs Upsilon_1..Upsilon_s
  const RingElem& d_coeff(int s, int l);

  LgTable& lg() { return lg_; }
  AirySequence& a() { return a_; }

  // Orders whose minimal zeta exponent is below -(3s-1); reported, not fatal.
  const std::vector<std::string>& flags() const { return flags_; }

 private:
  RingElem g_internal(int s);
  void check_size(const RingElem& r, const std::string& what) const;

  Family family_;
  int max_order_;
  std::size_t term_limit_;
  LgTable lg_;
  AirySequence a_;
  DTable d_;
  std::vector<RingElem> ups_;
  std::vector<std::string> flags_;
};

RingElem upsilon(int s, Family family);

}  // namespace besselzeros
