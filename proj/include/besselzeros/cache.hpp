#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "besselzeros/lg_coefficients.hpp"
#include "besselzeros/upsilon.hpp"
#include "besselzeros/zero_expansion.hpp"

namespace besselzeros {

// Everything the symbolic stage produces for one family up to order S,
// persisted as versioned JSON. Rationals are stored as decimal strings.
struct CoefficientCache {
  static constexpr int kFormatVersion = 1;

  int format_version = kFormatVersion;
  Family family = Family::Standard;
  int max_order = 0;
  std::vector<Rational> a_seq;  // a_1, a_2, ...
  std::vector<BetaPoly> lg;     // E_1, E_2, ...
  UpsilonSet upsilon;
  DerivTable deriv_table;

  friend bool operator==(const CoefficientCache&, const CoefficientCache&) = default;
};

CoefficientCache generate_cache(Family family, int max_order,
                                std::size_t term_limit = UpsilonEngine::kDefaultTermLimit);

// Byte-identical output for equal caches.
std::string serialize_cache(const CoefficientCache& cache);
// FormatError on malformed input or an unknown format_version.
CoefficientCache parse_cache(const std::string& text);

}  // namespace besselzeros
