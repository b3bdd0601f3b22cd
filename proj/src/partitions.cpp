#include "besselzeros/partitions.hpp"

#include <string>

#include "besselzeros/errors.hpp"

namespace besselzeros {

namespace {

void enumerate(int part, int remaining, std::vector<int>& q, std::vector<MultiIndex>& out) {
  if (part == 1) {
    q[0] = remaining;
    int k = 0;
    for (int v : q) k += v;
    out.push_back({q, k});
    return;
  }
  for (int n = 0; n * part <= remaining; ++n) {
    q[part - 1] = n;
    enumerate(part - 1, remaining - n * part, q, out);
  }
  q[part - 1] = 0;
}

}  // namespace

std::vector<MultiIndex> partition_multi_indices(int s, int max_part) {
  if (s < 1 || max_part < 1 || max_part > s) {
    throw DomainError("partition_multi_indices needs 1 <= max_part <= s, got s=" +
                      std::to_string(s) + " max_part=" + std::to_string(max_part));
  }
  std::vector<MultiIndex> out;
  std::vector<int> q(max_part, 0);
  enumerate(max_part, s, q, out);
  return out;
}

}  // namespace besselzeros
