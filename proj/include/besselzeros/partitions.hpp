#pragma once

#include <vector>

namespace besselzeros {

// One solution of q_1 + 2 q_2 + ... + p q_p = s, with k = q_1 + ... + q_p.
struct MultiIndex {
  std::vector<int> q;  // q[l-1] = q_l
  int k = 0;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// All multi-indices with parts up to max_part summing (weighted) to s. Highest
// part varies slowest, each ascending; q_1 takes the remainder.
std::vector<MultiIndex> partition_multi_indices(int s, int max_part);

}  // namespace besselzeros
