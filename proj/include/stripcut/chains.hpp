#pragma once

#include <vector>

#include "stripcut/diskcurve.hpp"

namespace stripcut {

// Greedy partition of a sequence of distinct essential curves into families
// A_1..A_t of pairwise disjoint curves, with a witness chain of length t
// recovered through back-pointers.  Certifies r <= (n-2) * t.
struct ChainPartition {
  std::vector<std::vector<int>> parts;  // indices into the input sequence
  std::vector<int> chain;               // increasing indices, consecutive curves intersect
  int xi = 0;                           // complexity n - 2
};

ChainPartition chain_partition(const std::vector<Diagram>& curves);

// Test oracle: longest chain by exhaustive search (use only on short inputs).
int longest_chain_bruteforce(const std::vector<Diagram>& curves);

}  // namespace stripcut
