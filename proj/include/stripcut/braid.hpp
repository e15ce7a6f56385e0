#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stripcut/diskcurve.hpp"

namespace stripcut {

// A letter is a half-twist of the puncture block [i, j] (1-based, i < j)
// raised to a nonzero integer power.  The Artin generator s_i is the block
// [i, i+1]; band generators allow any block.
struct BraidLetter {
  int i = 0;
  int j = 0;
  long long exp = 0;
};

struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  BraidWord inverse() const;
  BraidWord concat(const BraidWord& w) const;  // this then w? no: (*this) * w, applied right-to-left like maps
  bool operator==(const BraidWord&) const = default;
};

// Text grammar: whitespace-separated tokens.  "s3" = sigma_3, "S3" its
// inverse, "d1.4" = half-twist of block [1,4], "D1.4" its inverse; an
// optional "^k" suffix raises the token to the k-th power.
// Throws std::invalid_argument citing the offending token position.
BraidWord parse_braid(const std::string& text, int n);
std::string braid_to_string(const BraidWord& w);

// One half-twist of the block [i, j] with sign +1 (counterclockwise) or -1,
// applied to a diagram; the result is reduced.
Diagram band_twist(const Diagram& d, int i, int j, int sign);

// Group action on diagrams: letters act right-to-left, so
// act(u.concat(v), m) == act(u, act(v, m)).
Diagram act(const BraidWord& w, const Diagram& m);

}  // namespace stripcut
