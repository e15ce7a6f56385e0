#pragma once

#include <compare>
#include <string>
#include <vector>

namespace stripcut {

// Multicurves on the disk with n punctures along the horizontal axis.
//
// A diagram records the combinatorics of a curve system that meets the axis
// transversely: cross points are numbered 0..m-1 in axis order, punc[j] is
// the number of cross points strictly left of puncture j (0-based, so the
// punctures sit at "positions" punc[0] <= ... <= punc[n-1] among the cross
// points), and up/lo are the chord matchings in the upper and lower
// half-plane.  Because neither half-plane contains a puncture, the isotopy
// class of the system is exactly this data, and the reduced (bigon-free)
// diagram is a canonical form.

struct Diagram {
  int n = 0;               // punctures, n >= 3
  std::vector<int> punc;   // size n, nondecreasing, values in [0, m]
  std::vector<int> up;     // up[c] = upper partner of cross point c
  std::vector<int> lo;     // lower partner

  int cross_count() const { return static_cast<int>(up.size()); }
  // gap index of cross point c: number of punctures left of c, in [0, n]
  int gap_of(int c) const;
  // true when at least one puncture sits between axis slots c and c+1
  bool puncture_between(int c, int cnext) const;

  bool operator==(const Diagram&) const = default;
};

// Structural checks (throw std::invalid_argument with a reason on failure).
void check_diagram_shape(const Diagram& d);   // matchings perfect + planar per side
bool is_reduced(const Diagram& d);            // no empty-span bigon arcs

// Connected components as sets of cross points, each sorted.
std::vector<std::vector<int>> components(const Diagram& d);
// Punctures enclosed by a set of cross points (even-odd rule), as 1-based ids.
std::vector<int> enclosed_punctures(const Diagram& d, const std::vector<int>& comp);

// Bigon reduction to the canonical tight form.  Deletes trivial circles and
// components that enclose no puncture or all n punctures.  Idempotent.
Diagram reduce(Diagram d);

// Validity levels used throughout.
bool is_valid_diagram(const Diagram& d);      // reduced, shape-checked, nontrivial
bool is_multicurve(const Diagram& d);         // + essential, pairwise non-isotopic components
bool is_pants(const Diagram& d);              // + exactly n-2 components
bool is_round(const Diagram& d);              // every component meets the axis twice

// Extract one component as a standalone reduced diagram.
Diagram component_diagram(const Diagram& d, const std::vector<int>& comp);
// Split into per-component diagrams (canonical order).
std::vector<Diagram> split_components(const Diagram& d);

// The nested round family: curve k encircles punctures 1..k+1, k = 1..n-2.
Diagram round_pants(int n);
// Round curve with exactly two cross points encircling punctures i..j (1-based,
// 1 <= i < j <= n, not the full set unless i=1, j=n which is rejected).
Diagram round_curve(int n, int i, int j);

// Isotopy-class equality via canonical forms.
bool canonical_equal(const Diagram& a, const Diagram& b);

// Compact human-readable form, e.g. "n=3 [x P1 P2 x P3] U(0-1) L(0-1)".
std::string to_string(const Diagram& d);

}  // namespace stripcut
