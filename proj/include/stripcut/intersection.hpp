#pragma once

#include "stripcut/diskcurve.hpp"

namespace stripcut {

// Geometric intersection number of two multicurves on the same disk.
//
// Each pair of components is superposed as two chord systems over a common
// axis, crossings are counted on round-chord realizations, and inessential
// pairs of crossings are cancelled by an innermost-bigon sweep over the faces
// of the arrangement until no puncture-free bigon remains.
long long intersection_number(const Diagram& a, const Diagram& b);

// Single-pair version used by the sweep and the test oracle; both inputs must
// be single-component diagrams.
long long pair_intersection(const Diagram& alpha, const Diagram& beta);

}  // namespace stripcut
