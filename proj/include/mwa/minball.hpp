#pragma once

#include <cstdint>

#include "mwa/annulus.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

// Translated and scaled copy center + radius * C.
struct Placement {
  Vec center;
  double radius = 0.0;
};

// Global minimum enclosing ball: min R s.t. every point lies in c + R*C.
// Solved as a randomized incremental LP over the n*m facet constraints,
// expected linear time for fixed dimension. Among optimal centers returns the
// lexicographically smallest. Deterministic for a fixed seed.
Placement minball(const ConvexPolytope& c, const PointCloud& s, std::uint64_t seed = 0);

// Largest concentric ball at center c containing no sample point in its
// interior: radius = min_p d_C(c, p).
Placement maxball_at(const ConvexPolytope& c, const PointCloud& s, const Vec& center);

}  // namespace mwa
