#pragma once

#include <cstdint>

#include "mwa/annulus.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

enum class OracleMode { kTranslation, kRigid };

struct OracleParams {
  int cells_per_axis = 0;  // 0 = pick by dimension (48 in 2D, 16 in 3D)
  int angle_count = 48;    // per axis, rigid mode
  std::uint64_t max_cells = 10'000'000;
  std::size_t max_points = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Certified bracket on the optimal width obtained by multilevel dense search.
// upper is an achieved width; lower = upper - 2*t where t bounds the directed
// convex distance from any point of the (provably containing) search region
// to its nearest gridpoint, so lower <= w_opt <= upper.
struct OracleReport {
  double lower = 0.0;
  double upper = 0.0;
  Vec best_center;
  Rotation best_rotation;
  double slack = 0.0;  // 2 * t at the final level
  int levels = 0;
  std::uint64_t cells_evaluated = 0;
  double angle_step = 0.0;      // rigid mode
  double rotation_slack = 0.0;  // rigid mode, width units
};

OracleReport brute_force_oracle(const ConvexPolytope& c, const PointCloud& s, OracleMode mode,
                                int levels = 3, const OracleParams& params = {});

}  // namespace mwa
