#pragma once

#include <string>
#include <vector>

#include "mwa/annulus.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

// Shell polygon of a solution: center + radius * (rotated vertex) for every
// vertex of C, in boundary order.
std::vector<Vec> annulus_shell(const ConvexPolytope& c, const AnnulusSolution& sol,
                               double radius);

// 2D SVG of the sample points, the solution's inner and outer shells, and the
// MinBall. Byte-deterministic for fixed inputs.
std::string render_svg(const ConvexPolytope& c, const PointCloud& s, const AnnulusSolution& sol);

void write_svg(const std::string& path, const std::string& svg);

}  // namespace mwa
