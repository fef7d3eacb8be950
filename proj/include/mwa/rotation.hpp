#pragma once

#include <cstdint>
#include <vector>

#include "mwa/annulus.hpp"
#include "mwa/translation.hpp"

namespace mwa {

// Growth factor sin(pi - theta - alpha) / sin(theta) needed for a copy of C
// rotated by alpha to contain the original (reciprocal for containment the
// other way). Requires 0 < theta < pi/2 and 0 <= alpha < pi - theta.
double scale_factor(double theta, double alpha);

// Largest rotation offset that keeps a (1+eps)-approximation at a fixed
// center: arcsin((sin(theta)/(2f)) * (1 + eps + sqrt((1+eps)^2 + 4f(f-1)))) - theta,
// the obtuse-root branch. Requires theta in (0, pi/2), f > 1, eps > 0.
double alpha_bound_exact(double theta, double f, double eps);

// The simpler lower bound theta * eps / (2 f).
double alpha_bound_simple(double theta, double f, double eps);

// Orthogonal operator for d-1 planar angles: a single rotation for d == 2;
// for d >= 3 the composition of Givens rotations in coordinate planes
// (0,1), (1,2), ..., (d-2, d-1), applied in that order.
Matrix rotation_from_angles(const Rotation& r);

// Lattice of orientation tuples {0, h, 2h, ...}^(d-1) with h = 2*pi/k and
// k = ceil(2*pi*f_hat*sqrt(d-1) / (theta*eps)), so the cell diagonal stays
// below theta*eps/f_hat.
struct RotationGrid {
  int dim = 2;
  int per_axis_count = 0;  // k
  double step = 0.0;       // h = 2*pi/k

  // Diagnostics.
  double theta = 0.0;
  double f_hat = 0.0;
  double target_diagonal = 0.0;  // theta*eps/f_hat

  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (int i = 1; i < dim; ++i) c *= static_cast<std::uint64_t>(per_axis_count);
    return c;
  }

  Rotation rotation_of(std::uint64_t flat) const {
    Rotation r = Rotation::identity(dim);
    for (int j = dim - 2; j >= 0; --j) {
      std::uint64_t i = flat % per_axis_count;
      flat /= per_axis_count;
      r.angles[j] = step * static_cast<double>(i);
    }
    return r;
  }
};

RotationGrid build_rotation_grid(int dim, double theta, double f_hat, double eps,
                                 std::uint64_t max_orientations = 10'000'000);

// (1+eps)-approximate MWA under rotations and translations. Runs the
// translation solver at xi = sqrt(1+eps)-1 for every grid orientation,
// estimating the slimness f_hat by doubling until the winner's R/width is
// consistent with the grid resolution.
AnnulusSolution mwa_rigid(const ConvexPolytope& c, const PointCloud& s, const SolverConfig& cfg);

// Rotation-only variant for a fixed center.
AnnulusSolution mwa_rotation_only(const ConvexPolytope& c, const PointCloud& s, const Vec& center,
                                  const SolverConfig& cfg);

}  // namespace mwa
