#pragma once

#include <cstdint>
#include <optional>

#include "mwa/annulus.hpp"
#include "mwa/minball.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

struct SolverConfig {
  double epsilon = 0.25;        // in (0, 1]
  std::uint64_t seed = 0;
  int threads = 1;
  double tolerance = 1e-9;
  std::optional<double> force_b;  // override the grid constant b

  // n * gridpoints above which the 2D sweep replaces direct evaluation.
  std::uint64_t planar_crossover = 2'000'000;
  // Cap on orientation * gridpoint evaluations for rotation searches.
  std::uint64_t rotation_eval_cap = 10'000'000;
  int slimness_retries = 6;

  void validate() const {
    if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be > 0");
    if (!(tolerance >= 0.0)) throw InvalidParameter("tolerance must be >= 0");
  }
};

// Cubic lattice of candidate centers covering the smallest cube Q around the
// search region c + w*C, with cell size taken from the largest cube enclosed
// by (eps*w/(2b)) * C.
struct TranslationGrid {
  Vec origin;            // lowest corner
  double spacing = 0.0;  // cell side
  int points_per_axis = 0;
  int dim = 0;

  // Diagnostics recorded at build time.
  double w = 0.0;       // anchor width
  double b = 0.0;       // approximation constant used
  double f_cube = 0.0;  // enclosing-cube side / enclosed-cube side of C

  std::uint64_t point_count() const {
    std::uint64_t c = 1;
    for (int i = 0; i < dim; ++i) c *= static_cast<std::uint64_t>(points_per_axis);
    return c;
  }

  // Gridpoint for a flat index (lexicographic over axis indices, axis 0 most
  // significant).
  void point(std::uint64_t flat, double* out) const {
    for (int j = dim - 1; j >= 0; --j) {
      std::uint64_t i = flat % points_per_axis;
      flat /= points_per_axis;
      out[j] = origin[j] + spacing * static_cast<double>(i);
    }
  }
  Vec point_vec(std::uint64_t flat) const {
    Vec p(dim);
    point(flat, p.data());
    return p;
  }
};

// True iff the vertex set is closed under negation (1e-9 tolerance).
inline bool is_centrally_symmetric(const ConvexPolytope& c) { return c.is_centrally_symmetric(); }

// MWA at the MinBall center. Width <= (A+1) * w_opt in general, <= 2 * w_opt
// for centrally symmetric C.
AnnulusSolution constant_factor_mwa(const ConvexPolytope& c, const PointCloud& s,
                                    std::uint64_t seed = 0, int threads = 1);

// Grid construction; requires w > 0, eps > 0, b >= 1.
TranslationGrid build_translation_grid(const ConvexPolytope& c, const Vec& center, double w,
                                       double eps, double b);

// Direct evaluation: min over gridpoints of annulus_at(...).width, ties broken
// by smallest flat grid index. evaluations = gridpoint count.
AnnulusSolution evaluate_grid(const ConvexPolytope& c, const PointCloud& s,
                              const TranslationGrid& grid, int threads = 1);

// Per-gridpoint widths from direct evaluation (testing/verification surface).
std::vector<double> evaluate_grid_widths(const ConvexPolytope& c, const PointCloud& s,
                                         const TranslationGrid& grid, int threads = 1);

// Full translation pipeline: MinBall anchor, bootstrap pass for asymmetric
// shapes, then the eps-grid sweep. Guarantees width <= (1+eps) * w_opt.
AnnulusSolution mwa_translation(const ConvexPolytope& c, const PointCloud& s,
                                const SolverConfig& cfg);

}  // namespace mwa
