#include "mwa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mwa/minball.hpp"
#include "mwa/rotation.hpp"
#include "mwa/util.hpp"

namespace mwa {
namespace {

struct LevelResult {
  double upper;
  Vec center;
  double lower;
  double final_t;
  std::uint64_t cells;
};

// Multilevel dense center search for one (fixed) orientation of C. Every
// level grids the cube around minball_center + upper * C, which provably
// contains the optimal center, so upper - 2t is a valid lower bound at each
// level.
LevelResult translation_scan(const ConvexPolytope& c, const PointCloud& s, const Vec& anchor,
                             double start_width, int levels, int per_axis, int threads) {
  const int d = c.dim();
  const double h_cube = c.largest_enclosed_cube().half_side;

  LevelResult res;
  res.upper = start_width;
  res.center = anchor;
  res.lower = -std::numeric_limits<double>::infinity();
  res.final_t = 0.0;
  res.cells = 0;

  for (int level = 0; level < levels; ++level) {
    if (res.upper <= 0.0) {
      res.lower = std::max(res.lower, res.upper);
      res.final_t = 0.0;
      break;
    }
    Cube q = c.smallest_enclosing_cube(anchor, res.upper);
    double spacing = q.side() / static_cast<double>(per_axis - 1);
    std::uint64_t total = 1;
    for (int j = 0; j < d; ++j) total *= static_cast<std::uint64_t>(per_axis);

    struct Best {
      double width = std::numeric_limits<double>::infinity();
      std::uint64_t flat = 0;
    };
    std::vector<Best> parts(threads < 1 ? 1 : threads);
    parallel_for_chunks(total, threads, [&](std::size_t gb, std::size_t ge, std::size_t chunk) {
      Best best;
      std::vector<double> pt(d), diff(d);
      for (std::size_t g = gb; g < ge; ++g) {
        std::uint64_t rem = g;
        for (int j = d - 1; j >= 0; --j) {
          std::uint64_t i = rem % per_axis;
          rem /= per_axis;
          pt[j] = q.center[j] - q.half_side + spacing * static_cast<double>(i);
        }
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t pi = 0; pi < s.size(); ++pi) {
          const double* p = s.point(pi);
          for (int j = 0; j < d; ++j) diff[j] = p[j] - pt[j];
          double gg = c.gauge_ptr(diff.data());
          if (gg < lo) lo = gg;
          if (gg > hi) hi = gg;
        }
        double w = hi - lo;
        if (w < best.width) {
          best.width = w;
          best.flat = g;
        }
      }
      parts[chunk] = best;
    });
    Best best;
    for (const Best& p : parts)
      if (p.width < best.width) best = p;
    res.cells += total;

    double t = (spacing / 2.0) / h_cube;
    double new_upper = std::min(res.upper, best.width);
    res.lower = std::max(res.lower, new_upper - 2.0 * t);
    res.final_t = t;
    if (best.width < res.upper) {
      res.upper = best.width;
      Vec center(d);
      std::uint64_t rem = best.flat;
      for (int j = d - 1; j >= 0; --j) {
        std::uint64_t i = rem % per_axis;
        rem /= per_axis;
        center[j] = q.center[j] - q.half_side + spacing * static_cast<double>(i);
      }
      res.center = center;
    }
  }
  return res;
}

}  // namespace

OracleReport brute_force_oracle(const ConvexPolytope& c, const PointCloud& s, OracleMode mode,
                                int levels, const OracleParams& params) {
  if (s.empty()) throw EmptyCloud("oracle: empty point cloud");
  if (s.size() > params.max_points)
    throw TooLargeForOracle("oracle limited to " + std::to_string(params.max_points) +
                            " points");
  if (levels < 1) throw InvalidParameter("levels must be >= 1");
  const int d = c.dim();
  int per_axis = params.cells_per_axis > 0 ? params.cells_per_axis : (d == 2 ? 48 : 16);

  double level_cells = std::pow(static_cast<double>(per_axis), d);
  double planned = level_cells * levels;
  if (mode == OracleMode::kRigid)
    planned *= std::pow(static_cast<double>(params.angle_count), d - 1);
  if (planned > static_cast<double>(params.max_cells))
    throw TooLargeForOracle("oracle grid would need " + std::to_string(planned) + " cells");

  OracleReport rep;
  rep.levels = levels;
  rep.best_rotation = Rotation::identity(d);

  if (mode == OracleMode::kTranslation) {
    Placement mb = minball(c, s, params.seed);
    AnnulusSolution at_anchor = annulus_at(c, s, mb.center, params.threads);
    LevelResult r = translation_scan(c, s, mb.center, at_anchor.width, levels, per_axis,
                                     params.threads);
    rep.upper = r.upper;
    rep.lower = r.lower;
    rep.best_center = r.center;
    rep.slack = 2.0 * r.final_t;
    rep.cells_evaluated = r.cells;
    return rep;
  }

  // Rigid mode: dense orientation lattice, translation refinement per
  // orientation, rotation slack from the growth factor at half the angular
  // step.
  const double theta = c.bottleneck_angle();
  const int k = params.angle_count;
  rep.angle_step = 2.0 * std::numbers::pi / static_cast<double>(k);
  std::uint64_t orientations = 1;
  for (int j = 1; j < d; ++j) orientations *= static_cast<std::uint64_t>(k);

  double best_upper = std::numeric_limits<double>::infinity();
  double best_lower_term = std::numeric_limits<double>::infinity();
  double best_outer = 0.0;
  for (std::uint64_t o = 0; o < orientations; ++o) {
    Rotation rot = Rotation::identity(d);
    std::uint64_t rem = o;
    for (int j = d - 2; j >= 0; --j) {
      rot.angles[j] = rep.angle_step * static_cast<double>(rem % k);
      rem /= k;
    }
    ConvexPolytope rc = rot.is_identity() ? c : c.rotate(rotation_from_angles(rot));
    Placement mb = minball(rc, s, params.seed);
    AnnulusSolution at_anchor = annulus_at(rc, s, mb.center, params.threads);
    LevelResult r = translation_scan(rc, s, mb.center, at_anchor.width, levels, per_axis,
                                     params.threads);
    rep.cells_evaluated += r.cells;
    if (r.upper < best_upper) {
      best_upper = r.upper;
      best_lower_term = r.upper - 2.0 * r.final_t;
      rep.best_center = r.center;
      rep.best_rotation = rot;
      rep.slack = 2.0 * r.final_t;
      AnnulusSolution win = annulus_at(rc, s, r.center, params.threads);
      best_outer = win.outer_radius;
    }
  }

  // The optimal orientation sits within half a step of some lattice point;
  // by the growth-factor bound the best lattice width can exceed w_opt by at
  // most (sf - 1/sf) * R in addition to the translation slack.
  double half_diag =
      0.5 * rep.angle_step * std::sqrt(static_cast<double>(d - 1));
  double sf = scale_factor(theta, std::min(half_diag, std::numbers::pi - theta - 1e-9));
  rep.rotation_slack = (sf - 1.0 / sf) * best_outer * sf;
  rep.upper = best_upper;
  rep.lower = best_lower_term - rep.rotation_slack;
  return rep;
}

}  // namespace mwa
