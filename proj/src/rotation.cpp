#include "mwa/rotation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "mwa/util.hpp"

namespace mwa {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Matrix givens(int dim, int i, int j, double angle) {
  Matrix m = Matrix::identity(dim);
  double c = std::cos(angle), s = std::sin(angle);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return m;
}

}  // namespace

double scale_factor(double theta, double alpha) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) throw InvalidParameter("theta must be in (0, pi/2)");
  if (!(alpha >= 0.0 && alpha < kPi - theta))
    throw InvalidParameter("alpha must be in [0, pi - theta)");
  return std::sin(kPi - theta - alpha) / std::sin(theta);
}

double alpha_bound_exact(double theta, double f, double eps) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) throw InvalidParameter("theta must be in (0, pi/2)");
  if (!(f > 1.0)) throw InvalidParameter("slimness f must be > 1");
  if (!(eps > 0.0)) throw InvalidParameter("epsilon must be > 0");
  double root = std::sqrt((1.0 + eps) * (1.0 + eps) + 4.0 * f * (f - 1.0));
  double arg = std::sin(theta) / (2.0 * f) * (1.0 + eps + root);
  return std::asin(std::clamp(arg, -1.0, 1.0)) - theta;
}

double alpha_bound_simple(double theta, double f, double eps) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) throw InvalidParameter("theta must be in (0, pi/2)");
  if (!(f > 0.0)) throw InvalidParameter("slimness f must be > 0");
  if (!(eps >= 0.0)) throw InvalidParameter("epsilon must be >= 0");
  return theta * eps / (2.0 * f);
}

Matrix rotation_from_angles(const Rotation& r) {
  const int d = r.dim;
  if (d < 2) throw InvalidParameter("rotation dimension must be >= 2");
  if (static_cast<int>(r.angles.size()) != d - 1)
    throw InvalidParameter("rotation needs d-1 angles");
  Matrix m = givens(d, 0, 1, r.angles[0]);
  for (int i = 1; i < d - 1; ++i) m = givens(d, i, i + 1, r.angles[i]).multiply(m);
  return m;
}

RotationGrid build_rotation_grid(int dim, double theta, double f_hat, double eps,
                                 std::uint64_t max_orientations) {
  if (dim < 2) throw InvalidParameter("dimension must be >= 2");
  if (!(theta > 0.0 && theta < kPi / 2.0)) throw InvalidParameter("theta must be in (0, pi/2)");
  if (!(f_hat > 1.0)) throw InvalidParameter("f_hat must be > 1");
  if (!(eps > 0.0)) throw InvalidParameter("epsilon must be > 0");

  RotationGrid g;
  g.dim = dim;
  g.theta = theta;
  g.f_hat = f_hat;
  g.target_diagonal = theta * eps / f_hat;
  double k = std::ceil(2.0 * kPi * f_hat * std::sqrt(static_cast<double>(dim - 1)) /
                       (theta * eps));
  if (!(k >= 1.0) || k > 1e18) throw InvalidParameter("rotation grid is unreasonably fine");
  g.per_axis_count = static_cast<int>(std::min(k, 2e9));
  g.step = 2.0 * kPi / static_cast<double>(g.per_axis_count);

  double count = std::pow(k, dim - 1);
  if (count > static_cast<double>(max_orientations))
    throw GridTooLarge("rotation grid needs " + std::to_string(count) +
                           " orientations, above the configured cap of " +
                           std::to_string(max_orientations),
                       static_cast<std::uint64_t>(std::min(count, 1.8e19)));
  return g;
}

namespace {

struct OrientationSearch {
  AnnulusSolution best;
  std::uint64_t evaluations = 0;
  std::uint64_t orientations = 0;
  int retries = 0;
  double f_hat = 0.0;
};

// Shared slimness-doubling loop over orientation grids. `solve_at` maps a
// rotation to a candidate solution; `identity` is the already-solved zero
// rotation so the grid's zero tuple costs nothing extra.
template <typename SolveAt>
OrientationSearch orientation_loop(const ConvexPolytope& c, const SolverConfig& cfg, double xi,
                                   const AnnulusSolution& identity, std::uint64_t per_eval_cost,
                                   SolveAt&& solve_at) {
  const double theta = c.bottleneck_angle();
  OrientationSearch out;
  out.f_hat = std::max(1.0 + 1e-3,
                       identity.outer_radius / std::max(identity.width, 1e-300));
  if (!std::isfinite(out.f_hat)) out.f_hat = 1.0 + 1e-3;

  for (int attempt = 0;; ++attempt) {
    std::uint64_t cap = std::max<std::uint64_t>(
        1, cfg.rotation_eval_cap / std::max<std::uint64_t>(1, per_eval_cost));
    RotationGrid grid = build_rotation_grid(c.dim(), theta, out.f_hat, xi, cap);

    AnnulusSolution best;
    best.width = std::numeric_limits<double>::infinity();
    const std::uint64_t total = grid.count();
    for (std::uint64_t o = 0; o < total; ++o) {
      Rotation rot = grid.rotation_of(o);
      AnnulusSolution cand;
      if (rot.is_identity()) {
        cand = identity;
        cand.rotation = rot;
      } else {
        cand = solve_at(rot);
        cand.rotation = rot;
      }
      out.evaluations += std::max<std::uint64_t>(1, cand.evaluations);
      if (cand.width < best.width) best = cand;
    }
    out.orientations = total;
    out.retries = attempt;
    out.best = best;

    if (best.width <= cfg.tolerance * std::max(1.0, best.outer_radius)) return out;
    double achieved = best.outer_radius / best.width;
    if (achieved <= out.f_hat) return out;
    if (attempt >= cfg.slimness_retries)
      throw SlimnessDiverged(
          "slimness estimate kept diverging (achieved R/width " + std::to_string(achieved) +
              " vs f_hat " + std::to_string(out.f_hat) + " after " + std::to_string(attempt) +
              " retries); best width " + std::to_string(best.width),
          best.width);
    out.f_hat *= 2.0;
  }
}

}  // namespace

AnnulusSolution mwa_rigid(const ConvexPolytope& c, const PointCloud& s,
                          const SolverConfig& cfg) {
  cfg.validate();
  if (s.empty()) throw EmptyCloud("mwa_rigid: empty point cloud");
  const auto t0 = Clock::now();

  const double xi = std::sqrt(1.0 + cfg.epsilon) - 1.0;
  SolverConfig inner = cfg;
  inner.epsilon = xi;

  AnnulusSolution identity = mwa_translation(c, s, inner);
  std::uint64_t evals = identity.evaluations;

  auto finish = [&](AnnulusSolution sol, double f_hat, std::uint64_t orientations, int retries) {
    sol.epsilon = cfg.epsilon;
    sol.evaluations = evals;
    sol.elapsed_ms = ms_since(t0);
    sol.mode = "rigid";
    sol.f_hat = f_hat;
    sol.orientations = orientations;
    sol.retries = retries;
    return sol;
  };

  if (identity.width <= cfg.tolerance * std::max(1.0, identity.outer_radius))
    return finish(identity, 0.0, 1, 0);

  OrientationSearch found = orientation_loop(
      c, cfg, xi, identity, std::max<std::uint64_t>(1, identity.evaluations),
      [&](const Rotation& rot) {
        ConvexPolytope rotated = c.rotate(rotation_from_angles(rot));
        return mwa_translation(rotated, s, inner);
      });
  evals += found.evaluations;

  // The zero orientation solved at the caller's eps is also a valid
  // candidate; including it makes "rigid never loses to translation-only"
  // hold unconditionally.
  AnnulusSolution at_eps = mwa_translation(c, s, cfg);
  evals += at_eps.evaluations;
  AnnulusSolution best = found.best;
  if (at_eps.width < best.width) best = at_eps;

  return finish(best, found.f_hat, found.orientations, found.retries);
}

AnnulusSolution mwa_rotation_only(const ConvexPolytope& c, const PointCloud& s, const Vec& center,
                                  const SolverConfig& cfg) {
  cfg.validate();
  if (s.empty()) throw EmptyCloud("mwa_rotation_only: empty point cloud");
  const auto t0 = Clock::now();

  AnnulusSolution identity = annulus_at(c, s, center, cfg.threads);
  std::uint64_t evals = 1;

  auto finish = [&](AnnulusSolution sol, double f_hat, std::uint64_t orientations, int retries) {
    sol.epsilon = cfg.epsilon;
    sol.evaluations = evals;
    sol.elapsed_ms = ms_since(t0);
    sol.mode = "rotation-only";
    sol.f_hat = f_hat;
    sol.orientations = orientations;
    sol.retries = retries;
    return sol;
  };

  if (identity.width <= cfg.tolerance * std::max(1.0, identity.outer_radius))
    return finish(identity, 0.0, 1, 0);

  OrientationSearch found =
      orientation_loop(c, cfg, cfg.epsilon, identity, 1, [&](const Rotation& rot) {
        ConvexPolytope rotated = c.rotate(rotation_from_angles(rot));
        return annulus_at(rotated, s, center, cfg.threads);
      });
  evals += found.evaluations;
  return finish(found.best, found.f_hat, found.orientations, found.retries);
}

}  // namespace mwa
