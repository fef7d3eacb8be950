#include "mwa/translation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "mwa/planar.hpp"
#include "mwa/util.hpp"

namespace mwa {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Min/max gauge over the cloud from a fixed center; mirrors annulus_at's
// arithmetic exactly so scan results are reproducible bit for bit.
std::pair<double, double> gauge_range(const ConvexPolytope& c, const PointCloud& s,
                                      const double* center) {
  const int d = c.dim();
  const std::size_t n = s.size();
  const double* data = s.data().data();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  std::vector<double> diff(d);
  for (std::size_t i = 0; i < n; ++i) {
    const double* p = data + i * d;
    for (int j = 0; j < d; ++j) diff[j] = p[j] - center[j];
    double g = c.gauge_ptr(diff.data());
    if (g < lo) lo = g;
    if (g > hi) hi = g;
  }
  return {lo, hi};
}

AnnulusSolution run_grid(const ConvexPolytope& c, const PointCloud& s,
                         const TranslationGrid& grid, const SolverConfig& cfg) {
  std::uint64_t work = static_cast<std::uint64_t>(s.size()) * grid.point_count();
  if (grid.dim == 2 && work > cfg.planar_crossover)
    return fast_mwa_sweep(c, s, grid, cfg.threads);
  return evaluate_grid(c, s, grid, cfg.threads);
}

}  // namespace

AnnulusSolution constant_factor_mwa(const ConvexPolytope& c, const PointCloud& s,
                                    std::uint64_t seed, int threads) {
  Placement mb = minball(c, s, seed);
  AnnulusSolution sol = annulus_at(c, s, mb.center, threads);
  sol.mode = "constant-factor";
  return sol;
}

TranslationGrid build_translation_grid(const ConvexPolytope& c, const Vec& center, double w,
                                       double eps, double b) {
  if (!(w > 0.0)) throw InvalidParameter("grid anchor width must be > 0");
  if (!(eps > 0.0)) throw InvalidParameter("epsilon must be > 0");
  if (!(b >= 1.0)) throw InvalidParameter("approximation constant b must be >= 1");

  Cube q = c.largest_enclosed_cube();
  Cube enclosing = c.smallest_enclosing_cube(Vec(c.dim(), 0.0), 1.0);
  Cube region = c.smallest_enclosing_cube(center, w);

  TranslationGrid grid;
  grid.dim = c.dim();
  grid.w = w;
  grid.b = b;
  grid.f_cube = enclosing.side() / q.side();
  grid.spacing = (eps * w / (2.0 * b)) * q.side();
  grid.points_per_axis =
      std::max(2, static_cast<int>(std::ceil(region.side() / grid.spacing)) + 1);
  grid.origin.resize(grid.dim);
  for (int j = 0; j < grid.dim; ++j) grid.origin[j] = region.center[j] - region.half_side;
  return grid;
}

std::vector<double> evaluate_grid_widths(const ConvexPolytope& c, const PointCloud& s,
                                         const TranslationGrid& grid, int threads) {
  if (s.empty()) throw EmptyCloud("evaluate_grid: empty point cloud");
  const std::uint64_t total = grid.point_count();
  std::vector<double> widths(total);
  parallel_for_chunks(total, threads, [&](std::size_t b, std::size_t e, std::size_t) {
    std::vector<double> pt(grid.dim);
    for (std::size_t g = b; g < e; ++g) {
      grid.point(g, pt.data());
      auto [lo, hi] = gauge_range(c, s, pt.data());
      widths[g] = hi - lo;
    }
  });
  return widths;
}

AnnulusSolution evaluate_grid(const ConvexPolytope& c, const PointCloud& s,
                              const TranslationGrid& grid, int threads) {
  if (s.empty()) throw EmptyCloud("evaluate_grid: empty point cloud");
  const std::uint64_t total = grid.point_count();

  struct Best {
    double width = std::numeric_limits<double>::infinity();
    std::uint64_t flat = 0;
  };
  std::vector<Best> parts(threads < 1 ? 1 : threads);
  parallel_for_chunks(total, threads, [&](std::size_t b, std::size_t e, std::size_t chunk) {
    Best best;
    std::vector<double> pt(grid.dim);
    for (std::size_t g = b; g < e; ++g) {
      grid.point(g, pt.data());
      auto [lo, hi] = gauge_range(c, s, pt.data());
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
    if (p.width < best.width) best = p;  // chunk order keeps the smallest flat index on ties

  AnnulusSolution sol = annulus_at(c, s, grid.point_vec(best.flat), threads);
  sol.evaluations = total;
  return sol;
}

AnnulusSolution mwa_translation(const ConvexPolytope& c, const PointCloud& s,
                                const SolverConfig& cfg) {
  cfg.validate();
  if (s.empty()) throw EmptyCloud("mwa_translation: empty point cloud");
  const auto t0 = Clock::now();

  Placement mb = minball(c, s, cfg.seed);
  AnnulusSolution base = annulus_at(c, s, mb.center, cfg.threads);
  std::uint64_t evals = 1;

  auto finish = [&](AnnulusSolution sol, double b_used, double bootstrap_width) {
    sol.epsilon = cfg.epsilon;
    sol.evaluations = evals;
    sol.elapsed_ms = ms_since(t0);
    sol.mode = "translation";
    sol.b_used = b_used;
    sol.bootstrap_width = bootstrap_width;
    sol.rotation = Rotation::identity(c.dim());
    return sol;
  };

  // Zero width at the MinBall center is already optimal.
  if (base.width <= cfg.tolerance) return finish(base, 0.0, -1.0);

  double b = 2.0;
  double anchor_w = base.width;
  double bootstrap_width = -1.0;
  AnnulusSolution best = base;

  if (cfg.force_b) {
    b = *cfg.force_b;
    if (!(b >= 1.0)) throw InvalidParameter("force_b must be >= 1");
  } else if (!is_centrally_symmetric(c)) {
    // Bootstrap pass: eps = 1 with b = A+1 yields a 2-approximation whose
    // width then anchors the main grid (still centered at the MinBall
    // center, which carries the proven search-region bound).
    double boot_b = c.asymmetry_constant() + 1.0;
    TranslationGrid boot_grid = build_translation_grid(c, mb.center, base.width, 1.0, boot_b);
    AnnulusSolution boot = run_grid(c, s, boot_grid, cfg);
    evals += boot_grid.point_count();
    if (boot.width < best.width) best = boot;
    bootstrap_width = std::min(boot.width, base.width);
    if (bootstrap_width <= cfg.tolerance) return finish(best, boot_b, bootstrap_width);
    anchor_w = bootstrap_width;
  }

  TranslationGrid grid = build_translation_grid(c, mb.center, anchor_w, cfg.epsilon, b);
  AnnulusSolution main = run_grid(c, s, grid, cfg);
  evals += grid.point_count();
  if (main.width < best.width) best = main;

  return finish(best, b, bootstrap_width);
}

}  // namespace mwa
