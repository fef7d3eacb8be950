#include "mwa/minball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mwa/lp.hpp"

namespace mwa {

Placement minball(const ConvexPolytope& c, const PointCloud& s, std::uint64_t seed) {
  if (s.empty()) throw EmptyCloud("minball: empty point cloud");
  if (s.dim() != c.dim()) throw ValidationError("dimension mismatch");
  const int d = c.dim();
  const std::size_t n = s.size();

  // Radius from an arbitrary feasible center bounds the search box.
  Vec p0 = s.point_vec(0);
  double r0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) r0 = std::max(r0, c.distance(p0, s.point_vec(i)));
  const double vinf = c.max_vertex_norm_inf();
  const double pad = 1.01 * r0 * vinf + 1.0;

  LinearProgram lp;
  lp.objective.assign(d + 1, 0.0);
  lp.objective[d] = 1.0;  // min R
  lp.lower.resize(d + 1);
  lp.upper.resize(d + 1);
  for (int j = 0; j < d; ++j) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, s.point(i)[j]);
      hi = std::max(hi, s.point(i)[j]);
    }
    lp.lower[j] = lo - pad;
    lp.upper[j] = hi + pad;
  }
  lp.lower[d] = 0.0;
  lp.upper[d] = 1.01 * r0 + 1.0;

  // normal_i . (p - c) <= R * offset_i  ->  -normal_i . c - offset_i R <= -normal_i . p
  lp.constraints.reserve(n * c.facet_count());
  for (std::size_t i = 0; i < n; ++i) {
    const double* p = s.point(i);
    for (const Halfspace& f : c.facets()) {
      LinearConstraint lc;
      lc.a.resize(d + 1);
      double np = 0.0;
      for (int j = 0; j < d; ++j) {
        lc.a[j] = -f.normal[j];
        np += f.normal[j] * p[j];
      }
      lc.a[d] = -f.offset;
      lc.b = -np;
      lp.constraints.push_back(std::move(lc));
    }
  }

  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  double min_radius = 0.0;
  auto sol = solve_lex_min(lp, rng, 1e-11, &min_radius);
  if (!sol) throw Error("minball LP infeasible (should be impossible)");

  // Big-M certificate: the box must not bind at the optimum.
  for (int j = 0; j <= d; ++j) {
    double margin = 1e-6 * (1.0 + lp.upper[j] - lp.lower[j]);
    if (j < d && ((*sol)[j] < lp.lower[j] + margin || (*sol)[j] > lp.upper[j] - margin))
      throw Error("minball bounding box bound active; instance out of expected range");
  }

  Placement out;
  out.center.assign(sol->begin(), sol->begin() + d);
  out.radius = std::max(0.0, min_radius);
  return out;
}

Placement maxball_at(const ConvexPolytope& c, const PointCloud& s, const Vec& center) {
  if (s.empty()) throw EmptyCloud("maxball_at: empty point cloud");
  AnnulusSolution a = annulus_at(c, s, center);
  return Placement{center, a.inner_radius};
}

}  // namespace mwa
