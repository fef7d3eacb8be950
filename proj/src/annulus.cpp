#include "mwa/annulus.hpp"

#include <cmath>
#include <limits>

#include "mwa/util.hpp"

namespace mwa {

PointCloud::PointCloud(int dim, std::vector<double> data) : dim_(dim), data_(std::move(data)) {
  if (dim_ < 1) throw ValidationError("point cloud dimension must be >= 1");
  if (data_.size() % dim_ != 0) throw ValidationError("point data not a multiple of dim");
  for (double x : data_)
    if (!std::isfinite(x)) throw ValidationError("point cloud contains non-finite values");
}

PointCloud PointCloud::from_points(int dim, const std::vector<Vec>& pts) {
  std::vector<double> flat;
  flat.reserve(pts.size() * dim);
  for (const Vec& p : pts) {
    if (static_cast<int>(p.size()) != dim) throw ValidationError("point dimension mismatch");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return PointCloud(dim, std::move(flat));
}

void PointCloud::append(const Vec& p) {
  if (dim_ == 0) dim_ = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != dim_) throw ValidationError("point dimension mismatch");
  for (double x : p) {
    if (!std::isfinite(x)) throw ValidationError("point cloud contains non-finite values");
    data_.push_back(x);
  }
}

AnnulusSolution annulus_at(const ConvexPolytope& c, const PointCloud& s, const Vec& center,
                           int threads) {
  if (s.empty()) throw EmptyCloud("annulus_at: empty point cloud");
  if (s.dim() != c.dim() || static_cast<int>(center.size()) != c.dim())
    throw ValidationError("dimension mismatch");

  const int d = c.dim();
  const std::size_t n = s.size();
  const double* data = s.data().data();

  struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
  };
  std::vector<Range> parts(threads < 1 ? 1 : threads);
  parallel_for_chunks(n, threads, [&](std::size_t b, std::size_t e, std::size_t chunk) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::vector<double> diff(d);
    const double* ctr = center.data();
    for (std::size_t i = b; i < e; ++i) {
      const double* p = data + i * d;
      for (int j = 0; j < d; ++j) diff[j] = p[j] - ctr[j];
      double g = c.gauge_ptr(diff.data());
      if (g < lo) lo = g;
      if (g > hi) hi = g;
    }
    parts[chunk].lo = lo;
    parts[chunk].hi = hi;
  });

  AnnulusSolution sol;
  sol.center = center;
  sol.rotation = Rotation::identity(d);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const Range& r : parts) {
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  sol.inner_radius = lo;
  sol.outer_radius = hi;
  sol.width = hi - lo;
  sol.evaluations = 1;
  return sol;
}

FatnessStats fatness_stats(const ConvexPolytope&, const PointCloud&,
                           const AnnulusSolution& sol) {
  if (sol.width <= 0.0 || sol.inner_radius <= 0.0)
    throw DegenerateAnnulus("fatness stats undefined for zero width or zero inner radius");
  FatnessStats f;
  f.concentric_fatness = sol.outer_radius / sol.inner_radius;
  f.slimness = sol.outer_radius / sol.width;
  return f;
}

}  // namespace mwa
