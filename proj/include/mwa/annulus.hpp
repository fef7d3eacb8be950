#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwa/polytope.hpp"

namespace mwa {

// Point set stored flat (row-major, stride dim) for cache-friendly sweeps.
class PointCloud {
public:
  PointCloud() = default;
  PointCloud(int dim, std::vector<double> data);
  static PointCloud from_points(int dim, const std::vector<Vec>& pts);

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }
  const double* point(std::size_t i) const { return data_.data() + i * dim_; }
  Vec point_vec(std::size_t i) const {
    return Vec(point(i), point(i) + dim_);
  }
  const std::vector<double>& data() const { return data_; }

  void append(const Vec& p);

private:
  int dim_ = 0;
  std::vector<double> data_;
};

// Concentric annulus evaluated for one center/orientation, plus solver
// metadata filled in by the search pipelines.
struct AnnulusSolution {
  Vec center;
  Rotation rotation;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double width = 0.0;
  double epsilon = 0.0;
  std::uint64_t evaluations = 0;
  double elapsed_ms = 0.0;

  // Pipeline metadata.
  std::string mode = "fixed-center";
  double b_used = 0.0;           // grid constant of the final pass (0 if none)
  double bootstrap_width = -1.0;  // width of the eps=1 pre-pass (-1 if none)
  double f_hat = 0.0;             // rotation searches only
  std::uint64_t orientations = 0;
  int retries = 0;
};

struct FatnessStats {
  double concentric_fatness = 0.0;  // F_c = R / r
  double slimness = 0.0;            // f = R / width
};

// MWA(c) for a fixed center: inner radius min_p d_C(c,p), outer radius
// max_p d_C(c,p). One gauge pass, O(m n).
AnnulusSolution annulus_at(const ConvexPolytope& c, const PointCloud& s, const Vec& center,
                           int threads = 1);

// F_c and f of a solved annulus. Requires positive inner radius and width.
FatnessStats fatness_stats(const ConvexPolytope& c, const PointCloud& s,
                           const AnnulusSolution& sol);

}  // namespace mwa
