#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mwa/errors.hpp"
#include "mwa/vec.hpp"

namespace mwa {

// Halfspace {x : normal . x <= offset}. Offsets are strictly positive for
// bodies with the origin in their interior.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

// Orientation given as d-1 planar rotation angles, each in [0, 2*pi).
// See rotation_from_angles() in rotation.hpp for the operator it induces.
struct Rotation {
  int dim = 2;
  std::vector<double> angles;  // size dim-1

  static Rotation identity(int dim) {
    Rotation r;
    r.dim = dim;
    r.angles.assign(static_cast<std::size_t>(dim - 1), 0.0);
    return r;
  }

  bool is_identity() const {
    for (double a : angles)
      if (a != 0.0) return false;
    return true;
  }
};

// Axis-aligned cube given by center and half side length.
struct Cube {
  Vec center;
  double half_side = 0.0;

  double side() const { return 2.0 * half_side; }
};

// Bounded convex polytope with the origin strictly interior, stored in both
// representations. The facet description defines the gauge (convex distance
// function); the vertex description drives rotations, reflection and the
// planar sweep.
class ConvexPolytope {
public:
  // Empty shell; only meaningful once assigned from a factory below.
  ConvexPolytope() = default;

  // Builds the hull of `points`. For d == 2 facets come from the CCW hull
  // boundary; for d == 3 from a facet enumeration; d > 3 requires
  // from_vertices_and_halfspaces.
  static ConvexPolytope from_vertices(int dim, const std::vector<Vec>& points);

  // Trusts the caller's halfspaces (after validation). Needed for d > 3,
  // accepted for any d.
  static ConvexPolytope from_vertices_and_halfspaces(int dim, const std::vector<Vec>& points,
                                                     const std::vector<Halfspace>& halfspaces);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  // Facet indices whose hyperplane contains vertex v (1e-9 relative tolerance).
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }
  std::size_t facet_count() const { return facets_.size(); }

  // Gauge of v: max_i (normal_i . v) / offset_i, clamped at 0. Positively
  // homogeneous; gauge(vertex) == 1.
  double gauge(const Vec& v) const { return gauge_ptr(v.data()); }
  double gauge_ptr(const double* v) const;

  // Convex distance d_C(p, q) = gauge(q - p).
  double distance(const Vec& p, const Vec& q) const;

  // Same gauge evaluated as the difference of two precomputed facet dot
  // products; used by callers that cache normal.p per facet.
  // scaled_normals()[i*dim+j] holds normal_i[j] / offset_i.
  const std::vector<double>& scaled_normals() const { return scaled_normals_; }

  ConvexPolytope reflect() const;
  ConvexPolytope rotate(const Matrix& op) const;

  // A = max over vertices v of gauge(-v); 1 iff centrally symmetric.
  double asymmetry_constant() const;

  // Minimum over vertex-facet incidences of the angle between the vertex ray
  // and the facet hyperplane, arcsin(|n_hat . v_hat|). In (0, pi/2).
  double bottleneck_angle() const;

  // Largest axis-aligned cube inside the polytope (LP; lexicographically
  // smallest center among optima).
  Cube largest_enclosed_cube() const;

  // Smallest axis-aligned cube containing {c + w * v : v in vertices}.
  Cube smallest_enclosing_cube(const Vec& center, double scale) const;

  bool is_centrally_symmetric() const;

  double max_vertex_norm_inf() const;

private:
  void finalize();  // caches + incidence + invariant checks

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> incidence_;
  std::vector<double> scaled_normals_;  // facet-major, normal/offset
};

}  // namespace mwa
