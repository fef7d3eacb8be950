#include "mwa/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mwa/lp.hpp"

namespace mwa {
namespace {

double spread(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const Vec& p : pts) s = std::max(s, norm_inf(p));
  return s;
}

std::vector<Vec> dedupe(const std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : out) {
      if (norm_inf(sub(p, q)) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

// Rank of the affine span of pts via Gram-Schmidt against the first point.
int affine_rank(const std::vector<Vec>& pts, double tol) {
  if (pts.empty()) return -1;
  std::vector<Vec> basis;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec v = sub(pts[i], pts[0]);
    for (const Vec& b : basis) v = sub(v, scaled(b, dot(v, b)));
    double n = norm2(v);
    if (n > tol) basis.push_back(scaled(v, 1.0 / n));
  }
  return static_cast<int>(basis.size());
}

// Monotone chain hull, CCW, starting from the lexicographically smallest point.
std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k > 1 ? k - 1 : k);
  return h;
}

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

double ConvexPolytope::gauge_ptr(const double* v) const {
  const int d = dim_;
  const double* row = scaled_normals_.data();
  double best = 0.0;
  for (std::size_t i = 0; i < facets_.size(); ++i, row += d) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += row[j] * v[j];
    if (s > best) best = s;
  }
  return best;
}

double ConvexPolytope::distance(const Vec& p, const Vec& q) const { return gauge(sub(q, p)); }

void ConvexPolytope::finalize() {
  const double s = spread(vertices_);
  if (static_cast<int>(facets_.size()) < dim_ + 1 ||
      static_cast<int>(vertices_.size()) < dim_ + 1)
    throw DegenerateShape("polytope needs at least dim+1 vertices and facets");
  for (const Halfspace& f : facets_) {
    if (f.offset <= 1e-12 * std::max(1.0, norm_inf(f.normal) * s))
      throw OriginNotInterior("facet offset not strictly positive");
  }
  scaled_normals_.assign(facets_.size() * static_cast<std::size_t>(dim_), 0.0);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (int j = 0; j < dim_; ++j)
      scaled_normals_[i * dim_ + j] = facets_[i].normal[j] / facets_[i].offset;

  incidence_.assign(vertices_.size(), {});
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    double g = gauge(vertices_[vi]);
    if (std::abs(g - 1.0) > 1e-9)
      throw ValidationError("vertex does not lie on the boundary (gauge " + std::to_string(g) +
                            ")");
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      double r = dot(facets_[fi].normal, vertices_[vi]) - facets_[fi].offset;
      if (std::abs(r) <= 1e-9 * std::max(1.0, std::abs(facets_[fi].offset))) {
        incidence_[vi].push_back(static_cast<int>(fi));
      }
    }
    if (incidence_[vi].empty()) throw ValidationError("vertex incident to no facet");
  }
}

ConvexPolytope ConvexPolytope::from_vertices(int dim, const std::vector<Vec>& points) {
  if (dim < 2) throw InvalidParameter("dim must be >= 2");
  if (dim > 3)
    throw DimensionTooHigh("for dim > 3 supply halfspaces (from_vertices_and_halfspaces)");
  for (const Vec& p : points)
    if (static_cast<int>(p.size()) != dim) throw ValidationError("point dimension mismatch");

  const double s = spread(points);
  std::vector<Vec> pts = dedupe(points, 1e-12 * s);
  if (affine_rank(pts, 1e-9 * s) < dim)
    throw DegenerateShape("input does not affinely span the space");

  ConvexPolytope c;
  c.dim_ = dim;

  if (dim == 2) {
    std::vector<Vec> h = hull_2d(pts);
    if (h.size() < 3) throw DegenerateShape("2D hull has fewer than 3 vertices");
    c.vertices_ = h;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Vec& u = h[i];
      const Vec& v = h[(i + 1) % h.size()];
      Vec n{v[1] - u[1], -(v[0] - u[0])};  // outward for a CCW boundary
      double len = norm2(n);
      if (len <= 1e-14 * s) throw DegenerateShape("zero-length hull edge");
      n = scaled(n, 1.0 / len);
      double off = dot(n, u);
      if (off <= 1e-12 * s) throw OriginNotInterior("origin not strictly inside the hull");
      c.facets_.push_back({n, off});
    }
  } else {
    // Facet enumeration over vertex triples. Reference polytopes are small,
    // so the cubic cost is irrelevant.
    std::vector<Halfspace> facets;
    const std::size_t k = pts.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l) {
          Vec n = cross3(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
          double len = norm2(n);
          if (len <= 1e-12 * s * s) continue;
          n = scaled(n, 1.0 / len);
          double off = dot(n, pts[i]);
          double lo = 0.0, hi = 0.0;
          for (const Vec& p : pts) {
            double r = dot(n, p) - off;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
          }
          double tol = 1e-9 * std::max(1.0, s);
          Halfspace cand;
          if (hi <= tol) {
            cand = {n, off};
          } else if (lo >= -tol) {
            cand = {negated(n), -off};
          } else {
            continue;  // not a supporting plane
          }
          if (cand.offset <= 1e-12 * s)
            throw OriginNotInterior("origin not strictly inside the hull");
          bool dup = false;
          for (const Halfspace& f : facets) {
            if (std::abs(dot(f.normal, cand.normal) - 1.0) <= 1e-9 &&
                std::abs(f.offset - cand.offset) <= 1e-9 * std::max(1.0, std::abs(f.offset))) {
              dup = true;
              break;
            }
          }
          if (!dup) facets.push_back(std::move(cand));
        }
    if (facets.size() < 4) throw DegenerateShape("3D facet enumeration found no closed hull");
    c.facets_ = facets;

    // Keep the extreme points: those on >= 3 facets whose normals span R^3.
    for (const Vec& p : pts) {
      std::vector<Vec> touching;
      for (const Halfspace& f : facets) {
        if (std::abs(dot(f.normal, p) - f.offset) <= 1e-9 * std::max(1.0, std::abs(f.offset)))
          touching.push_back(f.normal);
      }
      if (touching.size() < 3) continue;
      Vec origin(3, 0.0);
      touching.push_back(origin);
      std::swap(touching.front(), touching.back());
      if (affine_rank(touching, 1e-9) >= 3) c.vertices_.push_back(p);
    }
    if (c.vertices_.size() < 4) throw DegenerateShape("3D hull has fewer than 4 vertices");
  }

  c.finalize();
  return c;
}

ConvexPolytope ConvexPolytope::from_vertices_and_halfspaces(
    int dim, const std::vector<Vec>& points, const std::vector<Halfspace>& halfspaces) {
  if (dim < 2) throw InvalidParameter("dim must be >= 2");
  for (const Vec& p : points)
    if (static_cast<int>(p.size()) != dim) throw ValidationError("point dimension mismatch");
  for (const Halfspace& h : halfspaces)
    if (static_cast<int>(h.normal.size()) != dim)
      throw ValidationError("halfspace dimension mismatch");
  const double s = spread(points);
  std::vector<Vec> pts = dedupe(points, 1e-12 * s);
  if (affine_rank(pts, 1e-9 * s) < dim)
    throw DegenerateShape("input does not affinely span the space");
  ConvexPolytope c;
  c.dim_ = dim;
  c.vertices_ = pts;
  c.facets_ = halfspaces;
  c.finalize();
  return c;
}

ConvexPolytope ConvexPolytope::reflect() const {
  ConvexPolytope c;
  c.dim_ = dim_;
  for (const Vec& v : vertices_) c.vertices_.push_back(negated(v));
  for (const Halfspace& f : facets_) c.facets_.push_back({negated(f.normal), f.offset});
  c.incidence_ = incidence_;  // index relations are preserved exactly
  c.scaled_normals_.assign(scaled_normals_.size(), 0.0);
  for (std::size_t i = 0; i < scaled_normals_.size(); ++i)
    c.scaled_normals_[i] = -scaled_normals_[i];
  return c;
}

ConvexPolytope ConvexPolytope::rotate(const Matrix& op) const {
  ConvexPolytope c;
  c.dim_ = dim_;
  for (const Vec& v : vertices_) c.vertices_.push_back(op.apply(v));
  for (const Halfspace& f : facets_) c.facets_.push_back({op.apply(f.normal), f.offset});
  c.incidence_ = incidence_;
  c.scaled_normals_.assign(facets_.size() * static_cast<std::size_t>(dim_), 0.0);
  for (std::size_t i = 0; i < c.facets_.size(); ++i)
    for (int j = 0; j < dim_; ++j)
      c.scaled_normals_[i * dim_ + j] = c.facets_[i].normal[j] / c.facets_[i].offset;
  return c;
}

double ConvexPolytope::asymmetry_constant() const {
  // The ratio gauge(-u)/gauge(u) is maximized at extreme rays of the normal
  // fan, i.e. vertex directions, where gauge(u) = 1.
  double a = 1.0;
  for (const Vec& v : vertices_) a = std::max(a, gauge(negated(v)));
  return a;
}

double ConvexPolytope::bottleneck_angle() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    Vec vhat = scaled(vertices_[vi], 1.0 / norm2(vertices_[vi]));
    for (int fi : incidence_[vi]) {
      const Vec& n = facets_[fi].normal;
      double c = std::abs(dot(n, vhat)) / norm2(n);
      best = std::min(best, std::asin(std::clamp(c, 0.0, 1.0)));
    }
  }
  return best;
}

Cube ConvexPolytope::largest_enclosed_cube() const {
  // max h  s.t.  normal_i . x + h * |normal_i|_1 <= offset_i, over (x, h).
  LinearProgram lp;
  const int d = dim_;
  lp.objective.assign(d + 1, 0.0);
  lp.objective[d] = -1.0;  // minimize -h
  double s = max_vertex_norm_inf();
  lp.lower.assign(d + 1, -s);
  lp.upper.assign(d + 1, s);
  lp.lower[d] = 0.0;
  for (const Halfspace& f : facets_) {
    LinearConstraint c;
    c.a = f.normal;
    c.a.push_back(norm1(f.normal));
    c.b = f.offset;
    lp.constraints.push_back(std::move(c));
  }
  Rng rng(0x9E3779B9u);
  double neg_h = 0.0;
  auto sol = solve_lex_min(lp, rng, 1e-11, &neg_h);
  if (!sol) throw Error("enclosed-cube LP infeasible (invalid polytope)");
  Cube cube;
  cube.center.assign(sol->begin(), sol->begin() + d);
  cube.half_side = std::max(0.0, -neg_h);
  return cube;
}

Cube ConvexPolytope::smallest_enclosing_cube(const Vec& center, double scale) const {
  if (scale < 0.0) throw InvalidParameter("scale must be >= 0");
  const int d = dim_;
  Vec lo(d, std::numeric_limits<double>::infinity());
  Vec hi(d, -std::numeric_limits<double>::infinity());
  for (const Vec& v : vertices_) {
    for (int j = 0; j < d; ++j) {
      double x = center[j] + scale * v[j];
      lo[j] = std::min(lo[j], x);
      hi[j] = std::max(hi[j], x);
    }
  }
  Cube cube;
  cube.center.resize(d);
  double side = 0.0;
  for (int j = 0; j < d; ++j) {
    cube.center[j] = 0.5 * (lo[j] + hi[j]);
    side = std::max(side, hi[j] - lo[j]);
  }
  cube.half_side = 0.5 * side;
  return cube;
}

bool ConvexPolytope::is_centrally_symmetric() const {
  const double tol = 1e-9 * std::max(1.0, max_vertex_norm_inf());
  for (const Vec& v : vertices_) {
    bool found = false;
    for (const Vec& u : vertices_) {
      if (norm_inf(add(v, u)) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

double ConvexPolytope::max_vertex_norm_inf() const {
  double m = 0.0;
  for (const Vec& v : vertices_) m = std::max(m, norm_inf(v));
  return m;
}

}  // namespace mwa
