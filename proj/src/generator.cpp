#include "mwa/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mwa/rotation.hpp"
#include "mwa/util.hpp"

namespace mwa {
namespace {

// Greatest pairwise vertex distance of a facet, in model units.
double facet_extent(const ConvexPolytope& c, int facet) {
  std::vector<const Vec*> vs;
  for (std::size_t vi = 0; vi < c.vertices().size(); ++vi)
    for (int fi : c.incidence()[vi])
      if (fi == facet) vs.push_back(&c.vertices()[vi]);
  double ext = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      ext = std::max(ext, norm2(sub(*vs[i], *vs[j])));
  return ext;
}

// Facet vertices ordered around the facet polygon (3D).
std::vector<Vec> facet_polygon(const ConvexPolytope& c, int facet) {
  std::vector<Vec> vs;
  for (std::size_t vi = 0; vi < c.vertices().size(); ++vi)
    for (int fi : c.incidence()[vi])
      if (fi == facet) vs.push_back(c.vertices()[vi]);
  Vec centroid(3, 0.0);
  for (const Vec& v : vs) centroid = add(centroid, v);
  centroid = scaled(centroid, 1.0 / static_cast<double>(vs.size()));

  const Vec& n = c.facets()[facet].normal;
  // Orthonormal plane basis.
  Vec e1 = std::abs(n[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  e1 = sub(e1, scaled(n, dot(e1, n) / dot(n, n)));
  e1 = scaled(e1, 1.0 / norm2(e1));
  Vec e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]};
  e2 = scaled(e2, 1.0 / norm2(e2));

  std::sort(vs.begin(), vs.end(), [&](const Vec& a, const Vec& b) {
    Vec da = sub(a, centroid), db = sub(b, centroid);
    return std::atan2(dot(da, e2), dot(da, e1)) < std::atan2(dot(db, e2), dot(db, e1));
  });
  return vs;
}

void sample_segment(const Vec& a, const Vec& b, double delta, std::vector<Vec>& out) {
  double len = norm2(sub(b, a));
  std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / delta)));
  for (std::size_t t = 0; t <= steps; ++t) {
    double f = static_cast<double>(t) / static_cast<double>(steps);
    out.push_back(add(scaled(a, 1.0 - f), scaled(b, f)));
  }
}

// Model-space samples of one facet, spaced so every facet point has a sample
// within Euclidean delta.
std::vector<Vec> sample_facet(const ConvexPolytope& c, int facet, double delta) {
  std::vector<Vec> out;
  if (c.dim() == 2) {
    std::vector<const Vec*> vs;
    for (std::size_t vi = 0; vi < c.vertices().size(); ++vi)
      for (int fi : c.incidence()[vi])
        if (fi == facet) vs.push_back(&c.vertices()[vi]);
    if (vs.size() != 2) throw DegenerateShape("2D facet must touch exactly two vertices");
    sample_segment(*vs[0], *vs[1], delta, out);
    return out;
  }

  std::vector<Vec> poly = facet_polygon(c, facet);
  const double h = delta / 1.25;  // lattice pitch; covering radius stays < delta
  for (std::size_t i = 0; i < poly.size(); ++i)
    sample_segment(poly[i], poly[(i + 1) % poly.size()], h, out);

  const Vec& n = c.facets()[facet].normal;
  Vec e1 = std::abs(n[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  e1 = sub(e1, scaled(n, dot(e1, n) / dot(n, n)));
  e1 = scaled(e1, 1.0 / norm2(e1));
  Vec e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]};
  e2 = scaled(e2, 1.0 / norm2(e2));

  std::vector<std::pair<double, double>> poly2;
  for (const Vec& v : poly) poly2.emplace_back(dot(v, e1), dot(v, e2));
  double lo1 = poly2[0].first, hi1 = lo1, lo2 = poly2[0].second, hi2 = lo2;
  for (auto [x, y] : poly2) {
    lo1 = std::min(lo1, x);
    hi1 = std::max(hi1, x);
    lo2 = std::min(lo2, y);
    hi2 = std::max(hi2, y);
  }
  auto inside = [&](double x, double y) {
    const std::size_t m = poly2.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto [ax, ay] = poly2[i];
      auto [bx, by] = poly2[(i + 1) % m];
      if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) < -1e-12) return false;
    }
    return true;
  };
  const Vec& anchor = poly[0];
  double a1 = dot(anchor, e1), a2 = dot(anchor, e2);
  for (double x = lo1; x <= hi1 + 1e-12; x += h) {
    for (double y = lo2; y <= hi2 + 1e-12; y += h) {
      if (!inside(x, y)) continue;
      out.push_back(add(anchor, add(scaled(e1, x - a1), scaled(e2, y - a2))));
    }
  }
  return out;
}

}  // namespace

double delta_for_target_count(const ConvexPolytope& shape, std::size_t target) {
  if (target < 1) throw InvalidParameter("target count must be >= 1");
  if (shape.dim() == 2) {
    double perimeter = 0.0;
    const auto& vs = shape.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      perimeter += norm2(sub(vs[(i + 1) % vs.size()], vs[i]));
    return perimeter / static_cast<double>(target);
  }
  // Surface area from the facet polygons.
  double area = 0.0;
  for (std::size_t f = 0; f < shape.facet_count(); ++f) {
    std::vector<Vec> poly = facet_polygon(shape, static_cast<int>(f));
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
      Vec u = sub(poly[i], poly[0]), w = sub(poly[i + 1], poly[0]);
      Vec cr{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
      area += 0.5 * norm2(cr);
    }
  }
  return std::sqrt(area / static_cast<double>(target)) * 1.25;
}

GeneratedInstance sample_boundary(const GeneratorSpec& spec) {
  if (!(spec.delta > 0.0)) throw InvalidParameter("delta must be > 0");
  if (!(spec.band >= 0.0 && spec.band < 1.0)) throw InvalidParameter("band must be in [0, 1)");
  if (!(spec.pose.scale > 0.0)) throw InvalidParameter("pose scale must be > 0");
  const ConvexPolytope& c = spec.shape;
  const int d = c.dim();
  if (d > 3) throw DimensionTooHigh("boundary sampler supports d <= 3");
  if (static_cast<int>(spec.pose.translation.size()) != d)
    throw InvalidParameter("pose translation dimension mismatch");

  for (std::size_t f = 0; f < c.facet_count(); ++f) {
    double ext = facet_extent(c, static_cast<int>(f));
    if (spec.delta > ext)
      throw FacetUnsampled("delta " + std::to_string(spec.delta) +
                           " exceeds the smallest facet extent " + std::to_string(ext));
  }

  Matrix rot = rotation_from_angles(spec.pose.rotation.angles.empty()
                                        ? Rotation::identity(d)
                                        : spec.pose.rotation);

  Rng rng(spec.seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);
  GeneratedInstance inst;
  inst.truth.center = spec.pose.translation;
  inst.truth.rotation =
      spec.pose.rotation.angles.empty() ? Rotation::identity(d) : spec.pose.rotation;
  inst.truth.scale = spec.pose.scale;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  std::vector<double> flat;
  for (std::size_t f = 0; f < c.facet_count(); ++f) {
    std::vector<Vec> samples = sample_facet(c, static_cast<int>(f), spec.delta);
    inst.samples_per_facet.push_back(samples.size());
    for (const Vec& x : samples) {
      double u = 1.0 - spec.band + 2.0 * spec.band * rng.next_double();
      double gauge = u * c.gauge(x);  // gauge(x) == 1 up to rounding
      lo = std::min(lo, spec.pose.scale * gauge);
      hi = std::max(hi, spec.pose.scale * gauge);
      Vec world = rot.apply(scaled(x, u * spec.pose.scale));
      for (int j = 0; j < d; ++j) flat.push_back(spec.pose.translation[j] + world[j]);
    }
  }
  inst.cloud = PointCloud(d, std::move(flat));
  inst.truth.inner_radius = lo;
  inst.truth.outer_radius = hi;
  inst.truth.width = hi - lo;
  return inst;
}

namespace shapes {

ConvexPolytope square() {
  return ConvexPolytope::from_vertices(2, {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

ConvexPolytope triangle_t() {
  return ConvexPolytope::from_vertices(2, {{1, 1}, {-1, 1}, {0, -1}});
}

ConvexPolytope hexagon() {
  std::vector<Vec> vs;
  for (int k = 0; k < 6; ++k) {
    double a = std::numbers::pi / 3.0 * k;
    vs.push_back({std::cos(a), std::sin(a)});
  }
  return ConvexPolytope::from_vertices(2, vs);
}

ConvexPolytope cube() {
  std::vector<Vec> vs;
  for (int i = 0; i < 8; ++i)
    vs.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
  return ConvexPolytope::from_vertices(3, vs);
}

ConvexPolytope tetrahedron() {
  return ConvexPolytope::from_vertices(
      3, {{1.15, 1.0, 0.95}, {1.0, -1.1, -1.0}, {-1.05, 1.0, -1.08}, {-0.95, -1.0, 1.1}});
}

}  // namespace shapes

}  // namespace mwa
