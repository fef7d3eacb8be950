#include <doctest.h>

#include <cmath>
#include <limits>

#include "mwa/annulus.hpp"
#include "mwa/generator.hpp"
#include "mwa/util.hpp"

using namespace mwa;

namespace {

PointCloud cloud(const std::vector<Vec>& pts) {
  return PointCloud::from_points(static_cast<int>(pts[0].size()), pts);
}

}  // namespace

TEST_CASE("annulus_at on the square gauge") {
  ConvexPolytope sq = shapes::square();
  AnnulusSolution sol = annulus_at(sq, cloud({{1, 0}, {0, 3}, {-2, 2}}), {0, 0});
  CHECK(sol.inner_radius == doctest::Approx(1.0));
  CHECK(sol.outer_radius == doctest::Approx(3.0));
  CHECK(sol.width == doctest::Approx(2.0));
}

TEST_CASE("annulus_at single point and triangle values") {
  ConvexPolytope t = shapes::triangle_t();
  AnnulusSolution one = annulus_at(t, cloud({{0.4, 0.7}}), {0.1, -0.2});
  CHECK(one.inner_radius == doctest::Approx(one.outer_radius));
  CHECK(one.width == 0.0);
  CHECK(one.inner_radius == doctest::Approx(t.distance({0.1, -0.2}, {0.4, 0.7})));

  AnnulusSolution two = annulus_at(t, cloud({{1, 1}, {-2, -2}}), {0, 0});
  CHECK(two.inner_radius == doctest::Approx(1.0));
  CHECK(two.outer_radius == doctest::Approx(6.0));
  CHECK(two.width == doctest::Approx(5.0));
}

TEST_CASE("annulus_at rejects empty clouds and mismatched dims") {
  ConvexPolytope sq = shapes::square();
  CHECK_THROWS_AS(annulus_at(sq, PointCloud(), {0, 0}), EmptyCloud);
  CHECK_THROWS_AS(annulus_at(sq, cloud({{1, 2, 3}}), {0, 0}), ValidationError);
}

TEST_CASE("annulus_at equals a brute-force two-pass min/max exactly") {
  ConvexPolytope hex = shapes::hexagon();
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> pts;
    for (int i = 0; i < 50; ++i) pts.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
    Vec c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    AnnulusSolution sol = annulus_at(hex, cloud(pts), c);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Vec& p : pts) {
      lo = std::min(lo, hex.distance(c, p));
      hi = std::max(hi, hex.distance(c, p));
    }
    CHECK(sol.inner_radius == lo);
    CHECK(sol.outer_radius == hi);
    // All points sit inside the closed annulus shell.
    for (const Vec& p : pts) {
      double d = hex.distance(c, p);
      CHECK(d >= sol.inner_radius - 1e-12);
      CHECK(d <= sol.outer_radius + 1e-12);
    }
  }
}

TEST_CASE("threaded evaluation matches single-threaded bit for bit") {
  ConvexPolytope t = shapes::triangle_t();
  Rng rng(55);
  std::vector<Vec> pts;
  for (int i = 0; i < 1003; ++i) pts.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
  PointCloud s = cloud(pts);
  AnnulusSolution a = annulus_at(t, s, {0.3, 0.2}, 1);
  AnnulusSolution b = annulus_at(t, s, {0.3, 0.2}, 4);
  CHECK(a.inner_radius == b.inner_radius);
  CHECK(a.outer_radius == b.outer_radius);
}

TEST_CASE("subset monotonicity of the annulus radii") {
  ConvexPolytope sq = shapes::square();
  Rng rng(13);
  std::vector<Vec> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
  std::vector<Vec> subset(pts.begin(), pts.begin() + 25);
  Vec c{0.4, -0.1};
  AnnulusSolution full = annulus_at(sq, cloud(pts), c);
  AnnulusSolution part = annulus_at(sq, cloud(subset), c);
  CHECK(part.inner_radius >= full.inner_radius);
  CHECK(part.outer_radius <= full.outer_radius);
}

TEST_CASE("t-closeness transfer: width(c1) <= width(c2) + 2t") {
  Rng rng(77);
  for (const ConvexPolytope& shape :
       {shapes::square(), shapes::triangle_t(), shapes::hexagon()}) {
    std::vector<Vec> pts;
    for (int i = 0; i < 80; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    PointCloud s = cloud(pts);
    for (int trial = 0; trial < 100; ++trial) {
      Vec c1{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      Vec c2{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      double t = std::max(shape.distance(c1, c2), shape.distance(c2, c1));
      double w1 = annulus_at(shape, s, c1).width;
      double w2 = annulus_at(shape, s, c2).width;
      CHECK(w1 <= w2 + 2.0 * t + 1e-9);
      CHECK(w2 <= w1 + 2.0 * t + 1e-9);
    }
  }
}

TEST_CASE("fatness stats and the slimness identity") {
  ConvexPolytope sq = shapes::square();
  AnnulusSolution sol;
  sol.inner_radius = 1.0;
  sol.outer_radius = 2.0;
  sol.width = 1.0;
  FatnessStats f = fatness_stats(sq, cloud({{1, 0}}), sol);
  CHECK(f.concentric_fatness == doctest::Approx(2.0));
  CHECK(f.slimness == doctest::Approx(2.0));
  CHECK(1.0 / f.slimness == doctest::Approx(1.0 - 1.0 / f.concentric_fatness).epsilon(1e-12));

  sol.inner_radius = 9.0;
  sol.outer_radius = 10.0;
  sol.width = 1.0;
  f = fatness_stats(sq, cloud({{1, 0}}), sol);
  CHECK(f.concentric_fatness == doctest::Approx(10.0 / 9.0));
  CHECK(f.slimness == doctest::Approx(10.0));
  CHECK(1.0 / f.slimness == doctest::Approx(1.0 - 1.0 / f.concentric_fatness).epsilon(1e-12));

  sol.inner_radius = 0.0;
  sol.outer_radius = 1.0;
  sol.width = 1.0;
  CHECK_THROWS_AS(fatness_stats(sq, cloud({{1, 0}}), sol), DegenerateAnnulus);
  sol.inner_radius = 1.0;
  sol.outer_radius = 1.0;
  sol.width = 0.0;
  CHECK_THROWS_AS(fatness_stats(sq, cloud({{1, 0}}), sol), DegenerateAnnulus);
}

TEST_CASE("point cloud validation") {
  CHECK_THROWS_AS(PointCloud(2, {1.0, std::numeric_limits<double>::infinity()}),
                  ValidationError);
  CHECK_THROWS_AS(PointCloud(2, {1.0, 2.0, 3.0}), ValidationError);
  PointCloud p(2, {1.0, 2.0, 3.0, 4.0});
  CHECK(p.size() == 2);
  CHECK(p.point(1)[0] == 3.0);
}
