#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mwa/generator.hpp"
#include "mwa/planar.hpp"
#include "mwa/util.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mwa;
using mwa::testing::make_instance;

namespace {

PointCloud cloud(const std::vector<Vec>& pts) {
  return PointCloud::from_points(static_cast<int>(pts[0].size()), pts);
}

TranslationGrid unit_grid(Vec origin, double spacing, int k) {
  TranslationGrid g;
  g.dim = 2;
  g.origin = std::move(origin);
  g.spacing = spacing;
  g.points_per_axis = k;
  g.w = 1.0;
  g.b = 2.0;
  g.f_cube = 1.0;
  return g;
}

// Widths agree within 1e-9 relative to the annulus magnitudes involved.
void check_width_arrays(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double tol = 1e-9 * std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    CHECK(std::abs(a[i] - b[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("projection index on the 3x3 integer grid, diagonal direction") {
  TranslationGrid g = unit_grid({0, 0}, 1.0, 3);
  LineProjectionIndex idx = build_line_projection_index({1, 1}, g);
  // Distinct projections with multiplicities 1,2,3,2,1.
  std::vector<std::size_t> runs;
  for (std::size_t i = 0; i < idx.sorted_offsets.size();) {
    std::size_t j = i + 1;
    while (j < idx.sorted_offsets.size() &&
           idx.sorted_offsets[j] == doctest::Approx(idx.sorted_offsets[i]).epsilon(1e-12))
      ++j;
    runs.push_back(j - i);
    i = j;
  }
  CHECK(runs == std::vector<std::size_t>{1, 2, 3, 2, 1});
  double step = std::abs(idx.sorted_offsets[8] - idx.sorted_offsets[0]);
  CHECK(step == doctest::Approx(4.0 / std::sqrt(2.0)));
}

TEST_CASE("projection index matches a comparison sort exactly") {
  Rng rng(600);
  std::vector<Vec> dirs{{1, 1}, {1, 0}, {0, 1}, {2, -1}, {-1, 1}, {0.3, 0.7}, {-0.5, -0.25}};
  for (int trial = 0; trial < 12; ++trial) {
    TranslationGrid g = unit_grid({rng.uniform(-2, 2), rng.uniform(-2, 2)},
                                  rng.uniform(0.05, 1.5), 2 + static_cast<int>(rng.below(14)));
    for (const Vec& v : dirs) {
      LineProjectionIndex idx = build_line_projection_index(v, g);
      auto oracle = mwa::testing::sorted_projections(g, v);
      REQUIRE(idx.sorted_offsets.size() == oracle.size());
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(idx.sorted_offsets[i] == oracle[i].first);
        CHECK(idx.flat_of_rank[i] == oracle[i].second);
      }
    }
  }
}

TEST_CASE("locate_slab agrees with a linear scan, including exact line hits") {
  Rng rng(601);
  TranslationGrid g = unit_grid({0, 0}, 1.0, 3);
  for (const Vec& v : std::vector<Vec>{{1, 1}, {1, 0}, {2, -1}}) {
    LineProjectionIndex idx = build_line_projection_index(v, g);
    // The spec's sample query.
    if (v[0] == 1 && v[1] == 1) {
      double p[2] = {2.3, 0.4};
      CHECK(locate_slab(idx, p) ==
            mwa::testing::linear_scan_slab(idx.sorted_offsets, idx.project(p)));
    }
    for (int i = 0; i < 10000; ++i) {
      double p[2] = {rng.uniform(-4, 4), rng.uniform(-4, 4)};
      CHECK(locate_slab(idx, p) ==
            mwa::testing::linear_scan_slab(idx.sorted_offsets, idx.project(p)));
    }
    // Points exactly on gridlines: slab index sits past the whole tie run.
    for (std::uint64_t f = 0; f < g.point_count(); ++f) {
      Vec gp = g.point_vec(f);
      std::uint32_t r = locate_slab(idx, gp);
      std::uint32_t rank = idx.rank_of_flat[f];
      CHECK(r == idx.dup_end[rank] + 1);
    }
    // Far outside: clamps to 0 and k^2.
    double lo[2] = {-1e9 * idx.perp[0], -1e9 * idx.perp[1]};
    double hi[2] = {1e9 * idx.perp[0], 1e9 * idx.perp[1]};
    CHECK(locate_slab(idx, lo) == 0);
    CHECK(locate_slab(idx, hi) == g.point_count());
  }
}

TEST_CASE("adversarial shadowing fixture: dominance keeps the true contributor") {
  ConvexPolytope sq = shapes::square();
  TranslationGrid g = unit_grid({-1, -1}, 1.0, 3);
  PointCloud s = cloud({{2, 0}, {1.5, 10}, {1.5, -10}});
  auto tables = build_facet_tables(sq, s, g);

  // Right facet: normal (1, 0), endpoints (1,-1) -> (1,1).
  int right = -1;
  for (std::size_t e = 0; e < sq.facets().size(); ++e)
    if (sq.facets()[e].normal[0] > 0.5) right = static_cast<int>(e);
  REQUIRE(right >= 0);
  const FacetSweepTable& tab = tables[right];
  CHECK(cross2(sq.vertices()[tab.v1], sq.vertices()[tab.v2]) > 0.0);

  // Gridpoint (0,0) has flat index 1*3+1 = 4 (origin (-1,-1), spacing 1).
  std::uint64_t center_flat = 4;
  CHECK(tab.contributor_min[center_flat] == doctest::Approx(2.0));
  // The shadowing points belong to the top/bottom cones, not the right one.
  CHECK(tab.global_max == doctest::Approx(2.0));

  // Full cross-check against direct classification at every gridpoint.
  for (const FacetSweepTable& t : tables) {
    const Vec& v1 = sq.vertices()[t.v1];
    const Vec& v2 = sq.vertices()[t.v2];
    for (std::uint64_t f = 0; f < g.point_count(); ++f) {
      double direct =
          mwa::testing::direct_contributor_min(sq, s, t.facet, v1, v2, g.point_vec(f));
      if (std::isinf(direct)) {
        CHECK(t.contributor_min[f] == FacetSweepTable::kNone);
      } else {
        CHECK(t.contributor_min[f] == doctest::Approx(direct).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("facet tables match direct classification on random instances") {
  // Continuous random points land strictly inside cones with probability 1,
  // so the comparison here is exact.
  Rng rng(602);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolytope shape = (trial % 2 == 0) ? shapes::triangle_t() : shapes::hexagon();
    TranslationGrid g = unit_grid({rng.uniform(-2, 0), rng.uniform(-2, 0)},
                                  rng.uniform(0.2, 0.8), 3 + static_cast<int>(rng.below(4)));
    std::vector<Vec> pts;
    int n = 5 + static_cast<int>(rng.below(40));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
    PointCloud s = cloud(pts);
    auto tables = build_facet_tables(shape, s, g);
    for (const FacetSweepTable& t : tables) {
      const Vec& v1 = shape.vertices()[t.v1];
      const Vec& v2 = shape.vertices()[t.v2];
      for (std::uint64_t f = 0; f < g.point_count(); ++f) {
        double direct =
            mwa::testing::direct_contributor_min(shape, s, t.facet, v1, v2, g.point_vec(f));
        if (std::isinf(direct)) {
          CHECK(t.contributor_min[f] == FacetSweepTable::kNone);
        } else {
          CHECK(t.contributor_min[f] == doctest::Approx(direct).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("boundary-tie points: table minima sit between the two cone conventions") {
  // Points planted on cone boundaries are knife-edge cases; the rank-space
  // sweep may classify them to either adjacent facet (the gauge value is the
  // same either way). The per-facet minimum must land between the strict
  // (open cone) and generous (closed cone widened by an fp band) answers.
  Rng rng(604);
  for (int trial = 0; trial < 8; ++trial) {
    ConvexPolytope shape = (trial % 2 == 0) ? shapes::square() : shapes::triangle_t();
    TranslationGrid g = unit_grid({rng.uniform(-2, 0), rng.uniform(-2, 0)},
                                  rng.uniform(0.25, 0.75), 3 + static_cast<int>(rng.below(3)));
    std::vector<Vec> pts;
    for (int i = 0; i < 10; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    for (int i = 0; i < 8; ++i) {
      std::uint64_t f = rng.below(g.point_count());
      Vec base = g.point_vec(f);
      const Vec& dir = shape.vertices()[rng.below(shape.vertices().size())];
      double t = rng.uniform(0.1, 2.0);
      pts.push_back({base[0] + t * dir[0], base[1] + t * dir[1]});
    }
    PointCloud s = cloud(pts);
    auto tables = build_facet_tables(shape, s, g);
    const double band = 1e-9;
    for (const FacetSweepTable& t : tables) {
      const Vec& v1 = shape.vertices()[t.v1];
      const Vec& v2 = shape.vertices()[t.v2];
      for (std::uint64_t f = 0; f < g.point_count(); ++f) {
        double generous = mwa::testing::direct_contributor_min(shape, s, t.facet, v1, v2,
                                                               g.point_vec(f), band);
        double strict = mwa::testing::direct_contributor_min(shape, s, t.facet, v1, v2,
                                                             g.point_vec(f), -band);
        CHECK(t.contributor_min[f] >= generous - 1e-9);
        CHECK(t.contributor_min[f] <= strict + 1e-9);
      }
    }
    // The end-to-end widths are convention-independent.
    check_width_arrays(evaluate_grid_widths(shape, s, g), fast_sweep_widths(shape, s, g));
  }
}

TEST_CASE("outer radius decomposes over per-facet maxima exactly") {
  Rng rng(603);
  ConvexPolytope hex = shapes::hexagon();
  std::vector<Vec> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
  PointCloud s = cloud(pts);
  for (int trial = 0; trial < 50; ++trial) {
    Vec g{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    double direct = 0.0;
    for (const Vec& p : pts) direct = std::max(direct, hex.distance(g, p));
    double per_facet = -1e300;
    for (std::size_t e = 0; e < hex.facet_count(); ++e) {
      const double* ns = hex.scaled_normals().data() + e * 2;
      double m = -1e300;
      for (const Vec& p : pts) m = std::max(m, ns[0] * (p[0] - g[0]) + ns[1] * (p[1] - g[1]));
      per_facet = std::max(per_facet, m);
    }
    CHECK(direct == doctest::Approx(per_facet).epsilon(1e-12));
  }
}

TEST_CASE("sweep widths equal direct widths and the best index matches") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    ConvexPolytope shape = seed % 3 == 0   ? shapes::triangle_t()
                           : seed % 3 == 1 ? shapes::square()
                                           : shapes::hexagon();
    GeneratedInstance inst =
        make_instance(shape, seed, {.target_points = 40 + 15 * (seed % 7)});
    Placement mb = minball(shape, inst.cloud, seed);
    AnnulusSolution base = annulus_at(shape, inst.cloud, mb.center);
    TranslationGrid grid = build_translation_grid(shape, mb.center, base.width, 0.4, 2.0);

    std::vector<double> direct = evaluate_grid_widths(shape, inst.cloud, grid);
    std::vector<double> swept = fast_sweep_widths(shape, inst.cloud, grid);
    check_width_arrays(direct, swept);

    AnnulusSolution a = evaluate_grid(shape, inst.cloud, grid);
    AnnulusSolution b = fast_mwa_sweep(shape, inst.cloud, grid);
    CHECK(a.center == b.center);  // identical best gridpoint
    CHECK(a.width == b.width);
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("single-point cloud: zero width everywhere, first gridpoint returned") {
  ConvexPolytope sq = shapes::square();
  TranslationGrid g = unit_grid({-0.5, -0.5}, 0.25, 5);
  PointCloud s = cloud({{0.1, 0.2}});
  std::vector<double> widths = fast_sweep_widths(sq, s, g);
  for (double w : widths) CHECK(std::abs(w) <= 1e-12);
  AnnulusSolution a = evaluate_grid(sq, s, g);
  AnnulusSolution b = fast_mwa_sweep(sq, s, g);
  CHECK(a.center == b.center);
  CHECK(b.center[0] == doctest::Approx(-0.5));
  CHECK(b.center[1] == doctest::Approx(-0.5));
}

TEST_CASE("planar machinery rejects non-2D inputs") {
  TranslationGrid g3;
  g3.dim = 3;
  g3.origin = {0, 0, 0};
  g3.spacing = 1.0;
  g3.points_per_axis = 3;
  CHECK_THROWS_AS(build_line_projection_index({1, 1}, g3), NotPlanar);
  ConvexPolytope cu = shapes::cube();
  PointCloud s3 = cloud({{0.5, 0.5, 0.5}});
  CHECK_THROWS_AS(build_facet_tables(cu, s3, g3), NotPlanar);
}
