#include <doctest.h>

#include <cmath>

#include "mwa/generator.hpp"
#include "mwa/rotation.hpp"
#include "mwa/util.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mwa;
using mwa::testing::alpha_root_by_bisection;
using mwa::testing::make_instance;

TEST_CASE("scale_factor: identity at alpha=0, closed form at (pi/4, pi/12)") {
  CHECK(scale_factor(0.3, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scale_factor(M_PI / 4.0, M_PI / 12.0) ==
        doctest::Approx(std::sqrt(3.0) / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(scale_factor(M_PI / 4.0, M_PI / 12.0) - 1.224745) <= 1e-6);
  CHECK_THROWS_AS(scale_factor(0.0, 0.1), InvalidParameter);
  CHECK_THROWS_AS(scale_factor(M_PI / 2.0, 0.1), InvalidParameter);
  CHECK_THROWS_AS(scale_factor(0.3, -0.1), InvalidParameter);
}

TEST_CASE("rotating then scaling by scale_factor contains the original shape") {
  Rng rng(811);
  std::vector<ConvexPolytope> cases{shapes::square(), shapes::triangle_t(), shapes::hexagon()};
  for (int i = 0; i < 1000; ++i) {
    const ConvexPolytope& c = cases[i % cases.size()];
    double theta = c.bottleneck_angle();
    double alpha = rng.uniform(0.0, M_PI / 2.0 - theta);
    double sf = scale_factor(theta, alpha);
    Rotation r = Rotation::identity(2);
    r.angles[0] = alpha;
    ConvexPolytope grown = c.rotate(rotation_from_angles(r));
    for (const Vec& v : c.vertices()) {
      CHECK(grown.gauge(v) <= sf + 1e-9);  // v inside sf * rotated(C)
    }
  }
}

TEST_CASE("alpha_bound_exact equals the containment-equation root") {
  // Root-finder oracle for the frozen value at (pi/4, 2, 0.1).
  double frozen = alpha_root_by_bisection(M_PI / 4.0, 2.0, 0.1);
  CHECK(std::abs(frozen - 0.0342942575) <= 1e-9);
  CHECK(alpha_bound_exact(M_PI / 4.0, 2.0, 0.1) == doctest::Approx(frozen).epsilon(1e-10));

  Rng rng(812);
  for (int i = 0; i < 500; ++i) {
    double theta = rng.uniform(0.05, M_PI / 2.0 - 0.05);
    double f = rng.uniform(1.01, 30.0);
    double eps = rng.uniform(1e-3, 1.0);
    double bound = alpha_bound_exact(theta, f, eps);
    double root = alpha_root_by_bisection(theta, f, eps);
    CHECK(bound == doctest::Approx(root).epsilon(1e-7));
    CHECK(bound > 0.0);
  }
}

TEST_CASE("alpha_bound_exact dominates alpha_bound_simple on the lemma's domain") {
  // The ordering is the lemma's claim wherever its arcsin argument is in
  // range; once the argument saturates, every rotation in the triangle
  // regime is tolerable and the bound flattens at pi/2 - theta.
  Rng rng(813);
  int checked = 0;
  while (checked < 10000) {
    double theta = rng.uniform(0.02, M_PI / 2.0 - 0.02);
    double f = rng.uniform(1.0 + 1e-6, 50.0);
    double eps = rng.uniform(1e-6, 1.0);
    double root = std::sqrt((1.0 + eps) * (1.0 + eps) + 4.0 * f * (f - 1.0));
    double arg = std::sin(theta) / (2.0 * f) * (1.0 + eps + root);
    if (arg > 1.0) {
      CHECK(alpha_bound_exact(theta, f, eps) ==
            doctest::Approx(M_PI / 2.0 - theta).epsilon(1e-12));
      continue;
    }
    CHECK(alpha_bound_exact(theta, f, eps) >= alpha_bound_simple(theta, f, eps) - 1e-12);
    ++checked;
  }
  CHECK(std::abs(alpha_bound_simple(M_PI / 4.0, 2.0, 0.1) - M_PI / 160.0) <= 1e-12);
  CHECK(alpha_bound_simple(0.5, 2.0, 0.0) == 0.0);
  CHECK(alpha_bound_simple(0.5, 1.5, 0.2) ==
        doctest::Approx(2.0 * alpha_bound_simple(0.5, 3.0, 0.2)).epsilon(1e-12));
}

TEST_CASE("alpha_bound_exact shrinks to zero with eps") {
  CHECK(alpha_bound_exact(M_PI / 4.0, 2.0, 1e-6) <= 1e-4);
  CHECK(alpha_bound_exact(M_PI / 4.0, 2.0, 1e-6) > 0.0);
}

TEST_CASE("rotation_from_angles: planar rotation, identity, Givens composition") {
  Rotation r = Rotation::identity(2);
  r.angles[0] = M_PI / 2.0;
  Matrix m = rotation_from_angles(r);
  Vec e1{1, 0};
  Vec out = m.apply(e1);
  CHECK(out[0] == doctest::Approx(0.0));
  CHECK(out[1] == doctest::Approx(1.0));

  Rotation id = Rotation::identity(3);
  Matrix mi = rotation_from_angles(id);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(mi(i, j) == (i == j ? 1.0 : 0.0));

  // d=3, angles (pi/2, pi/2): explicit product of the two Givens factors.
  Rotation r3 = Rotation::identity(3);
  r3.angles = {M_PI / 2.0, M_PI / 2.0};
  Matrix got = rotation_from_angles(r3);
  Matrix g01 = Matrix::identity(3), g12 = Matrix::identity(3);
  g01(0, 0) = 0;
  g01(0, 1) = -1;
  g01(1, 0) = 1;
  g01(1, 1) = 0;
  g12(1, 1) = 0;
  g12(1, 2) = -1;
  g12(2, 1) = 1;
  g12(2, 2) = 0;
  Matrix expect = g12.multiply(g01);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(got(i, j) == doctest::Approx(expect(i, j)).epsilon(1e-12));
}

TEST_CASE("rotation operators are orthogonal") {
  Rng rng(814);
  for (int trial = 0; trial < 1000; ++trial) {
    int d = 2 + static_cast<int>(rng.below(3));
    Rotation r = Rotation::identity(d);
    for (double& a : r.angles) a = rng.uniform(0.0, 2.0 * M_PI);
    Matrix m = rotation_from_angles(r);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double dotv = 0.0;
        for (int k = 0; k < d; ++k) dotv += m(k, i) * m(k, j);
        CHECK(std::abs(dotv - (i == j ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("rotation grid sizing: k = 160 (2D) and 227 (3D)") {
  RotationGrid g2 = build_rotation_grid(2, M_PI / 4.0, 2.0, 0.1);
  CHECK(g2.per_axis_count == 160);
  CHECK(g2.count() == 160);
  RotationGrid g3 = build_rotation_grid(3, M_PI / 4.0, 2.0, 0.1, 100000);
  CHECK(g3.per_axis_count == 227);
  CHECK(g3.count() == 227ull * 227ull);
  CHECK(g2.step * std::sqrt(1.0) < g2.theta * 0.1 / g2.f_hat + 1e-12);
  CHECK(g3.step * std::sqrt(2.0) < g3.theta * 0.1 / g3.f_hat + 1e-12);

  CHECK_THROWS_AS(build_rotation_grid(3, M_PI / 4.0, 2.0, 0.1, 1000), GridTooLarge);
  try {
    build_rotation_grid(3, M_PI / 4.0, 2.0, 0.1, 1000);
  } catch (const GridTooLarge& e) {
    CHECK(e.required_cap >= 227ull * 227ull);
  }
  CHECK_THROWS_AS(build_rotation_grid(2, 0.0, 2.0, 0.1), InvalidParameter);
  CHECK_THROWS_AS(build_rotation_grid(2, M_PI / 4.0, 1.0, 0.1), InvalidParameter);
  CHECK_THROWS_AS(build_rotation_grid(2, M_PI / 4.0, 2.0, 0.0), InvalidParameter);
}

TEST_CASE("rotation grid contains the zero tuple") {
  RotationGrid g = build_rotation_grid(2, M_PI / 4.0, 2.0, 0.5);
  Rotation first = g.rotation_of(0);
  CHECK(first.is_identity());
}

TEST_CASE("mwa_rigid recovers a rotated band instance within (1+eps)") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GeneratedInstance inst = make_instance(
        shapes::square(), seed,
        {.target_points = 90, .band_lo = 0.05, .band_hi = 0.12, .random_rotation = true});
    SolverConfig cfg;
    cfg.epsilon = 0.25;
    cfg.seed = seed;
    AnnulusSolution sol = mwa_rigid(shapes::square(), inst.cloud, cfg);
    CHECK(sol.width <= (1.0 + cfg.epsilon) * inst.truth.width + 1e-9);
    CHECK(sol.mode == "rigid");
    CHECK(sol.orientations > 0);

    AnnulusSolution trans = mwa_translation(shapes::square(), inst.cloud, cfg);
    CHECK(sol.width <= trans.width + 1e-9);
  }
}

TEST_CASE("mwa_rotation_only agrees with a dense angle scan") {
  for (std::uint64_t seed = 11; seed <= 13; ++seed) {
    GeneratedInstance inst = make_instance(
        shapes::triangle_t(), seed,
        {.target_points = 60, .band_lo = 0.08, .band_hi = 0.15, .random_rotation = true});
    Vec center = inst.truth.center;
    SolverConfig cfg;
    cfg.epsilon = 0.25;
    cfg.seed = seed;
    AnnulusSolution sol = mwa_rotation_only(shapes::triangle_t(), inst.cloud, center, cfg);
    // The dense scan's best width is achievable, so it upper-bounds the
    // rotation-only optimum; the solver's grid may be finer still.
    double dense = mwa::testing::dense_angle_scan(shapes::triangle_t(), inst.cloud, center, 720);
    CHECK(sol.width <= (1.0 + cfg.epsilon) * dense + 1e-9);
    CHECK(sol.mode == "rotation-only");
  }
}

TEST_CASE("identity-pose zero-width instance solves to zero width at a fixed center") {
  GeneratorSpec spec;
  spec.shape = shapes::hexagon();
  spec.pose.translation = {0.8, -0.3};
  spec.pose.rotation = Rotation::identity(2);
  spec.pose.scale = 2.0;
  spec.delta = 0.05;
  spec.band = 0.0;
  GeneratedInstance inst = sample_boundary(spec);
  SolverConfig cfg;
  cfg.epsilon = 0.5;
  AnnulusSolution sol =
      mwa_rotation_only(shapes::hexagon(), inst.cloud, spec.pose.translation, cfg);
  CHECK(sol.width <= 1e-9 * spec.pose.scale);
}

TEST_CASE("rigid search is within (1+eps) of any fixed-center result") {
  // The rigid optimum lower-bounds every fixed-center optimum, but both
  // solvers carry (1+eps) grid slack, so the comparison holds with that
  // factor rather than exactly.
  GeneratedInstance inst = make_instance(
      shapes::square(), 21,
      {.target_points = 80, .band_lo = 0.08, .band_hi = 0.15, .random_rotation = true});
  SolverConfig cfg;
  cfg.epsilon = 0.5;
  cfg.seed = 21;
  AnnulusSolution rigid = mwa_rigid(shapes::square(), inst.cloud, cfg);
  AnnulusSolution fixed =
      mwa_rotation_only(shapes::square(), inst.cloud, inst.truth.center, cfg);
  CHECK(rigid.width <= (1.0 + cfg.epsilon) * fixed.width + 1e-9);
}

TEST_CASE("zero-width rotated instance diverges the slimness loop") {
  // The orientation lattice cannot hit an arbitrary pose angle exactly, so a
  // zero-width instance's achieved slimness keeps outrunning the doubled
  // estimate. The honest outcome is SlimnessDiverged carrying the best width.
  GeneratorSpec spec;
  spec.shape = shapes::square();
  spec.pose.translation = {0.4, 0.1};
  spec.pose.rotation = Rotation::identity(2);
  spec.pose.rotation.angles[0] = 0.437;  // far from any lattice angle
  spec.pose.scale = 1.5;
  spec.delta = 0.04;
  spec.band = 0.0;
  GeneratedInstance inst = sample_boundary(spec);
  SolverConfig cfg;
  cfg.epsilon = 0.5;
  cfg.slimness_retries = 3;
  cfg.rotation_eval_cap = 400'000'000;
  try {
    AnnulusSolution sol = mwa_rigid(shapes::square(), inst.cloud, cfg);
    // Acceptable alternative: the loop terminated because the width fell
    // under the zero tolerance.
    CHECK(sol.width <= cfg.tolerance * std::max(1.0, sol.outer_radius));
  } catch (const SlimnessDiverged& e) {
    CHECK(e.best_width < 0.2 * spec.pose.scale);  // orientation grid still helped
  }
}

TEST_CASE("determinism: same seed gives identical solutions") {
  GeneratedInstance inst = make_instance(
      shapes::triangle_t(), 31,
      {.target_points = 70, .band_lo = 0.1, .band_hi = 0.2, .random_rotation = true});
  SolverConfig cfg;
  cfg.epsilon = 0.5;
  cfg.seed = 9;
  AnnulusSolution a = mwa_rigid(shapes::triangle_t(), inst.cloud, cfg);
  AnnulusSolution b = mwa_rigid(shapes::triangle_t(), inst.cloud, cfg);
  CHECK(a.width == b.width);
  CHECK(a.center == b.center);
  CHECK(a.rotation.angles == b.rotation.angles);
  CHECK(a.evaluations == b.evaluations);
}
