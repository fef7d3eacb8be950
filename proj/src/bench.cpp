#include "mwa/bench.hpp"

#include <chrono>
#include <sstream>

#include "mwa/generator.hpp"
#include "mwa/io.hpp"
#include "mwa/rotation.hpp"
#include "mwa/translation.hpp"

namespace mwa {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
std::pair<double, AnnulusSolution> timed(Fn&& fn) {
  auto t0 = Clock::now();
  AnnulusSolution sol = fn();
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return {ms, sol};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  ConvexPolytope shape = shapes::hexagon();

  for (std::size_t n : opt.ns) {
    GeneratorSpec gspec;
    gspec.shape = shape;
    gspec.pose.translation = {0.35, -0.2};
    gspec.pose.rotation = Rotation::identity(2);
    gspec.pose.scale = 1.0;
    gspec.band = opt.band;
    gspec.delta = delta_for_target_count(shape, n);
    gspec.seed = opt.seed + n;
    GeneratedInstance inst = sample_boundary(gspec);

    for (double eps : opt.epsilons) {
      SolverConfig cfg;
      cfg.epsilon = eps;
      cfg.seed = opt.seed;

      // Estimate the direct-path cost from the grid the solver will build.
      Placement mb = minball(shape, inst.cloud, cfg.seed);
      AnnulusSolution base = annulus_at(shape, inst.cloud, mb.center);
      double est_cells = 1.0;
      if (base.width > 0.0) {
        TranslationGrid probe = build_translation_grid(shape, mb.center, base.width, eps, 2.0);
        est_cells = static_cast<double>(probe.point_count());
      }
      double est_cost = est_cells * static_cast<double>(inst.cloud.size()) *
                        static_cast<double>(shape.facet_count());

      if (est_cost <= opt.direct_budget) {
        SolverConfig direct = cfg;
        direct.planar_crossover = ~std::uint64_t{0};  // never switch to the sweep
        auto [ms, sol] = timed([&] { return mwa_translation(shape, inst.cloud, direct); });
        rows.push_back({inst.cloud.size(), eps, 2, "direct", ms, sol.evaluations, sol.width});
      }
      {
        SolverConfig planar = cfg;
        planar.planar_crossover = 0;  // always sweep
        auto [ms, sol] = timed([&] { return mwa_translation(shape, inst.cloud, planar); });
        rows.push_back({inst.cloud.size(), eps, 2, "planar", ms, sol.evaluations, sol.width});
      }
      if (opt.include_rigid && inst.cloud.size() <= opt.rigid_max_n) {
        auto [ms, sol] = timed([&] { return mwa_rigid(shape, inst.cloud, cfg); });
        rows.push_back({inst.cloud.size(), eps, 2, "rigid", ms, sol.evaluations, sol.width});
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,epsilon,dim,mode,ms,evaluations,width\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << format_double(r.epsilon) << ',' << r.dim << ',' << r.mode << ','
        << format_double(r.ms) << ',' << r.evaluations << ',' << format_double(r.width) << '\n';
  }
  return out.str();
}

}  // namespace mwa
