#include "mwa/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mwa/bench.hpp"
#include "mwa/generator.hpp"
#include "mwa/io.hpp"
#include "mwa/oracle.hpp"
#include "mwa/rotation.hpp"
#include "mwa/svg.hpp"
#include "mwa/translation.hpp"

namespace mwa {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvalidInput = 3;
constexpr int kGuaranteeViolated = 4;

struct CommonOpts {
  std::string polytope_path;
  std::string points_path;
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  int threads = 1;
  double tolerance = 1e-9;
  double force_b = 0.0;
  std::uint64_t crossover = 2'000'000;
  std::uint64_t max_orientations = 0;
  std::string output_path;
  std::string render_path;
  bool oracle_check = false;
  int oracle_levels = 3;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_eps) {
  cmd->add_option("--polytope", o.polytope_path, "Polytope JSON file")->required();
  cmd->add_option("--points", o.points_path, "Point cloud (CSV or JSON)")->required();
  if (needs_eps) cmd->add_option("--epsilon", o.epsilon, "Approximation parameter");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--threads", o.threads, "Worker threads");
  cmd->add_option("--tolerance", o.tolerance, "Zero-width tolerance");
  cmd->add_option("--force-b", o.force_b, "Override the grid constant b");
  cmd->add_option("--crossover", o.crossover, "n*gridpoints above which the 2D sweep kicks in");
  cmd->add_option("--max-orientations", o.max_orientations, "Cap on rotation grid orientations");
  cmd->add_option("--output", o.output_path, "Write the result JSON here (default stdout)");
  cmd->add_option("--render", o.render_path, "Write a 2D SVG of the solution");
  cmd->add_flag("--oracle-check", o.oracle_check,
                "Verify the (1+eps) guarantee against the brute-force oracle");
  cmd->add_option("--oracle-levels", o.oracle_levels, "Oracle refinement levels");
}

SolverConfig to_config(const CommonOpts& o) {
  SolverConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.tolerance = o.tolerance;
  if (o.force_b > 0.0) cfg.force_b = o.force_b;
  cfg.planar_crossover = o.crossover;
  if (o.max_orientations > 0)
    cfg.rotation_eval_cap = ~std::uint64_t{0};  // orientation cap handled below
  return cfg;
}

int emit_solution(const CommonOpts& o, const ConvexPolytope& c, const PointCloud& s,
                  const AnnulusSolution& sol) {
  std::string json = result_to_json(sol);
  if (o.output_path.empty())
    std::cout << json;
  else
    write_result_json(o.output_path, sol);
  if (!o.render_path.empty()) write_svg(o.render_path, render_svg(c, s, sol));
  if (o.oracle_check) {
    OracleMode mode = sol.mode == "rigid" ? OracleMode::kRigid : OracleMode::kTranslation;
    OracleParams params;
    params.seed = o.seed;
    params.threads = o.threads;
    OracleReport rep = brute_force_oracle(c, s, mode, o.oracle_levels, params);
    bool ok = sol.width <= (1.0 + sol.epsilon) * rep.upper + rep.slack + rep.rotation_slack &&
              sol.width >= rep.lower - 1e-9;
    std::cerr << "oracle-check: width=" << format_double(sol.width)
              << " upper=" << format_double(rep.upper) << " lower=" << format_double(rep.lower)
              << " slack=" << format_double(rep.slack) << (ok ? " OK" : " VIOLATED") << "\n";
    if (!ok) return kGuaranteeViolated;
  }
  return kOk;
}

Vec parse_list(const std::string& text) {
  Vec out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

ConvexPolytope load_shape(const std::string& name_or_path) {
  if (name_or_path == "square") return shapes::square();
  if (name_or_path == "triangle") return shapes::triangle_t();
  if (name_or_path == "hexagon") return shapes::hexagon();
  if (name_or_path == "cube") return shapes::cube();
  if (name_or_path == "tetrahedron") return shapes::tetrahedron();
  return read_polytope_json(name_or_path);
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Minimum-width polyhedral annulus solver"};
  app.require_subcommand(1);

  CommonOpts solve_o, rigid_o, fixed_o;
  std::string fixed_center_text;

  CLI::App* solve = app.add_subcommand("solve", "Translation-only (1+eps) solve");
  add_common(solve, solve_o, true);

  CLI::App* rigid = app.add_subcommand("solve-rigid", "Translation+rotation (1+eps) solve");
  add_common(rigid, rigid_o, true);

  CLI::App* fixed = app.add_subcommand("solve-fixed-center", "Rotation-only solve at a center");
  add_common(fixed, fixed_o, true);
  fixed->add_option("--center", fixed_center_text, "Center coordinates, comma separated")
      ->required();

  // sample
  std::string sample_shape, sample_points_out, sample_truth_out, sample_polytope_out;
  std::string sample_translate, sample_rotate;
  double sample_delta = 0.05, sample_band = 0.0, sample_scale = 1.0;
  std::uint64_t sample_seed = 0;
  CLI::App* sample = app.add_subcommand("sample", "Generate a boundary sample instance");
  sample->add_option("--shape", sample_shape,
                     "square|triangle|hexagon|cube|tetrahedron or a polytope JSON path")
      ->required();
  sample->add_option("--delta", sample_delta, "Sampling density (model units)")->required();
  sample->add_option("--band", sample_band, "Radial noise half-band");
  sample->add_option("--scale", sample_scale, "Pose scale");
  sample->add_option("--seed", sample_seed, "Random seed");
  sample->add_option("--translate", sample_translate, "Pose translation, comma separated");
  sample->add_option("--rotate", sample_rotate, "Pose angles, comma separated");
  sample->add_option("--points-out", sample_points_out, "Points CSV output path")->required();
  sample->add_option("--truth-out", sample_truth_out, "Ground-truth JSON output path");
  sample->add_option("--polytope-out", sample_polytope_out, "Write the shape as polytope JSON");

  // oracle
  std::string oracle_polytope, oracle_points, oracle_mode = "translation", oracle_out;
  int oracle_levels = 3;
  std::uint64_t oracle_seed = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force width bracket");
  oracle->add_option("--polytope", oracle_polytope, "Polytope JSON file")->required();
  oracle->add_option("--points", oracle_points, "Point cloud (CSV or JSON)")->required();
  oracle->add_option("--mode", oracle_mode, "translation|rigid");
  oracle->add_option("--levels", oracle_levels, "Refinement levels");
  oracle->add_option("--seed", oracle_seed, "Random seed");
  oracle->add_option("--output", oracle_out, "Write the report JSON here (default stdout)");

  // stats
  std::string stats_polytope, stats_points, stats_result;
  CLI::App* stats = app.add_subcommand("stats", "Fatness/slimness of a solution");
  stats->add_option("--polytope", stats_polytope, "Polytope JSON file")->required();
  stats->add_option("--points", stats_points, "Point cloud (CSV or JSON)")->required();
  stats->add_option("--result", stats_result,
                    "Result JSON (default: evaluate at the MinBall center)");

  // render
  std::string render_polytope, render_points, render_result, render_out;
  CLI::App* render = app.add_subcommand("render", "Render a solved instance as SVG");
  render->add_option("--polytope", render_polytope, "Polytope JSON file")->required();
  render->add_option("--points", render_points, "Point cloud (CSV or JSON)")->required();
  render->add_option("--result", render_result, "Result JSON")->required();
  render->add_option("--output", render_out, "SVG output path")->required();

  // bench
  std::string bench_out;
  bool bench_quick = false, bench_full = false, bench_rigid = false;
  std::uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "Timing sweep over n and epsilon");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_flag("--quick", bench_quick, "Single small configuration");
  bench->add_flag("--full", bench_full, "Do not skip expensive direct rows");
  bench->add_flag("--rigid", bench_rigid, "Include rigid rows (small n only)");
  bench->add_option("--seed", bench_seed, "Random seed");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::Success&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (solve->parsed() || rigid->parsed() || fixed->parsed()) {
      const CommonOpts& o = solve->parsed() ? solve_o : (rigid->parsed() ? rigid_o : fixed_o);
      ConvexPolytope c = read_polytope_json(o.polytope_path);
      PointCloud s = read_points(o.points_path);
      SolverConfig cfg = to_config(o);
      if (o.max_orientations > 0) {
        // Interpret the cap as orientations rather than total evaluations.
        cfg.rotation_eval_cap = o.max_orientations;
      }
      AnnulusSolution sol;
      if (solve->parsed()) {
        sol = mwa_translation(c, s, cfg);
      } else if (rigid->parsed()) {
        if (o.max_orientations > 0)
          cfg.rotation_eval_cap = o.max_orientations * std::max<std::uint64_t>(1, s.size());
        sol = mwa_rigid(c, s, cfg);
      } else {
        Vec center = parse_list(fixed_center_text);
        if (static_cast<int>(center.size()) != c.dim())
          throw ValidationError("--center dimension mismatch");
        if (o.max_orientations > 0) cfg.rotation_eval_cap = o.max_orientations;
        sol = mwa_rotation_only(c, s, center, cfg);
      }
      return emit_solution(o, c, s, sol);
    }

    if (sample->parsed()) {
      GeneratorSpec spec;
      spec.shape = load_shape(sample_shape);
      spec.delta = sample_delta;
      spec.band = sample_band;
      spec.seed = sample_seed;
      spec.pose.scale = sample_scale;
      spec.pose.translation =
          sample_translate.empty() ? Vec(spec.shape.dim(), 0.0) : parse_list(sample_translate);
      spec.pose.rotation = Rotation::identity(spec.shape.dim());
      if (!sample_rotate.empty()) {
        Vec ang = parse_list(sample_rotate);
        if (static_cast<int>(ang.size()) != spec.shape.dim() - 1)
          throw ValidationError("--rotate needs d-1 angles");
        spec.pose.rotation.angles = ang;
      }
      GeneratedInstance inst = sample_boundary(spec);
      write_points_csv(sample_points_out, inst.cloud);
      if (!sample_truth_out.empty()) write_truth_json(sample_truth_out, inst.truth);
      if (!sample_polytope_out.empty()) write_polytope_json(sample_polytope_out, spec.shape);
      std::cerr << "wrote " << inst.cloud.size() << " points\n";
      return kOk;
    }

    if (oracle->parsed()) {
      ConvexPolytope c = read_polytope_json(oracle_polytope);
      PointCloud s = read_points(oracle_points);
      OracleMode mode;
      if (oracle_mode == "translation")
        mode = OracleMode::kTranslation;
      else if (oracle_mode == "rigid")
        mode = OracleMode::kRigid;
      else
        throw ValidationError("--mode must be translation or rigid");
      OracleParams params;
      params.seed = oracle_seed;
      OracleReport rep = brute_force_oracle(c, s, mode, oracle_levels, params);
      std::string json = oracle_to_json(rep);
      if (oracle_out.empty())
        std::cout << json;
      else {
        std::ofstream f(oracle_out, std::ios::binary);
        f << json;
      }
      return kOk;
    }

    if (stats->parsed()) {
      ConvexPolytope c = read_polytope_json(stats_polytope);
      PointCloud s = read_points(stats_points);
      AnnulusSolution sol;
      if (stats_result.empty()) {
        sol = constant_factor_mwa(c, s);
      } else {
        AnnulusSolution stored = read_result_json(stats_result);
        ConvexPolytope posed = stored.rotation.is_identity()
                                   ? c
                                   : c.rotate(rotation_from_angles(stored.rotation));
        sol = annulus_at(posed, s, stored.center);
        sol.rotation = stored.rotation;
      }
      FatnessStats f = fatness_stats(c, s, sol);
      std::cout << "{\n  \"concentric_fatness\": " << format_double(f.concentric_fatness)
                << ",\n  \"slimness\": " << format_double(f.slimness) << "\n}\n";
      return kOk;
    }

    if (render->parsed()) {
      ConvexPolytope c = read_polytope_json(render_polytope);
      PointCloud s = read_points(render_points);
      AnnulusSolution sol = read_result_json(render_result);
      write_svg(render_out, render_svg(c, s, sol));
      return kOk;
    }

    if (bench->parsed()) {
      BenchOptions opt;
      opt.seed = bench_seed;
      opt.include_rigid = bench_rigid;
      if (bench_quick) {
        opt.ns = {10'000};
        opt.epsilons = {0.2};
      }
      if (bench_full) opt.direct_budget = 1e18;
      std::string csv = bench_csv(run_bench(opt));
      if (bench_out.empty())
        std::cout << csv;
      else {
        std::ofstream f(bench_out, std::ios::binary);
        f << csv;
      }
      return kOk;
    }
  } catch (const GridTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SlimnessDiverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace mwa
