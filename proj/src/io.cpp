#include "mwa/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mwa {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

ordered_json parse_json(const std::string& path) {
  try {
    return ordered_json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

Vec to_vec(const ordered_json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(x.get<double>());
  return v;
}

ordered_json from_vec(const Vec& v) {
  ordered_json j = ordered_json::array();
  for (double x : v) j.push_back(x);
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ConvexPolytope read_polytope_json(const std::string& path) {
  ordered_json j = parse_json(path);
  if (!j.contains("dim") || !j.contains("vertices"))
    throw ValidationError(path + ": polytope JSON needs \"dim\" and \"vertices\"");
  int dim = j["dim"].get<int>();
  std::vector<Vec> vertices;
  for (const auto& row : j["vertices"]) vertices.push_back(to_vec(row));
  if (j.contains("halfspaces")) {
    std::vector<Halfspace> hs;
    for (const auto& h : j["halfspaces"])
      hs.push_back({to_vec(h["normal"]), h["offset"].get<double>()});
    return ConvexPolytope::from_vertices_and_halfspaces(dim, vertices, hs);
  }
  return ConvexPolytope::from_vertices(dim, vertices);
}

void write_polytope_json(const std::string& path, const ConvexPolytope& c) {
  ordered_json j;
  j["dim"] = c.dim();
  ordered_json vs = ordered_json::array();
  for (const Vec& v : c.vertices()) vs.push_back(from_vec(v));
  j["vertices"] = vs;
  ordered_json hs = ordered_json::array();
  for (const Halfspace& h : c.facets()) {
    ordered_json o;
    o["normal"] = from_vec(h.normal);
    o["offset"] = h.offset;
    hs.push_back(o);
  }
  j["halfspaces"] = hs;
  spill(path, j.dump(2) + "\n");
}

PointCloud read_points(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_points_json(path);
  return read_points_csv(path);
}

PointCloud read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> flat;
  int dim = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    const char* p = line.data();
    const char* end = p + line.size();
    bool ok = true;
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      const char* tok_end = p;
      while (tok_end < end && *tok_end != ',') ++tok_end;
      const char* num_end = tok_end;
      while (num_end > p && (num_end[-1] == ' ' || num_end[-1] == '\t')) --num_end;
      double val = 0.0;
      auto res = std::from_chars(p, num_end, val);
      if (res.ec != std::errc{} || res.ptr != num_end || p == num_end) {
        ok = false;
        break;
      }
      row.push_back(val);
      p = tok_end < end ? tok_end + 1 : end;
    }
    if (!ok) {
      if (first_content) {  // a single non-numeric leading row is a header
        first_content = false;
        continue;
      }
      throw ParseError(path + ": malformed CSV row", lineno);
    }
    if (row.empty()) throw ParseError(path + ": empty CSV row", lineno);
    first_content = false;
    if (dim == 0)
      dim = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != dim)
      throw ParseError(path + ": inconsistent column count", lineno);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (flat.empty()) throw ValidationError(path + ": no points found");
  return PointCloud(dim, std::move(flat));
}

PointCloud read_points_json(const std::string& path) {
  ordered_json j = parse_json(path);
  if (!j.contains("dim") || !j.contains("points"))
    throw ValidationError(path + ": points JSON needs \"dim\" and \"points\"");
  int dim = j["dim"].get<int>();
  std::vector<double> flat;
  for (const auto& row : j["points"]) {
    if (static_cast<int>(row.size()) != dim)
      throw ValidationError(path + ": point dimension mismatch");
    for (const auto& x : row) flat.push_back(x.get<double>());
  }
  if (flat.empty()) throw ValidationError(path + ": no points found");
  return PointCloud(dim, std::move(flat));
}

void write_points_csv(const std::string& path, const PointCloud& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double* p = s.point(i);
    for (int j = 0; j < s.dim(); ++j) {
      if (j) out << ',';
      out << format_double(p[j]);
    }
    out << '\n';
  }
  spill(path, out.str());
}

void write_points_json(const std::string& path, const PointCloud& s) {
  ordered_json j;
  j["dim"] = s.dim();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.size(); ++i) rows.push_back(from_vec(s.point_vec(i)));
  j["points"] = rows;
  spill(path, j.dump(2) + "\n");
}

std::string result_to_json(const AnnulusSolution& sol) {
  ordered_json j;
  j["center"] = from_vec(sol.center);
  j["rotation_angles"] = from_vec(sol.rotation.angles);
  j["inner_radius"] = sol.inner_radius;
  j["outer_radius"] = sol.outer_radius;
  j["width"] = sol.width;
  j["epsilon"] = sol.epsilon;
  j["evaluations"] = sol.evaluations;
  j["elapsed_ms"] = sol.elapsed_ms;
  j["b_used"] = sol.b_used;
  j["mode"] = sol.mode;
  if (sol.mode == "rigid" || sol.mode == "rotation-only") {
    j["f_hat"] = sol.f_hat;
    j["orientations"] = sol.orientations;
    j["retries"] = sol.retries;
    if (sol.rotation.dim >= 3) j["rotation_family"] = "paper-parameterized subfamily";
  }
  if (sol.bootstrap_width >= 0.0) j["bootstrap_width"] = sol.bootstrap_width;
  return j.dump(2) + "\n";
}

AnnulusSolution read_result_json(const std::string& path) {
  ordered_json j = parse_json(path);
  AnnulusSolution sol;
  sol.center = to_vec(j.at("center"));
  sol.rotation.dim = static_cast<int>(sol.center.size());
  sol.rotation.angles = to_vec(j.at("rotation_angles"));
  sol.inner_radius = j.at("inner_radius").get<double>();
  sol.outer_radius = j.at("outer_radius").get<double>();
  sol.width = j.at("width").get<double>();
  sol.epsilon = j.at("epsilon").get<double>();
  sol.evaluations = j.at("evaluations").get<std::uint64_t>();
  sol.elapsed_ms = j.at("elapsed_ms").get<double>();
  sol.b_used = j.at("b_used").get<double>();
  sol.mode = j.at("mode").get<std::string>();
  if (j.contains("f_hat")) sol.f_hat = j["f_hat"].get<double>();
  if (j.contains("orientations")) sol.orientations = j["orientations"].get<std::uint64_t>();
  if (j.contains("retries")) sol.retries = j["retries"].get<int>();
  if (j.contains("bootstrap_width")) sol.bootstrap_width = j["bootstrap_width"].get<double>();
  return sol;
}

void write_result_json(const std::string& path, const AnnulusSolution& sol) {
  spill(path, result_to_json(sol));
}

std::string truth_to_json(const GroundTruth& truth) {
  ordered_json j;
  j["center"] = from_vec(truth.center);
  j["rotation_angles"] = from_vec(truth.rotation.angles);
  j["scale"] = truth.scale;
  j["inner_radius"] = truth.inner_radius;
  j["outer_radius"] = truth.outer_radius;
  j["width"] = truth.width;
  return j.dump(2) + "\n";
}

void write_truth_json(const std::string& path, const GroundTruth& truth) {
  spill(path, truth_to_json(truth));
}

std::string oracle_to_json(const OracleReport& rep) {
  ordered_json j;
  j["lower"] = rep.lower;
  j["upper"] = rep.upper;
  j["best_center"] = from_vec(rep.best_center);
  j["best_rotation_angles"] = from_vec(rep.best_rotation.angles);
  j["slack"] = rep.slack;
  j["levels"] = rep.levels;
  j["cells_evaluated"] = rep.cells_evaluated;
  if (rep.angle_step > 0.0) {
    j["angle_step"] = rep.angle_step;
    j["rotation_slack"] = rep.rotation_slack;
  }
  return j.dump(2) + "\n";
}

}  // namespace mwa
