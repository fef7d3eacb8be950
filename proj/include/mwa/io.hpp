#pragma once

#include <string>

#include "mwa/annulus.hpp"
#include "mwa/generator.hpp"
#include "mwa/oracle.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

// Polytope JSON: {"dim": d, "vertices": [[...], ...],
//                 "halfspaces": [{"normal": [...], "offset": b}, ...]}.
// halfspaces are optional for d <= 3 and required for d > 3.
ConvexPolytope read_polytope_json(const std::string& path);
void write_polytope_json(const std::string& path, const ConvexPolytope& c);

// Points: CSV (one point per row, optional header) or JSON
// {"dim": d, "points": [[...], ...]}; dispatched on the .json extension.
PointCloud read_points(const std::string& path);
PointCloud read_points_csv(const std::string& path);
PointCloud read_points_json(const std::string& path);
void write_points_csv(const std::string& path, const PointCloud& s);
void write_points_json(const std::string& path, const PointCloud& s);

// Result JSON with a fixed key order; identical bytes for identical runs
// apart from the elapsed_ms field.
std::string result_to_json(const AnnulusSolution& sol);
AnnulusSolution read_result_json(const std::string& path);
void write_result_json(const std::string& path, const AnnulusSolution& sol);

std::string truth_to_json(const GroundTruth& truth);
void write_truth_json(const std::string& path, const GroundTruth& truth);

std::string oracle_to_json(const OracleReport& rep);

// 17-significant-digit decimal form; round-trips doubles exactly.
std::string format_double(double x);

}  // namespace mwa
