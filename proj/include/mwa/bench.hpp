#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mwa {

struct BenchRow {
  std::size_t n = 0;
  double epsilon = 0.0;
  int dim = 2;
  std::string mode;  // direct | planar | rigid
  double ms = 0.0;
  std::uint64_t evaluations = 0;
  double width = 0.0;
};

struct BenchOptions {
  std::vector<std::size_t> ns{10'000, 100'000, 1'000'000};
  std::vector<double> epsilons{0.2, 0.1, 0.05};
  std::uint64_t seed = 1;
  double band = 0.05;
  // Direct rows with n * gridpoints * facets above this are skipped.
  double direct_budget = 2e9;
  bool include_rigid = false;
  std::size_t rigid_max_n = 10'000;
};

std::vector<BenchRow> run_bench(const BenchOptions& opt);

// Header: n,epsilon,dim,mode,ms,evaluations,width
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mwa
