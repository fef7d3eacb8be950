#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mwa/annulus.hpp"
#include "mwa/translation.hpp"

namespace mwa {

// Sorted projections of the k*k gridlines parallel to a vertex direction v
// onto the perpendicular axis rot90(v)/|v|. Built in O(k^2) using the grid's
// uniform structure; ties are resolved by ascending flat grid index.
struct LineProjectionIndex {
  Vec direction;          // v
  Vec perp;               // unit rot90(v)
  std::vector<double> sorted_offsets;     // k^2 projections, nondecreasing
  std::vector<std::uint32_t> flat_of_rank;  // rank -> flat grid index
  std::vector<std::uint32_t> rank_of_flat;  // flat grid index -> rank
  std::vector<std::uint32_t> dup_end;       // rank -> last rank of its equal-value run

  double project(const double* p) const { return perp[0] * p[0] + perp[1] * p[1]; }
};

LineProjectionIndex build_line_projection_index(const Vec& v, const TranslationGrid& grid);

// Slab of p in the subdivision: the smallest r with sorted_offsets[r] >
// project(p), in [0, k^2]. Points exactly on a line fall in the slab on the
// >= side.
std::uint32_t locate_slab(const LineProjectionIndex& idx, const double* p);
inline std::uint32_t locate_slab(const LineProjectionIndex& idx, const Vec& p) {
  return locate_slab(idx, p.data());
}

// Rank of the first offset >= project(p), in [0, k^2]. Counterpart of
// locate_slab for <=-side comparisons.
std::uint32_t locate_lower(const LineProjectionIndex& idx, const double* p);

// Insert-only Fenwick tree answering suffix minima over integer keys.
class SuffixMinTree {
public:
  explicit SuffixMinTree(std::size_t size)
      : size_(size), tree_(size + 1, std::numeric_limits<double>::infinity()) {}

  // Key in [0, size).
  void insert(std::size_t key, double value) {
    for (std::size_t i = size_ - key; i <= size_; i += i & (~i + 1))
      tree_[i] = std::min(tree_[i], value);
  }

  // min over inserted entries with key >= lo; +inf if none.
  double suffix_min(std::size_t lo) const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = size_ - lo; i > 0; i -= i & (~i + 1)) m = std::min(m, tree_[i]);
    return m;
  }

private:
  std::size_t size_;
  std::vector<double> tree_;
};

// Contributor minima for one facet: for every gridpoint g, the minimum of
// scaled_normal_e . p over points p with p - g in the facet's vertex cone
// (+inf when empty), plus the facet-wide maximum for the outer radius.
struct FacetSweepTable {
  int facet = 0;
  int v1 = 0, v2 = 0;      // CCW endpoint vertex indices of the facet
  double global_max = 0.0;  // max_p scaled_normal_e . p
  std::vector<double> contributor_min;  // by flat grid index

  static constexpr double kNone = std::numeric_limits<double>::infinity();
};

// Builds all facet tables with the dominance sweep: bucket by a-rank
// (slabs of L_{v2}), sweep descending in the cone coordinate, maintain an
// insert-only suffix-min tree over b-slab indices (slabs of L_{v1}).
std::vector<FacetSweepTable> build_facet_tables(const ConvexPolytope& c, const PointCloud& s,
                                                const TranslationGrid& grid, int threads = 1);

// Grid sweep returning the same solution as evaluate_grid (identical best
// gridpoint; near-ties re-evaluated exactly to pin the argmin).
AnnulusSolution fast_mwa_sweep(const ConvexPolytope& c, const PointCloud& s,
                               const TranslationGrid& grid, int threads = 1);

// Per-gridpoint widths from the sweep tables (testing/verification surface).
std::vector<double> fast_sweep_widths(const ConvexPolytope& c, const PointCloud& s,
                                      const TranslationGrid& grid, int threads = 1);

}  // namespace mwa
