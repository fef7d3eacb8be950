#include "mwa/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mwa/util.hpp"

namespace mwa {
namespace {

void require_2d(const TranslationGrid& grid) {
  if (grid.dim != 2) throw NotPlanar("planar sweep requires a 2D grid");
  if (grid.points_per_axis < 2) throw InvalidParameter("grid needs >= 2 points per axis");
}

// CCW endpoint vertex indices (v1 -> v2) of a facet, from the incidence lists.
std::pair<int, int> facet_endpoints(const ConvexPolytope& c, int facet) {
  std::vector<int> touching;
  for (std::size_t vi = 0; vi < c.vertices().size(); ++vi) {
    for (int fi : c.incidence()[vi]) {
      if (fi == facet) touching.push_back(static_cast<int>(vi));
    }
  }
  if (touching.size() != 2) throw DegenerateShape("2D facet must touch exactly two vertices");
  int a = touching[0], b = touching[1];
  double d = cross2(c.vertices()[a], c.vertices()[b]);
  if (std::abs(d) <= 1e-12) throw DegenerateShape("facet endpoint directions are parallel");
  if (d < 0.0) std::swap(a, b);
  return {a, b};
}

}  // namespace

LineProjectionIndex build_line_projection_index(const Vec& v, const TranslationGrid& grid) {
  require_2d(grid);
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1]);
  if (len <= 0.0) throw DegenerateDirection("zero direction vector");

  LineProjectionIndex idx;
  idx.direction = v;
  idx.perp = Vec{-v[1] / len, v[0] / len};

  const std::uint32_t k = static_cast<std::uint32_t>(grid.points_per_axis);
  const std::uint64_t total = static_cast<std::uint64_t>(k) * k;
  // Projection of gridpoint (i0, i1): t0 + A*i0 + B*i1.
  const double A = grid.spacing * idx.perp[0];
  const double B = grid.spacing * idx.perp[1];

  // Normalize to t = base + Ap*p + Bq*q with Ap >= Bq >= 0 by swapping axes
  // and flipping index directions; remember how to map (p, q) back to a flat
  // grid index.
  const bool swapped = std::abs(A) < std::abs(B);
  double Ap = swapped ? B : A;
  double Bq = swapped ? A : B;
  const bool flip_p = Ap < 0.0;
  const bool flip_q = Bq < 0.0;
  Ap = std::abs(Ap);
  Bq = std::abs(Bq);

  auto flat_of_pq = [&](std::uint32_t p, std::uint32_t q) -> std::uint32_t {
    std::uint32_t rp = flip_p ? k - 1 - p : p;
    std::uint32_t rq = flip_q ? k - 1 - q : q;
    std::uint32_t i0 = swapped ? rq : rp;
    std::uint32_t i1 = swapped ? rp : rq;
    return i0 * k + i1;
  };

  std::vector<std::uint32_t> order;
  order.reserve(total);

  if (Bq <= 0.0) {
    // Rows project identically; columns are Ap apart.
    for (std::uint32_t p = 0; p < k; ++p)
      for (std::uint32_t q = 0; q < k; ++q) order.push_back(flat_of_pq(p, q));
  } else {
    // Region trick: split the axis into Ap-wide regions. Every region holds
    // at most one entry per row q, and rows appear in the same within-region
    // order everywhere, so one O(k log k) sort of the row remainders fixes
    // the order of all k^2 lines.
    std::vector<std::uint64_t> region(k);
    std::vector<double> rem(k);
    for (std::uint32_t q = 0; q < k; ++q) {
      double off = Bq * static_cast<double>(q);
      double f = std::floor(off / Ap);
      double r = off - f * Ap;
      if (r >= Ap) {  // guard the rounding edge
        r -= Ap;
        f += 1.0;
      }
      region[q] = static_cast<std::uint64_t>(f);
      rem[q] = r;
    }
    std::vector<std::uint32_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0u);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rem[a] < rem[b]; });
    const std::uint64_t last_region = region[k - 1] + (k - 1);
    for (std::uint64_t r = 0; r <= last_region; ++r) {
      for (std::uint32_t q : rows) {
        if (region[q] > r) continue;
        std::uint64_t p = r - region[q];
        if (p < k) order.push_back(flat_of_pq(static_cast<std::uint32_t>(p), q));
      }
    }
  }

  // Canonical projection values, computed the same way queries will.
  auto value_of_flat = [&](std::uint32_t flat) {
    double pt[2];
    grid.point(flat, pt);
    return idx.project(pt);
  };
  std::vector<double> vals(total);
  for (std::uint64_t r = 0; r < total; ++r) vals[r] = value_of_flat(order[r]);

  // The region trick is exact in real arithmetic; repair any ulp-level
  // inversions so the result matches a comparison sort bit for bit.
  for (std::uint64_t i = 1; i < total; ++i) {
    if (vals[i] < vals[i - 1]) {
      double v0 = vals[i];
      std::uint32_t o0 = order[i];
      std::uint64_t j = i;
      while (j > 0 && vals[j - 1] > v0) {
        vals[j] = vals[j - 1];
        order[j] = order[j - 1];
        --j;
      }
      vals[j] = v0;
      order[j] = o0;
    }
  }
  // Normalize ties to ascending flat index.
  for (std::uint64_t i = 0; i < total;) {
    std::uint64_t j = i + 1;
    while (j < total && vals[j] == vals[i]) ++j;
    if (j - i > 1) std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }

  idx.sorted_offsets = std::move(vals);
  idx.flat_of_rank = std::move(order);
  idx.rank_of_flat.assign(total, 0);
  for (std::uint64_t r = 0; r < total; ++r)
    idx.rank_of_flat[idx.flat_of_rank[r]] = static_cast<std::uint32_t>(r);
  idx.dup_end.assign(total, 0);
  for (std::uint64_t i = 0; i < total;) {
    std::uint64_t j = i + 1;
    while (j < total && idx.sorted_offsets[j] == idx.sorted_offsets[i]) ++j;
    for (std::uint64_t r = i; r < j; ++r) idx.dup_end[r] = static_cast<std::uint32_t>(j - 1);
    i = j;
  }
  return idx;
}

std::uint32_t locate_slab(const LineProjectionIndex& idx, const double* p) {
  double t = idx.project(p);
  return static_cast<std::uint32_t>(
      std::upper_bound(idx.sorted_offsets.begin(), idx.sorted_offsets.end(), t) -
      idx.sorted_offsets.begin());
}

std::uint32_t locate_lower(const LineProjectionIndex& idx, const double* p) {
  double t = idx.project(p);
  return static_cast<std::uint32_t>(
      std::lower_bound(idx.sorted_offsets.begin(), idx.sorted_offsets.end(), t) -
      idx.sorted_offsets.begin());
}

std::vector<FacetSweepTable> build_facet_tables(const ConvexPolytope& c, const PointCloud& s,
                                                const TranslationGrid& grid, int threads) {
  require_2d(grid);
  if (c.dim() != 2 || s.dim() != 2) throw NotPlanar("planar sweep requires 2D inputs");
  if (s.empty()) throw EmptyCloud("build_facet_tables: empty point cloud");

  const std::size_t m = c.facet_count();
  const std::size_t n = s.size();
  const std::uint64_t total = grid.point_count();

  std::vector<std::pair<int, int>> endpoints(m);
  std::vector<char> vertex_used(c.vertices().size(), 0);
  for (std::size_t e = 0; e < m; ++e) {
    endpoints[e] = facet_endpoints(c, static_cast<int>(e));
    vertex_used[endpoints[e].first] = 1;
    vertex_used[endpoints[e].second] = 1;
  }

  std::vector<LineProjectionIndex> vertex_index(c.vertices().size());
  for (std::size_t vi = 0; vi < c.vertices().size(); ++vi) {
    if (vertex_used[vi]) vertex_index[vi] = build_line_projection_index(c.vertices()[vi], grid);
  }

  std::vector<FacetSweepTable> tables(m);
  parallel_for_chunks(m, threads, [&](std::size_t fb, std::size_t fe, std::size_t) {
    for (std::size_t e = fb; e < fe; ++e) {
      FacetSweepTable& tab = tables[e];
      tab.facet = static_cast<int>(e);
      tab.v1 = endpoints[e].first;
      tab.v2 = endpoints[e].second;
      const LineProjectionIndex& lv1 = vertex_index[tab.v1];
      const LineProjectionIndex& lv2 = vertex_index[tab.v2];
      const double* ns = c.scaled_normals().data() + e * 2;

      // Per-point keys: insertion bucket on the a-axis (lower rank in L_v2),
      // tree key on the b-axis (slab in L_v1), and the constraint value.
      std::vector<std::uint32_t> bucket_count(total + 2, 0);
      std::vector<std::uint32_t> point_key_b(n);
      std::vector<double> point_value(n);
      std::vector<std::uint32_t> point_bucket(n);
      double gmax = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        const double* p = s.point(i);
        double w = ns[0] * p[0] + ns[1] * p[1];
        point_value[i] = w;
        if (w > gmax) gmax = w;
        point_bucket[i] = locate_lower(lv2, p);
        point_key_b[i] = locate_slab(lv1, p);
        ++bucket_count[point_bucket[i]];
      }
      tab.global_max = gmax;

      // Counting sort of points by insertion bucket (stable in point order).
      std::vector<std::uint32_t> bucket_start(total + 2, 0);
      for (std::size_t bidx = 1; bidx < bucket_start.size(); ++bidx)
        bucket_start[bidx] = bucket_start[bidx - 1] + bucket_count[bidx - 1];
      std::vector<std::uint32_t> by_bucket(n);
      {
        std::vector<std::uint32_t> cursor = bucket_start;
        for (std::size_t i = 0; i < n; ++i) by_bucket[cursor[point_bucket[i]]++] = i;
      }

      // Sweep a-ranks in descending cone coordinate (ascending projection).
      // A point with lower-rank <= dup_end[k] satisfies the a-side dominance
      // for the gridpoint of rank k; the b-side is a suffix query over slabs.
      tab.contributor_min.assign(total, FacetSweepTable::kNone);
      SuffixMinTree tree(total + 1);
      std::size_t inserted_bucket = 0;  // buckets [0, inserted_bucket) are in
      for (std::uint64_t k = 0; k < total; ++k) {
        std::uint32_t avail = lv2.dup_end[k];
        while (inserted_bucket <= avail) {
          for (std::uint32_t ii = bucket_start[inserted_bucket];
               ii < bucket_start[inserted_bucket + 1]; ++ii) {
            std::uint32_t i = by_bucket[ii];
            tree.insert(point_key_b[i], point_value[i]);
          }
          ++inserted_bucket;
        }
        std::uint32_t g = lv2.flat_of_rank[k];
        std::uint32_t rank_b = lv1.rank_of_flat[g];
        tab.contributor_min[g] = tree.suffix_min(rank_b + 1);
      }
    }
  });
  return tables;
}

namespace {

std::vector<double> widths_from_tables(const ConvexPolytope& c,
                                       const std::vector<FacetSweepTable>& tables,
                                       const TranslationGrid& grid, int threads) {
  const std::size_t m = c.facet_count();
  const std::uint64_t total = grid.point_count();
  std::vector<double> widths(total);
  parallel_for_chunks(total, threads, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t g = b; g < e; ++g) {
      double pt[2];
      grid.point(g, pt);
      double outer = -std::numeric_limits<double>::infinity();
      double inner = std::numeric_limits<double>::infinity();
      for (std::size_t f = 0; f < m; ++f) {
        const double* ns = c.scaled_normals().data() + f * 2;
        double ng = ns[0] * pt[0] + ns[1] * pt[1];
        outer = std::max(outer, tables[f].global_max - ng);
        double cm = tables[f].contributor_min[g];
        if (cm != FacetSweepTable::kNone) inner = std::min(inner, cm - ng);
      }
      widths[g] = std::max(0.0, outer) - std::max(0.0, inner);
    }
  });
  return widths;
}

}  // namespace

std::vector<double> fast_sweep_widths(const ConvexPolytope& c, const PointCloud& s,
                                      const TranslationGrid& grid, int threads) {
  auto tables = build_facet_tables(c, s, grid, threads);
  return widths_from_tables(c, tables, grid, threads);
}

AnnulusSolution fast_mwa_sweep(const ConvexPolytope& c, const PointCloud& s,
                               const TranslationGrid& grid, int threads) {
  if (s.empty()) throw EmptyCloud("fast_mwa_sweep: empty point cloud");
  auto tables = build_facet_tables(c, s, grid, threads);
  std::vector<double> widths = widths_from_tables(c, tables, grid, threads);

  double best = std::numeric_limits<double>::infinity();
  for (double w : widths) best = std::min(best, w);

  // The sweep evaluates gauges as differences of cached dot products, which
  // can drift a few ulps from annulus_at. Re-evaluate every near-tie exactly
  // so the reported gridpoint matches direct evaluation bit for bit.
  const double margin = 1e-7 * std::max(1.0, std::abs(best));
  AnnulusSolution out;
  bool have = false;
  std::uint64_t best_flat = 0;
  for (std::uint64_t g = 0; g < widths.size(); ++g) {
    if (widths[g] > best + margin) continue;
    AnnulusSolution cand = annulus_at(c, s, grid.point_vec(g), threads);
    if (!have || cand.width < out.width) {
      out = cand;
      best_flat = g;
      have = true;
    }
  }
  (void)best_flat;
  out.evaluations = grid.point_count();
  return out;
}

}  // namespace mwa
