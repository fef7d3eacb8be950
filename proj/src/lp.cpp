#include "mwa/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace mwa {
namespace {

constexpr double kFeasEps = 1e-12;

struct Problem {
  Vec objective;
  std::vector<LinearConstraint> constraints;
  Vec lower, upper;
};

double row_scale(const Vec& a, double b) {
  double s = std::abs(b);
  for (double v : a) s = std::max(s, std::abs(v));
  return std::max(1.0, s);
}

// 1-D base case: intersect the box with all constraints, then optimize.
std::optional<Vec> solve_1d(const Problem& p) {
  double lo = p.lower[0], hi = p.upper[0];
  for (const auto& c : p.constraints) {
    double a = c.a[0];
    double scale = row_scale(c.a, c.b);
    if (std::abs(a) <= kFeasEps * scale) {
      if (c.b < -kFeasEps * scale) return std::nullopt;
      continue;
    }
    double bound = c.b / a;
    if (a > 0.0)
      hi = std::min(hi, bound);
    else
      lo = std::max(lo, bound);
  }
  if (lo > hi) {
    double gap_tol = kFeasEps * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (lo > hi + gap_tol) return std::nullopt;
    lo = hi = 0.5 * (lo + hi);
  }
  double x = p.objective[0] > 0.0 ? lo : (p.objective[0] < 0.0 ? hi : lo);
  return Vec{x};
}

std::optional<Vec> solve_rec(const Problem& p, Rng& rng) {
  const std::size_t n = p.objective.size();
  if (n == 1) return solve_1d(p);

  // Start at the box corner optimizing the objective.
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = p.objective[i] > 0.0 ? p.lower[i] : (p.objective[i] < 0.0 ? p.upper[i] : p.lower[i]);

  std::vector<std::size_t> order(p.constraints.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);

  for (std::size_t t = 0; t < order.size(); ++t) {
    const LinearConstraint& h = p.constraints[order[t]];
    double scale = row_scale(h.a, h.b);
    double lhs = dot(h.a, x);
    if (lhs <= h.b + kFeasEps * std::max(scale, std::abs(lhs))) continue;

    // Violated: the optimum lies on h's hyperplane. Eliminate the variable
    // with the largest pivot and recurse on the constraints seen so far.
    std::size_t piv = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(h.a[i]) > std::abs(h.a[piv])) piv = i;
    if (std::abs(h.a[piv]) <= kFeasEps * scale) return std::nullopt;  // 0 <= b<0

    const double apiv = h.a[piv];
    auto reduce_vec = [&](const Vec& full, double coeff_piv, Vec& out) {
      out.clear();
      out.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        out.push_back(full[i] - coeff_piv * h.a[i] / apiv);
      }
    };

    Problem sub;
    sub.objective.reserve(n - 1);
    reduce_vec(p.objective, p.objective[piv], sub.objective);
    sub.lower.reserve(n - 1);
    sub.upper.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv) continue;
      sub.lower.push_back(p.lower[i]);
      sub.upper.push_back(p.upper[i]);
    }
    sub.constraints.reserve(t + 2);
    for (std::size_t s = 0; s < t; ++s) {
      const LinearConstraint& g = p.constraints[order[s]];
      LinearConstraint rc;
      reduce_vec(g.a, g.a[piv], rc.a);
      rc.b = g.b - g.a[piv] * h.b / apiv;
      sub.constraints.push_back(std::move(rc));
    }
    // The eliminated variable's box bounds become two constraints:
    // lower_piv <= (b - sum a_i x_i)/a_piv <= upper_piv.
    {
      LinearConstraint lc, uc;
      lc.a.assign(n - 1, 0.0);
      uc.a.assign(n - 1, 0.0);
      std::size_t j = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        lc.a[j] = h.a[i] / apiv;   //  (b - a.x)/apiv >= lo  ->  a.x/apiv <= b/apiv - lo
        uc.a[j] = -h.a[i] / apiv;  //  (b - a.x)/apiv <= hi  -> -a.x/apiv <= hi - b/apiv
        ++j;
      }
      lc.b = h.b / apiv - p.lower[piv];
      uc.b = p.upper[piv] - h.b / apiv;
      sub.constraints.push_back(std::move(lc));
      sub.constraints.push_back(std::move(uc));
    }

    auto sol = solve_rec(sub, rng);
    if (!sol) return std::nullopt;

    Vec lifted(n);
    double acc = h.b;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv) continue;
      lifted[i] = (*sol)[j];
      acc -= h.a[i] * (*sol)[j];
      ++j;
    }
    lifted[piv] = acc / apiv;
    lifted[piv] = std::clamp(lifted[piv], p.lower[piv], p.upper[piv]);
    x = std::move(lifted);
  }
  return x;
}

}  // namespace

std::optional<Vec> solve_seidel(const LinearProgram& lp, Rng& rng) {
  Problem p{lp.objective, lp.constraints, lp.lower, lp.upper};
  if (p.objective.empty()) return Vec{};
  return solve_rec(p, rng);
}

std::optional<Vec> solve_lex_min(const LinearProgram& lp, Rng& rng, double pin_slack,
                                 double* objective_out) {
  const std::size_t n = lp.objective.size();
  auto sol = solve_seidel(lp, rng);
  if (!sol) return std::nullopt;

  LinearProgram work = lp;
  // Pin the primary objective, then minimize each coordinate in turn.
  double obj_val = dot(lp.objective, *sol);
  if (objective_out) *objective_out = obj_val;
  {
    LinearConstraint pin{lp.objective, obj_val + pin_slack * (1.0 + std::abs(obj_val))};
    work.constraints.push_back(std::move(pin));
  }
  Vec x = *sol;
  for (std::size_t k = 0; k < n; ++k) {
    Vec obj(n, 0.0);
    obj[k] = 1.0;
    work.objective = obj;
    auto s = solve_seidel(work, rng);
    if (!s) break;  // numerically pinned too tight; keep the previous point
    x = *s;
    LinearConstraint pin;
    pin.a.assign(n, 0.0);
    pin.a[k] = 1.0;
    pin.b = x[k] + pin_slack * (1.0 + std::abs(x[k]));
    work.constraints.push_back(std::move(pin));
  }
  return x;
}

}  // namespace mwa
