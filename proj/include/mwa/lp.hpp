#pragma once

#include <optional>
#include <vector>

#include "mwa/util.hpp"
#include "mwa/vec.hpp"

namespace mwa {

// A linear inequality a.x <= b.
struct LinearConstraint {
  Vec a;
  double b = 0.0;
};

// min objective.x  s.t.  constraints, lower[i] <= x[i] <= upper[i].
// All variables must carry finite box bounds; the box doubles as the
// big-M certificate for boundedness.
struct LinearProgram {
  Vec objective;
  std::vector<LinearConstraint> constraints;
  Vec lower;
  Vec upper;
};

// Seidel's randomized incremental LP. Expected O(constraints) for fixed
// dimension. Returns nullopt when infeasible. Deterministic for a fixed rng
// seed.
std::optional<Vec> solve_seidel(const LinearProgram& lp, Rng& rng);

// Solves lp, then re-solves per coordinate to pick the lexicographically
// smallest optimizer (each pass pins the previous objectives within a
// slack of pin_slack * (1 + |value|)). When objective_out is given it
// receives the first solve's objective value, which is not perturbed by the
// refinement slack.
std::optional<Vec> solve_lex_min(const LinearProgram& lp, Rng& rng, double pin_slack = 1e-11,
                                 double* objective_out = nullptr);

}  // namespace mwa
