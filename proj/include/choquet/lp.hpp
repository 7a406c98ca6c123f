#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "choquet/linalg.hpp"

namespace choquet::lp {

enum class Sense { minimize, maximize };
enum class Status { optimal, infeasible, unbounded };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// min/max objective . x  subject to  eq_a x = eq_b,  le_a x <= le_b,
// lower <= x (<= upper where finite). lower defaults to zero when empty;
// upper defaults to +inf when empty.
struct LinearProgram {
  Sense sense = Sense::minimize;
  Vec objective;
  Mat eq_a;
  Vec eq_b;
  Mat le_a;
  Vec le_b;
  Vec lower;
  Vec upper;
};

// Rows of `dual` and `farkas` follow [eq rows, le rows, finite-upper-bound
// rows in variable order]. dual[r] is the shadow price d(value)/d(rhs_r) at
// the optimum, for both senses. The farkas vector certifies infeasibility:
// y'A <= 0 columnwise over the constraint matrix (with le-row entries <= 0)
// and y'b > 0.
struct Outcome {
  Status status = Status::optimal;
  Vec x;
  double value = 0.0;
  Vec dual;
  Vec farkas;
};

// Two-phase dense tableau simplex, Bland's anti-cycling pivot rule.
Outcome solve(const LinearProgram& prog);

// Phase 1 only; the objective is ignored.
std::optional<Vec> feasible_point(const LinearProgram& prog);

}  // namespace choquet::lp
