#pragma once

#include <vector>

#include "naimark/matrix.hpp"

namespace naimark {

/// Linear program in equality standard form:
///   minimize c.x  subject to  A x = b,  x >= 0.
struct LpProblem {
  Matrix a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  std::vector<double> x;
  double objective = 0.0;
};

/// Dense two-phase tableau simplex under Bland's pivoting rule: the entering
/// column is the lowest-index one with negative reduced cost and ratio-test
/// ties go to the lowest basic variable index, so the solve is deterministic
/// and cannot cycle. Sized for small problems (tens of rows/columns).
LpResult solve_lp(const LpProblem& problem, double eps = 1e-9);

}  // namespace naimark
