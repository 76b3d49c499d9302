#pragma once

#include <vector>

#include "hstab/matrix.hpp"
#include "hstab/rational.hpp"

namespace hstab {

enum class LpSense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

/// Equality-form program: optimize objective . x subject to
/// constraints * x = rhs, with x[j] >= 0 wherever nonneg[j] is set
/// (free otherwise). All data exact rationals.
struct LinearProgram {
  Matrix constraints;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  std::vector<bool> nonneg;
  LpSense sense = LpSense::maximize;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational optimum;               // meaningful only when status == optimal
  std::vector<Rational> witness;  // primal solution in the original variables
  /// One multiplier per constraint row. At an optimum these are the exact
  /// duals; on infeasible programs they form a Farkas certificate:
  /// dual . rhs > 0 and dual . column <= 0 for every nonnegative variable
  /// (== 0 for free ones).
  std::vector<Rational> dual;
  long iterations = 0;
};

/// Two-phase primal simplex with Bland's rule, so termination is
/// unconditional; the iteration guard throws std::runtime_error and
/// indicates a bug rather than cycling.
LpResult lp_solve(const LinearProgram& lp, long max_iterations = 200000);

}  // namespace hstab
