#pragma once
#include <string>
#include <vector>

#include "irbp/sparse.hpp"

namespace irbp {

struct LpOptions {
  double feas_tol = 1e-9;  // final residual bound, scaled by 1 + |b|_inf
  double dual_tol = 1e-9;  // reduced-cost violation threshold
  double ratio_tol = 1e-11; // minimum pivot magnitude in the ratio test
  double degen_tol = 1e-12; // steps below this count as degenerate
  int bland_after = 40;     // consecutive degenerate pivots before Bland's rule
  int refactor_every = 64;  // eta updates kept before refactorization
  long max_iter = 0;        // 0 picks 50 * (rows + vars)
  int verify_rounds = 3;    // refactor-recompute-resume attempts at the end
  unsigned seed = 42;       // recorded in reports; solves are deterministic
};

enum class LpStatus { optimal, infeasible, iteration_limit, numerical_trouble };
std::string to_string(LpStatus s);

// One nonnegative LP variable: a physical column of A, a sign, a cost. Both
// signs of a column may appear, which is how free and l1-type variables are
// expressed without duplicating column storage.
struct LpVar {
  int col;
  double sign;
  double cost;
};

struct SimplexResult {
  LpStatus status = LpStatus::numerical_trouble;
  std::vector<double> x; // per LP var
  double objective = 0.0;
  long iterations = 0;
  int refactorizations = 0;
  double residual = 0.0; // inf-norm of the final constraint residual
  std::string message;
};

// min c^T x  subject to  sum_j x_j sign_j A[:,col_j] = b,  x >= 0.
//
// The start basis comes from a rank-revealing factorization over crash_cols
// (dependent columns are skipped); each selected column enters with the sign
// of its component of B^{-1} b, which makes the start primal feasible, so
// there is no phase 1. Every column listed in crash_cols must have vars of
// both signs. A must have full row rank over crash_cols; callers are
// expected to have dropped dependent rows beforehand.
SimplexResult revised_simplex(const SparseMatrix& A, const std::vector<LpVar>& vars,
                              const std::vector<double>& b, const std::vector<int>& crash_cols,
                              const LpOptions& opts = {});

} // namespace irbp
