#pragma once
#include <vector>

#include "irbp/sparse.hpp"

namespace irbp {

// Left-looking sparse LU with partial pivoting, built column by column over a
// caller-chosen column order. Columns that do not increase the rank are
// skipped, so the same routine serves as factorization of a nonsingular
// square matrix and as a rank-revealing crash over a rectangular one.
//
// Row bookkeeping stays in original row ids: L columns store original rows,
// U lives in pivot-position space, and row_perm/row_of_pos translate.
struct SparseLu {
  int m = 0;
  int rank = 0;
  std::vector<int> pivot_cols; // pivot position -> source column
  std::vector<int> row_perm;   // row -> pivot position, -1 if unpivoted
  std::vector<int> row_of_pos; // pivot position -> row
  SparseMatrix L;              // strictly lower part, unit diagonal implied
  SparseMatrix U;              // strictly upper part, position space
  std::vector<double> udiag;

  // x := U^{-1} L^{-1} P x. In: row-space values (size m). Out: coefficient
  // per pivot position (size rank); entries of x beyond rank are meaningless.
  void ftran(std::vector<double>& x) const;
  // out := P^T L^{-T} U^{-T} c for position-space c (size rank); out is
  // row-space (size m), zero on unpivoted rows.
  void btran(const std::vector<double>& c, std::vector<double>& out) const;
  // residual values left on unpivoted rows after eliminating a row-space rhs
  // against the factor; empty when rank == m
  std::vector<double> unpivoted_residual(std::vector<double> rhs,
                                         std::vector<int>* rows = nullptr) const;

 private:
  mutable std::vector<double> scratch_;
};

// rel_pivot_tol: a column counts as dependent when its best pivot candidate
// is below rel_pivot_tol times the column's largest original magnitude.
SparseLu lu_factorize(const SparseMatrix& A, const std::vector<int>& col_order,
                      double rel_pivot_tol = 1e-11);

} // namespace irbp
