#pragma once
#include <tuple>
#include <vector>

namespace irbp {

// Compressed sparse column matrix. Row indices are ascending inside each
// column; duplicate triplets are summed on construction.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> col_ptr{0};
  std::vector<int> row_idx;
  std::vector<double> val;

  int nnz() const { return static_cast<int>(row_idx.size()); }

  static SparseMatrix from_triplets(int rows, int cols,
                                    std::vector<std::tuple<int, int, double>> trips);

  // Appends one column given parallel (row, value) lists; rows need not be
  // sorted. Used by builders that emit the matrix column by column.
  void push_column(const std::vector<int>& r, const std::vector<double>& v);
};

// y += A x
void gaxpy(const SparseMatrix& A, const double* x, double* y);
// dot of column j with a dense vector
double col_dot(const SparseMatrix& A, int j, const double* y);
// infinity norm of A x - b
double residual_inf(const SparseMatrix& A, const double* x, const double* b);

// Horizontal concatenation [L R]; row counts must match.
SparseMatrix hcat(const SparseMatrix& L, const SparseMatrix& R);

} // namespace irbp
