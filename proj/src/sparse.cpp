#include "irbp/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irbp {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<std::tuple<int, int, double>> trips) {
  for (auto& [r, c, v] : trips)
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::out_of_range("triplet index outside matrix");
  std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
  });
  SparseMatrix A;
  A.rows = rows;
  A.cols = cols;
  A.col_ptr.assign(1, 0);
  A.col_ptr.reserve(cols + 1);
  std::size_t i = 0;
  for (int c = 0; c < cols; ++c) {
    while (i < trips.size() && std::get<1>(trips[i]) == c) {
      int r = std::get<0>(trips[i]);
      double v = std::get<2>(trips[i]);
      for (++i; i < trips.size() && std::get<1>(trips[i]) == c && std::get<0>(trips[i]) == r; ++i)
        v += std::get<2>(trips[i]);
      A.row_idx.push_back(r);
      A.val.push_back(v);
    }
    A.col_ptr.push_back(static_cast<int>(A.row_idx.size()));
  }
  return A;
}

void SparseMatrix::push_column(const std::vector<int>& r, const std::vector<double>& v) {
  if (r.size() != v.size()) throw std::invalid_argument("push_column: length mismatch");
  std::vector<std::size_t> order(r.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
  for (std::size_t i : order) {
    if (r[i] < 0 || r[i] >= rows) throw std::out_of_range("push_column: row outside matrix");
    row_idx.push_back(r[i]);
    val.push_back(v[i]);
  }
  ++cols;
  col_ptr.push_back(static_cast<int>(row_idx.size()));
}

void gaxpy(const SparseMatrix& A, const double* x, double* y) {
  for (int j = 0; j < A.cols; ++j) {
    double xj = x[j];
    if (xj == 0.0) continue;
    for (int k = A.col_ptr[j]; k < A.col_ptr[j + 1]; ++k) y[A.row_idx[k]] += A.val[k] * xj;
  }
}

double col_dot(const SparseMatrix& A, int j, const double* y) {
  double acc = 0.0;
  for (int k = A.col_ptr[j]; k < A.col_ptr[j + 1]; ++k) acc += A.val[k] * y[A.row_idx[k]];
  return acc;
}

double residual_inf(const SparseMatrix& A, const double* x, const double* b) {
  std::vector<double> r(b, b + A.rows);
  for (double& v : r) v = -v;
  gaxpy(A, x, r.data());
  double m = 0.0;
  for (double v : r) m = std::max(m, std::fabs(v));
  return m;
}

SparseMatrix hcat(const SparseMatrix& L, const SparseMatrix& R) {
  if (L.rows != R.rows) throw std::invalid_argument("hcat: row count mismatch");
  SparseMatrix A = L;
  A.cols = L.cols + R.cols;
  A.row_idx.insert(A.row_idx.end(), R.row_idx.begin(), R.row_idx.end());
  A.val.insert(A.val.end(), R.val.begin(), R.val.end());
  int base = L.col_ptr.back();
  for (int j = 1; j <= R.cols; ++j) A.col_ptr.push_back(base + R.col_ptr[j]);
  return A;
}

} // namespace irbp
