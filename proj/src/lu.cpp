#include "irbp/lu.hpp"

#include <cmath>
#include <stdexcept>

namespace irbp {

SparseLu lu_factorize(const SparseMatrix& A, const std::vector<int>& col_order,
                      double rel_pivot_tol) {
  SparseLu F;
  F.m = A.rows;
  F.row_perm.assign(static_cast<std::size_t>(A.rows), -1);
  F.L.rows = A.rows;
  F.U.rows = 0;

  std::vector<double> w(static_cast<std::size_t>(A.rows), 0.0);
  std::vector<char> in_pattern(static_cast<std::size_t>(A.rows), 0);
  std::vector<int> visit_stamp(static_cast<std::size_t>(A.rows), -1);
  std::vector<int> pattern, post, stack_pos, stack_cur;
  std::vector<int> rcol;
  std::vector<double> vcol;
  int stamp = -1;

  for (int c : col_order) {
    if (F.rank == A.rows) break;
    if (c < 0 || c >= A.cols) throw std::out_of_range("lu_factorize: column out of range");

    pattern.clear();
    post.clear();
    ++stamp;
    double colscale = 0.0;
    for (int k = A.col_ptr[c]; k < A.col_ptr[c + 1]; ++k) {
      int r = A.row_idx[k];
      w[r] = A.val[k];
      in_pattern[r] = 1;
      pattern.push_back(r);
      colscale = std::max(colscale, std::fabs(A.val[k]));
    }

    // reach of the pivoted part of the pattern, depth-first
    std::size_t seeds = pattern.size();
    for (std::size_t si = 0; si < seeds; ++si) {
      int t0 = F.row_perm[pattern[si]];
      if (t0 < 0 || visit_stamp[t0] == stamp) continue;
      visit_stamp[t0] = stamp;
      stack_pos.assign(1, t0);
      stack_cur.assign(1, F.L.col_ptr[t0]);
      while (!stack_pos.empty()) {
        int t = stack_pos.back();
        int cur = stack_cur.back();
        int end = F.L.col_ptr[t + 1];
        int child = -1;
        while (cur < end) {
          int s = F.row_perm[F.L.row_idx[cur]];
          ++cur;
          if (s >= 0 && visit_stamp[s] != stamp) {
            child = s;
            break;
          }
        }
        stack_cur.back() = cur;
        if (child >= 0) {
          visit_stamp[child] = stamp;
          stack_pos.push_back(child);
          stack_cur.push_back(F.L.col_ptr[child]);
        } else {
          post.push_back(t);
          stack_pos.pop_back();
          stack_cur.pop_back();
        }
      }
    }

    // eliminate in topological order (reverse postorder)
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
      int t = *it;
      double y = w[F.row_of_pos[t]];
      if (y == 0.0) continue;
      for (int k = F.L.col_ptr[t]; k < F.L.col_ptr[t + 1]; ++k) {
        int rr = F.L.row_idx[k];
        if (!in_pattern[rr]) {
          in_pattern[rr] = 1;
          pattern.push_back(rr);
          w[rr] = 0.0;
        }
        w[rr] -= y * F.L.val[k];
      }
    }

    int prow = -1;
    double pmax = 0.0;
    for (int r : pattern) {
      if (F.row_perm[r] >= 0) continue;
      double v = std::fabs(w[r]);
      if (v > pmax) {
        pmax = v;
        prow = r;
      }
    }

    if (prow >= 0 && pmax > rel_pivot_tol * colscale) {
      int pos = F.rank;
      rcol.clear();
      vcol.clear();
      for (int t : post) {
        double y = w[F.row_of_pos[t]];
        if (y != 0.0) {
          rcol.push_back(t);
          vcol.push_back(y);
        }
      }
      F.U.rows = pos;
      F.U.push_column(rcol, vcol);
      F.udiag.push_back(w[prow]);

      rcol.clear();
      vcol.clear();
      double piv = w[prow];
      for (int r : pattern) {
        if (F.row_perm[r] >= 0 || r == prow || w[r] == 0.0) continue;
        rcol.push_back(r);
        vcol.push_back(w[r] / piv);
      }
      F.L.push_column(rcol, vcol);
      F.row_perm[prow] = pos;
      F.row_of_pos.push_back(prow);
      F.pivot_cols.push_back(c);
      ++F.rank;
    }

    for (int r : pattern) {
      w[r] = 0.0;
      in_pattern[r] = 0;
    }
  }
  F.U.rows = F.rank;
  return F;
}

void SparseLu::ftran(std::vector<double>& x) const {
  for (int t = 0; t < rank; ++t) {
    double y = x[row_of_pos[t]];
    if (y == 0.0) continue;
    for (int k = L.col_ptr[t]; k < L.col_ptr[t + 1]; ++k) x[L.row_idx[k]] -= y * L.val[k];
  }
  scratch_.resize(static_cast<std::size_t>(rank));
  for (int t = 0; t < rank; ++t) scratch_[t] = x[row_of_pos[t]];
  for (int s = rank - 1; s >= 0; --s) {
    double xs = scratch_[s] / udiag[s];
    scratch_[s] = xs;
    if (xs == 0.0) continue;
    for (int k = U.col_ptr[s]; k < U.col_ptr[s + 1]; ++k) scratch_[U.row_idx[k]] -= U.val[k] * xs;
  }
  for (int t = 0; t < rank; ++t) x[t] = scratch_[t];
}

void SparseLu::btran(const std::vector<double>& c, std::vector<double>& out) const {
  scratch_.assign(c.begin(), c.begin() + rank);
  for (int s = 0; s < rank; ++s) {
    double acc = scratch_[s];
    for (int k = U.col_ptr[s]; k < U.col_ptr[s + 1]; ++k)
      acc -= U.val[k] * scratch_[U.row_idx[k]];
    scratch_[s] = acc / udiag[s];
  }
  for (int t = rank - 1; t >= 0; --t) {
    double acc = scratch_[t];
    for (int k = L.col_ptr[t]; k < L.col_ptr[t + 1]; ++k) {
      int pos = row_perm[L.row_idx[k]];
      if (pos >= 0) acc -= L.val[k] * scratch_[pos];
    }
    scratch_[t] = acc;
  }
  out.assign(static_cast<std::size_t>(m), 0.0);
  for (int t = 0; t < rank; ++t) out[row_of_pos[t]] = scratch_[t];
}

std::vector<double> SparseLu::unpivoted_residual(std::vector<double> rhs,
                                                 std::vector<int>* rows) const {
  for (int t = 0; t < rank; ++t) {
    double y = rhs[row_of_pos[t]];
    if (y == 0.0) continue;
    for (int k = L.col_ptr[t]; k < L.col_ptr[t + 1]; ++k) rhs[L.row_idx[k]] -= y * L.val[k];
  }
  std::vector<double> res;
  if (rows) rows->clear();
  for (int r = 0; r < m; ++r)
    if (row_perm[r] < 0) {
      res.push_back(rhs[r]);
      if (rows) rows->push_back(r);
    }
  return res;
}

} // namespace irbp
