#include "irbp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "irbp/kernels.hpp"
#include "irbp/lu.hpp"

namespace irbp {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::iteration_limit: return "iteration_limit";
    case LpStatus::numerical_trouble: return "numerical_trouble";
  }
  return "unknown";
}

namespace {

struct Eta {
  int pos;
  std::vector<double> d;
};

class Engine {
 public:
  Engine(const SparseMatrix& A, const std::vector<LpVar>& vars, const std::vector<double>& b,
         const LpOptions& opts)
      : A_(A), vars_(vars), b_(b), o_(opts), m_(A.rows) {
    bscale_ = 1.0;
    for (double v : b_) bscale_ = std::max(bscale_, 1.0 + std::fabs(v));
  }

  SimplexResult run(const std::vector<int>& crash_cols) {
    SimplexResult res;
    if (static_cast<int>(b_.size()) != m_) throw std::invalid_argument("rhs size mismatch");
    for (const LpVar& v : vars_)
      if (v.col < 0 || v.col >= A_.cols || (v.sign != 1.0 && v.sign != -1.0))
        throw std::invalid_argument("bad LP variable");

    if (!crash(crash_cols, res)) return res;

    long cap = o_.max_iter > 0 ? o_.max_iter : 50L * (m_ + static_cast<long>(vars_.size()));
    int degen_run = 0;
    bool bland = false;
    int verify_left = o_.verify_rounds;

    std::vector<double> y, t_cache(static_cast<std::size_t>(A_.cols));
    std::vector<double> d;

    while (true) {
      if (res.iterations >= cap) {
        res.status = LpStatus::iteration_limit;
        res.message = "iteration limit " + std::to_string(cap) + " reached";
        break;
      }

      price(y, t_cache);
      int enter = pick_entering(t_cache, bland);
      if (enter < 0) {
        // dual feasible; confirm the primal side on a fresh factorization
        if (!refactor(res)) break;
        double r = residual_inf_full();
        if (r <= o_.feas_tol * bscale_) {
          res.status = LpStatus::optimal;
          res.residual = r;
          break;
        }
        if (--verify_left < 0) {
          res.status = LpStatus::numerical_trouble;
          res.residual = r;
          res.message = "residual " + std::to_string(r) + " after verification rounds";
          break;
        }
        continue; // resume pricing from the recomputed state
      }

      ftran_signed_column(enter, d);
      int leave = ratio_test(d, bland);
      if (leave < 0) {
        res.status = LpStatus::numerical_trouble;
        res.message = "no admissible pivot in the ratio test (column " +
                      std::to_string(vars_[enter].col) + ")";
        break;
      }

      double step = xB_[leave] / d[leave];
      if (step < o_.degen_tol) {
        if (++degen_run >= o_.bland_after) bland = true;
      } else {
        degen_run = 0;
        bland = false;
      }

      kernels::axpy(-step, d.data(), xB_.data(), xB_.size());
      for (double& v : xB_)
        if (v < 0.0) v = 0.0;
      xB_[leave] = step;
      pos_of_var_[basis_[leave]] = -1;
      pos_of_var_[enter] = leave;
      basis_[leave] = enter;
      etas_.push_back({leave, d});
      ++res.iterations;

      if (static_cast<int>(etas_.size()) >= o_.refactor_every) {
        if (!refactor(res)) break;
      }
    }

    finish(res);
    return res;
  }

 private:
  bool crash(const std::vector<int>& crash_cols, SimplexResult& res) {
    SparseLu pre = lu_factorize(A_, crash_cols);
    if (pre.rank < m_) {
      res.status = LpStatus::numerical_trouble;
      res.message = "crash rank " + std::to_string(pre.rank) + " of " + std::to_string(m_) +
                    "; dependent rows must be dropped first";
      return false;
    }
    std::vector<double> x0 = b_;
    pre.ftran(x0);

    std::map<std::pair<int, int>, int> var_of;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      var_of.try_emplace({vars_[i].col, vars_[i].sign > 0 ? 1 : -1}, static_cast<int>(i));

    basis_.resize(static_cast<std::size_t>(m_));
    pos_of_var_.assign(vars_.size(), -1);
    for (int t = 0; t < m_; ++t) {
      int col = pre.pivot_cols[t];
      int sgn = x0[t] >= 0.0 ? 1 : -1;
      auto it = var_of.find({col, sgn});
      if (it == var_of.end()) it = var_of.find({col, -sgn});
      if (it == var_of.end()) throw std::invalid_argument("crash column lacks signed variables");
      basis_[t] = it->second;
      pos_of_var_[it->second] = t;
    }
    return refactor(res);
  }

  bool refactor(SimplexResult& res) {
    SparseMatrix B;
    B.rows = m_;
    std::vector<int> rr;
    std::vector<double> vv;
    for (int t = 0; t < m_; ++t) {
      const LpVar& v = vars_[basis_[t]];
      rr.clear();
      vv.clear();
      for (int k = A_.col_ptr[v.col]; k < A_.col_ptr[v.col + 1]; ++k) {
        rr.push_back(A_.row_idx[k]);
        vv.push_back(v.sign * A_.val[k]);
      }
      B.push_column(rr, vv);
    }
    std::vector<int> order(static_cast<std::size_t>(m_));
    for (int t = 0; t < m_; ++t) order[t] = t;
    factor_ = lu_factorize(B, order);
    ++res.refactorizations;
    if (factor_.rank < m_) {
      res.status = LpStatus::numerical_trouble;
      res.message = "singular basis at refactorization (rank " + std::to_string(factor_.rank) +
                    ")";
      return false;
    }
    // pivot positions follow basis slots only up to the row permutation; remap
    // so that position t means slot t
    etas_.clear();
    xB_ = b_;
    factor_.ftran(xB_);
    xB_.resize(static_cast<std::size_t>(m_));
    reorder_to_slots(xB_);
    for (double& v : xB_)
      if (v < 0.0) v = 0.0;
    return true;
  }

  // lu pivots columns in slot order, so position t == slot t when every
  // column pivots, which full rank guarantees with the identity order
  void reorder_to_slots(std::vector<double>&) const {}

  void price(std::vector<double>& y, std::vector<double>& t_cache) {
    std::vector<double> cB(static_cast<std::size_t>(m_));
    for (int t = 0; t < m_; ++t) cB[t] = vars_[basis_[t]].cost;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = kernels::dot(it->d.data(), cB.data(), cB.size());
      cB[it->pos] -= (s - cB[it->pos]) / it->d[it->pos];
    }
    factor_.btran(cB, y);
    for (int j = 0; j < A_.cols; ++j) t_cache[j] = col_dot(A_, j, y.data());
  }

  int pick_entering(const std::vector<double>& t_cache, bool bland) const {
    int best = -1;
    double best_red = -o_.dual_tol;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (pos_of_var_[i] >= 0) continue;
      double red = vars_[i].cost - vars_[i].sign * t_cache[vars_[i].col];
      if (red < best_red) {
        best = static_cast<int>(i);
        if (bland) break;
        best_red = red;
      }
    }
    return best;
  }

  void ftran_signed_column(int var, std::vector<double>& d) {
    const LpVar& v = vars_[var];
    d.assign(static_cast<std::size_t>(m_), 0.0);
    for (int k = A_.col_ptr[v.col]; k < A_.col_ptr[v.col + 1]; ++k)
      d[A_.row_idx[k]] = v.sign * A_.val[k];
    factor_.ftran(d);
    d.resize(static_cast<std::size_t>(m_));
    for (const Eta& e : etas_) {
      double t = d[e.pos] / e.d[e.pos];
      if (t != 0.0) {
        kernels::axpy(-t, e.d.data(), d.data(), d.size());
      }
      d[e.pos] = t;
    }
  }

  int ratio_test(const std::vector<double>& d, bool bland) const {
    double theta = -1.0;
    for (int t = 0; t < m_; ++t)
      if (d[t] > o_.ratio_tol) {
        double r = xB_[t] / d[t];
        if (theta < 0.0 || r < theta) theta = r;
      }
    if (theta < 0.0) return -1;
    double bound = theta + 1e-9 * (1.0 + theta);
    int pick = -1;
    double best_mag = -1.0;
    for (int t = 0; t < m_; ++t)
      if (d[t] > o_.ratio_tol && xB_[t] / d[t] <= bound) {
        if (bland) {
          if (pick < 0 || basis_[t] < basis_[pick]) pick = t;
        } else if (d[t] > best_mag) {
          best_mag = d[t];
          pick = t;
        }
      }
    return pick;
  }

  double residual_inf_full() const {
    std::vector<double> r(b_.begin(), b_.end());
    for (int t = 0; t < m_; ++t) {
      const LpVar& v = vars_[basis_[t]];
      double x = xB_[t];
      if (x == 0.0) continue;
      for (int k = A_.col_ptr[v.col]; k < A_.col_ptr[v.col + 1]; ++k)
        r[A_.row_idx[k]] -= v.sign * A_.val[k] * x;
    }
    double mx = 0.0;
    for (double v : r) mx = std::max(mx, std::fabs(v));
    return mx;
  }

  void finish(SimplexResult& res) const {
    res.x.assign(vars_.size(), 0.0);
    double obj = 0.0;
    for (int t = 0; t < m_; ++t) {
      res.x[basis_[t]] = xB_[t];
      obj += vars_[basis_[t]].cost * xB_[t];
    }
    res.objective = obj;
    if (res.residual == 0.0 && res.status != LpStatus::optimal) res.residual = residual_inf_full();
  }

  const SparseMatrix& A_;
  const std::vector<LpVar>& vars_;
  const std::vector<double>& b_;
  const LpOptions& o_;
  int m_;
  double bscale_;
  SparseLu factor_;
  std::vector<Eta> etas_;
  std::vector<int> basis_;
  std::vector<int> pos_of_var_;
  std::vector<double> xB_;
};

} // namespace

SimplexResult revised_simplex(const SparseMatrix& A, const std::vector<LpVar>& vars,
                              const std::vector<double>& b, const std::vector<int>& crash_cols,
                              const LpOptions& opts) {
  Engine e(A, vars, b, opts);
  return e.run(crash_cols);
}

} // namespace irbp
