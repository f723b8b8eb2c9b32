#include "irbp/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irbp/quadrature.hpp"

namespace irbp {
namespace {

double pow2(int e) { return std::ldexp(1.0, e); }

double entry_interval(const BasisId& a, const BasisId& b) {
  auto sa = support_box(a), sb = support_box(b);
  double lo = std::max(sa[0], sb[0]), hi = std::min(sa[1], sb[1]);
  if (!(lo < hi)) return 0.0;
  // slope kinks only at the two hat centers
  double cuts[4] = {lo, hi, -1.0 + a.p * pow2(1 - a.level), -1.0 + b.p * pow2(1 - b.level)};
  std::sort(cuts, cuts + 4);
  double acc = 0.0;
  for (int i = 0; i + 1 < 4; ++i) {
    double l = std::clamp(cuts[i], lo, hi), r = std::clamp(cuts[i + 1], lo, hi);
    if (!(l < r)) continue;
    double m = 0.5 * (l + r);
    acc += eval_grad(a, m)[0] * eval_grad(b, m)[0] * (r - l);
  }
  return acc;
}

// The six mesh triangles around a node, as (du,dv) offsets of the two
// non-center vertices on the level lattice.
constexpr int tri_off[6][4] = {{-1, 0, -1, -1}, {0, 1, -1, 0}, {1, 1, 0, 1},
                               {1, 0, 1, 1},    {0, -1, 1, 0}, {-1, -1, 0, -1}};

double entry_square(const BasisId& a, const BasisId& b) {
  // integrate over the finer function's triangles: the coarse mesh lines are
  // a subset of the fine ones, so both gradients are constant on each
  const BasisId& fine = a.level >= b.level ? a : b;
  const BasisId& coarse = a.level >= b.level ? b : a;
  double h = pow2(-fine.level);
  double cx = fine.p * h, cy = fine.q * h;
  double area = 0.5 * h * h;
  double acc = 0.0;
  for (const auto& t : tri_off) {
    double x1 = cx + t[0] * h, y1 = cy + t[1] * h;
    double x2 = cx + t[2] * h, y2 = cy + t[3] * h;
    double gx = (cx + x1 + x2) / 3.0, gy = (cy + y1 + y2) / 3.0;
    auto gf = eval_grad(fine, gx, gy);
    auto gc = eval_grad(coarse, gx, gy);
    acc += area * (gf[0] * gc[0] + gf[1] * gc[1]);
  }
  return acc;
}

} // namespace

double stiffness_entry(const BasisId& a, const BasisId& b) {
  if (a.family != b.family) throw std::invalid_argument("stiffness_entry: family mismatch");
  if (!supports_overlap(a, b)) return 0.0;
  return a.family == Family::interval ? entry_interval(a, b) : entry_square(a, b);
}

double load_entry(const BasisId& id, const std::function<double(double)>& rhs, double rel_tol,
                  const std::vector<double>& breakpoints) {
  if (id.family != Family::interval) throw std::invalid_argument("load_entry: interval id needed");
  auto s = support_box(id);
  double center = 0.5 * (s[0] + s[1]);
  std::vector<double> cuts = breakpoints;
  cuts.push_back(center);
  auto integrand = [&](double x) { return rhs(x) * eval(id, x); };
  return integrate_adaptive(integrand, s[0], s[1], rel_tol, cuts);
}

double load_entry(const BasisId& id, const std::function<double(double, double)>& rhs,
                  double rel_tol) {
  if (id.family != Family::square) throw std::invalid_argument("load_entry: square id needed");
  double h = pow2(-id.level);
  double cx = id.p * h, cy = id.q * h;
  auto integrand = [&](double x, double y) { return rhs(x, y) * eval(id, x, y); };
  double acc = 0.0;
  for (const auto& t : tri_off) {
    Triangle tri{cx, cy, cx + t[0] * h, cy + t[1] * h, cx + t[2] * h, cy + t[3] * h};
    acc += integrate_triangle_adaptive(integrand, tri, rel_tol);
  }
  return acc;
}

SparseMatrix stiffness_matrix(const IndexSet& rows, const std::vector<BasisId>& cols) {
  SparseMatrix A;
  A.rows = static_cast<int>(rows.size());
  std::vector<int> levels;
  for (const BasisId& id : rows.ids())
    if (levels.empty() || levels.back() != id.level) levels.push_back(id.level);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<int> ridx;
  std::vector<double> rval;
  for (const BasisId& c : cols) {
    ridx.clear();
    rval.clear();
    auto cb = support_box(c);
    for (int lev : levels) {
      long n = (1L << lev) - 1;
      if (c.family == Family::interval) {
        double w = pow2(1 - lev);
        long plo = std::max(1L, static_cast<long>(std::floor((cb[0] + 1.0 - w) / w)));
        long phi = std::min(n, static_cast<long>(std::ceil((cb[1] + 1.0 + w) / w)));
        for (long p = plo; p <= phi; ++p) {
          BasisId r{c.family, lev, static_cast<std::int32_t>(p), 0};
          long i = rows.index_of(r);
          if (i < 0) continue;
          double v = stiffness_entry(r, c);
          if (v != 0.0) {
            ridx.push_back(static_cast<int>(i));
            rval.push_back(v);
          }
        }
      } else {
        double h = pow2(-lev);
        long plo = std::max(1L, static_cast<long>(std::floor((cb[0] - h) / h)));
        long phi = std::min(n, static_cast<long>(std::ceil((cb[1] + h) / h)));
        long qlo = std::max(1L, static_cast<long>(std::floor((cb[2] - h) / h)));
        long qhi = std::min(n, static_cast<long>(std::ceil((cb[3] + h) / h)));
        for (long q = qlo; q <= qhi; ++q)
          for (long p = plo; p <= phi; ++p) {
            BasisId r{c.family, lev, static_cast<std::int32_t>(p), static_cast<std::int32_t>(q)};
            long i = rows.index_of(r);
            if (i < 0) continue;
            double v = stiffness_entry(r, c);
            if (v != 0.0) {
              ridx.push_back(static_cast<int>(i));
              rval.push_back(v);
            }
          }
      }
    }
    A.push_column(ridx, rval);
  }
  return A;
}

BlockSystem build_block_system(const IndexSet& rhat, const IndexSet& c_prev, const IndexSet& chat,
                               const std::function<double(const BasisId&)>& load_fn) {
  BlockSystem s;
  s.row_ids = rhat.ids();
  s.col_ids = c_prev.ids();
  s.split = c_prev.size();
  s.col_ids.insert(s.col_ids.end(), chat.ids().begin(), chat.ids().end());
  s.A = stiffness_matrix(rhat, s.col_ids);
  s.b.reserve(s.row_ids.size());
  for (const BasisId& r : s.row_ids) s.b.push_back(load_fn(r));
  return s;
}

} // namespace irbp
