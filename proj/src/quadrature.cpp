#include "irbp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace irbp {
namespace {

constexpr double gl_x[4] = {0.0, 0.4058451513773971669, 0.7415311855993944399,
                            0.9491079123427585245};
constexpr double gl_w[4] = {0.4179591836734693878, 0.3818300505051189450, 0.2797053914892766679,
                            0.1294849661688696933};

double gl7(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = gl_w[0] * f(c);
  for (int i = 1; i < 4; ++i) acc += gl_w[i] * (f(c - h * gl_x[i]) + f(c + h * gl_x[i]));
  return acc * h;
}

double adapt1(const std::function<double(double)>& f, double a, double b, double rel_tol,
              int depth, int max_depth, int min_depth) {
  double whole = gl7(f, a, b);
  double m = 0.5 * (a + b);
  double halves = gl7(f, a, m) + gl7(f, m, b);
  double err = std::fabs(whole - halves);
  if (depth >= min_depth && err <= rel_tol * (std::fabs(halves) + 1e-300)) return halves;
  if (depth >= max_depth)
    throw QuadratureError("interval quadrature hit depth " + std::to_string(max_depth) +
                          ", error estimate " + std::to_string(err));
  return adapt1(f, a, m, rel_tol, depth + 1, max_depth, min_depth) +
         adapt1(f, m, b, rel_tol, depth + 1, max_depth, min_depth);
}

// degree-5 rule, weights normalized to unit total
constexpr double tw_c = 0.225;
constexpr double tw_a = 0.1323941527885061807;
constexpr double tw_b = 0.1259391805448271526;
constexpr double tp_a1 = 0.0597158717897698205;
constexpr double tp_a2 = 0.4701420641051150898;
constexpr double tp_b1 = 0.7974269853530873224;
constexpr double tp_b2 = 0.1012865073234563388;

double tri7(const std::function<double(double, double)>& f, const Triangle& t) {
  double area2 = std::fabs((t.x1 - t.x0) * (t.y2 - t.y0) - (t.x2 - t.x0) * (t.y1 - t.y0));
  auto at = [&](double l0, double l1, double l2) {
    return f(l0 * t.x0 + l1 * t.x1 + l2 * t.x2, l0 * t.y0 + l1 * t.y1 + l2 * t.y2);
  };
  double acc = tw_c * at(1.0 / 3, 1.0 / 3, 1.0 / 3);
  acc += tw_a * (at(tp_a1, tp_a2, tp_a2) + at(tp_a2, tp_a1, tp_a2) + at(tp_a2, tp_a2, tp_a1));
  acc += tw_b * (at(tp_b1, tp_b2, tp_b2) + at(tp_b2, tp_b1, tp_b2) + at(tp_b2, tp_b2, tp_b1));
  return acc * 0.5 * area2;
}

double adapt2(const std::function<double(double, double)>& f, const Triangle& t, double rel_tol,
              int depth, int max_depth, int min_depth) {
  double whole = tri7(f, t);
  double mx01 = 0.5 * (t.x0 + t.x1), my01 = 0.5 * (t.y0 + t.y1);
  double mx12 = 0.5 * (t.x1 + t.x2), my12 = 0.5 * (t.y1 + t.y2);
  double mx20 = 0.5 * (t.x2 + t.x0), my20 = 0.5 * (t.y2 + t.y0);
  Triangle sub[4] = {{t.x0, t.y0, mx01, my01, mx20, my20},
                     {mx01, my01, t.x1, t.y1, mx12, my12},
                     {mx20, my20, mx12, my12, t.x2, t.y2},
                     {mx01, my01, mx12, my12, mx20, my20}};
  double halves = 0.0;
  for (const Triangle& s : sub) halves += tri7(f, s);
  double err = std::fabs(whole - halves);
  if (depth >= min_depth && err <= rel_tol * (std::fabs(halves) + 1e-300)) return halves;
  if (depth >= max_depth)
    throw QuadratureError("triangle quadrature hit depth " + std::to_string(max_depth) +
                          ", error estimate " + std::to_string(err));
  double acc = 0.0;
  for (const Triangle& s : sub) acc += adapt2(f, s, rel_tol, depth + 1, max_depth, min_depth);
  return acc;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breakpoints, int max_depth,
                          int min_depth) {
  if (!(a < b)) return a == b ? 0.0 : -integrate_adaptive(f, b, a, rel_tol, breakpoints, max_depth,
                                                          min_depth);
  std::vector<double> cuts{a};
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i])
      acc += adapt1(f, cuts[i], cuts[i + 1], rel_tol, 0, max_depth, min_depth);
  return acc;
}

double integrate_triangle_adaptive(const std::function<double(double, double)>& f,
                                   const Triangle& t, double rel_tol, int max_depth,
                                   int min_depth) {
  return adapt2(f, t, rel_tol, 0, max_depth, min_depth);
}

} // namespace irbp
