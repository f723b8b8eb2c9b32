#include "irbp/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace irbp {

Problem make_arctan_problem(std::vector<double> centers, double alpha) {
  auto fronts = [centers, alpha](double x) {
    double s = 0.0;
    for (double c : centers) s += std::atan(alpha * (x - c));
    return s;
  };
  double sr = fronts(1.0), sl = fronts(-1.0);
  double lin_a = -(sr - sl) / 2.0, lin_b = -(sr + sl) / 2.0;
  Problem p;
  p.family = Family::interval;
  p.breakpoints = centers;
  p.exact1 = [fronts, lin_a, lin_b](double x) { return fronts(x) + lin_a * x + lin_b; };
  p.rhs1 = [centers, alpha](double x) {
    double s = 0.0;
    for (double c : centers) {
      double t = alpha * (x - c);
      double d = 1.0 + t * t;
      s += 2.0 * alpha * alpha * alpha * (x - c) / (d * d);
    }
    return s;
  };
  return p;
}

Problem problem_by_name(const std::string& name) {
  const double alpha = 100.0 * M_PI;
  if (name == "arctan4") {
    Problem p = make_arctan_problem({-0.5, 0.0, 0.25, 0.5}, alpha);
    p.name = name;
    return p;
  }
  if (name == "arctan2") {
    Problem p = make_arctan_problem({0.0, 0.5}, alpha);
    p.name = name;
    return p;
  }
  if (name == "poly2d") {
    Problem p;
    p.name = name;
    p.family = Family::square;
    p.exact2 = [](double x, double y) { return 10.0 * x * (x - 1.0) * y * (y - 1.0); };
    p.rhs2 = [](double x, double y) { return -20.0 * x * (x - 1.0) - 20.0 * y * (y - 1.0); };
    return p;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() { return {"arctan4", "arctan2", "poly2d"}; }

int default_grid_points(Family f) { return f == Family::interval ? 4097 : 513; }

double relative_l2_error(const std::vector<double>& values, const Problem& p,
                         int points_per_side) {
  int P = points_per_side;
  double num = 0.0, den = 0.0;
  if (p.family == Family::interval) {
    if (static_cast<int>(values.size()) != P) throw std::invalid_argument("grid size mismatch");
    for (int j = 1; j < P - 1; ++j) {
      double x = -1.0 + 2.0 * j / (P - 1);
      double u = p.exact1(x);
      double d = values[static_cast<std::size_t>(j)] - u;
      num += d * d;
      den += u * u;
    }
  } else {
    if (static_cast<long>(values.size()) != static_cast<long>(P) * P)
      throw std::invalid_argument("grid size mismatch");
    for (int jy = 1; jy < P - 1; ++jy)
      for (int jx = 1; jx < P - 1; ++jx) {
        double u = p.exact2(double(jx) / (P - 1), double(jy) / (P - 1));
        double d = values[static_cast<std::size_t>(jy) * P + jx] - u;
        num += d * d;
        den += u * u;
      }
  }
  if (den == 0.0) throw std::invalid_argument("exact solution vanishes on the grid");
  return std::sqrt(num / den);
}

} // namespace irbp
