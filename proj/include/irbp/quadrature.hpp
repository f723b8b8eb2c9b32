#pragma once
#include <functional>
#include <stdexcept>
#include <vector>

namespace irbp {

// Raised when the depth cap is hit before successive estimates agree; the
// message carries the achieved error estimate.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive bisection on [a,b]: a 7-point Gauss-Legendre estimate is accepted
// once it agrees with the two-half refinement to rel_tol (locally relative).
// Interior breakpoints split the interval first; integrands with sharp
// features should list them. The first min_depth levels always refine.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, const std::vector<double>& breakpoints = {},
                          int max_depth = 32, int min_depth = 2);

struct Triangle {
  double x0, y0, x1, y1, x2, y2;
};

// Same scheme on a triangle: degree-5 7-point rule against the 4 congruent
// midpoint subtriangles.
double integrate_triangle_adaptive(const std::function<double(double, double)>& f,
                                   const Triangle& t, double rel_tol = 1e-10, int max_depth = 20,
                                   int min_depth = 1);

} // namespace irbp
