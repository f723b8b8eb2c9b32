#pragma once
#include <functional>
#include <string>
#include <vector>

#include "irbp/basis.hpp"

namespace irbp {

// A Poisson problem with homogeneous Dirichlet data and a known solution:
// interval problems live on (-1,1), square problems on (0,1)^2.
struct Problem {
  std::string name;
  Family family{Family::interval};
  std::function<double(double)> rhs1;
  std::function<double(double, double)> rhs2;
  std::function<double(double)> exact1;
  std::function<double(double, double)> exact2;
  // sharp features of the rhs, forwarded to load quadrature
  std::vector<double> breakpoints;
};

// Sum of arctan fronts steepened by `alpha`, plus the linear correction that
// zeroes the boundary values; the rhs is the matching -u''.
Problem make_arctan_problem(std::vector<double> centers, double alpha);

// Registered names: arctan4, arctan2, poly2d.
Problem problem_by_name(const std::string& name);
std::vector<std::string> problem_names();

// Comparison grid: uniform closed grid, this many nodes per axis.
int default_grid_points(Family f);

// l2 error of grid samples against the known solution over the interior
// nodes, relative to the solution norm. `values` holds P (interval) or P*P
// (square, x fastest) samples of the approximation on the closed grid.
double relative_l2_error(const std::vector<double>& values, const Problem& p, int points_per_side);

} // namespace irbp
