#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irbp/problems.hpp"

#include <cmath>

using namespace irbp;

TEST_CASE("registered problems and boundary values") {
  for (const auto& name : problem_names()) {
    Problem p = problem_by_name(name);
    CHECK(p.name == name);
    if (p.family == Family::interval) {
      CHECK(std::fabs(p.exact1(-1.0)) < 1e-13);
      CHECK(std::fabs(p.exact1(1.0)) < 1e-13);
    } else {
      for (double t : {0.0, 0.3, 0.71, 1.0}) {
        CHECK(p.exact2(t, 0.0) == 0.0);
        CHECK(p.exact2(t, 1.0) == doctest::Approx(0.0));
        CHECK(p.exact2(0.0, t) == 0.0);
        CHECK(p.exact2(1.0, t) == doctest::Approx(0.0));
      }
    }
  }
  CHECK_THROWS_AS(problem_by_name("nope"), std::invalid_argument);
}

TEST_CASE("polynomial square problem values") {
  Problem p = problem_by_name("poly2d");
  CHECK(p.exact2(0.5, 0.5) == doctest::Approx(0.625));
  CHECK(p.rhs2(0.5, 0.5) == doctest::Approx(10.0));
  // five-point difference of a biquadratic reproduces the laplacian exactly
  double h = 1.0 / 64;
  for (double x : {0.25, 0.5, 0.625}) {
    for (double y : {0.375, 0.5}) {
      double lap = (p.exact2(x - h, y) + p.exact2(x + h, y) + p.exact2(x, y - h) +
                    p.exact2(x, y + h) - 4.0 * p.exact2(x, y)) /
                   (h * h);
      CHECK(-lap == doctest::Approx(p.rhs2(x, y)).epsilon(1e-9));
    }
  }
}

TEST_CASE("interval rhs is minus the second derivative, at second order") {
  Problem p = problem_by_name("arctan4");
  // away from the fronts the difference quotient converges at rate >= 1.9
  for (double x : {-0.777, 0.123, 0.823}) {
    double e_prev = 0.0;
    double rate_min = 100.0;
    for (int k = 0; k < 3; ++k) {
      double h = 1e-2 / (1 << k);
      double fd = -(p.exact1(x - h) - 2.0 * p.exact1(x) + p.exact1(x + h)) / (h * h);
      double e = std::fabs(fd - p.rhs1(x));
      if (k > 0 && e > 0.0) rate_min = std::min(rate_min, std::log2(e_prev / e));
      e_prev = e;
    }
    CHECK(rate_min > 1.9);
  }
}

TEST_CASE("front centers are published as breakpoints") {
  Problem p = problem_by_name("arctan2");
  REQUIRE(p.breakpoints.size() == 2);
  CHECK(p.breakpoints[0] == 0.0);
  CHECK(p.breakpoints[1] == 0.5);
  CHECK(problem_by_name("arctan4").breakpoints.size() == 4);
  CHECK(problem_by_name("poly2d").breakpoints.empty());
}

TEST_CASE("generic front factory keeps the boundary pinned") {
  Problem p = make_arctan_problem({-0.3, 0.8}, 7.0);
  CHECK(std::fabs(p.exact1(-1.0)) < 1e-14);
  CHECK(std::fabs(p.exact1(1.0)) < 1e-14);
  double x = 0.31, h = 1e-4;
  double fd = -(p.exact1(x - h) - 2.0 * p.exact1(x) + p.exact1(x + h)) / (h * h);
  CHECK(fd == doctest::Approx(p.rhs1(x)).epsilon(1e-4));
}

TEST_CASE("relative error metric") {
  Problem p = problem_by_name("arctan2");
  int P = 257;
  std::vector<double> exact(P);
  for (int j = 0; j < P; ++j) exact[j] = p.exact1(-1.0 + 2.0 * j / (P - 1));
  CHECK(relative_l2_error(exact, p, P) < 1e-14);
  auto off1 = exact;
  for (int j = 1; j < P - 1; ++j) off1[j] += 0.01;
  auto off2 = exact;
  for (int j = 1; j < P - 1; ++j) off2[j] += 0.02;
  double e1 = relative_l2_error(off1, p, P);
  double e2 = relative_l2_error(off2, p, P);
  CHECK(e1 > 0.0);
  CHECK(e2 == doctest::Approx(2.0 * e1).epsilon(1e-10));
  // boundary samples are ignored
  auto off3 = exact;
  off3[0] += 100.0;
  off3[P - 1] += 100.0;
  CHECK(relative_l2_error(off3, p, P) < 1e-14);
  CHECK_THROWS(relative_l2_error(std::vector<double>(P + 1), p, P));

  Problem q = problem_by_name("poly2d");
  int Q = 33;
  std::vector<double> g(static_cast<std::size_t>(Q) * Q, 0.0);
  for (int jy = 0; jy < Q; ++jy)
    for (int jx = 0; jx < Q; ++jx)
      g[static_cast<std::size_t>(jy) * Q + jx] = q.exact2(double(jx) / (Q - 1), double(jy) / (Q - 1));
  CHECK(relative_l2_error(g, q, Q) < 1e-14);
  CHECK(default_grid_points(Family::interval) == 4097);
  CHECK(default_grid_points(Family::square) == 513);
}
