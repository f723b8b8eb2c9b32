#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irbp/quadrature.hpp"

#include <cmath>

using namespace irbp;

TEST_CASE("polynomials integrate exactly") {
  auto x5 = [](double x) { return x * x * x * x * x; };
  CHECK(integrate_adaptive(x5, 0.0, 1.0) == doctest::Approx(1.0 / 6).epsilon(1e-13));
  auto x13 = [](double x) { return std::pow(x, 13); };
  CHECK(integrate_adaptive(x13, -1.0, 2.0) == doctest::Approx((16384.0 - 1.0) / 14).epsilon(1e-12));
  CHECK(integrate_adaptive(x5, 1.0, 1.0) == 0.0);
  CHECK(integrate_adaptive(x5, 1.0, 0.0) == doctest::Approx(-1.0 / 6).epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrands") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0) ==
        doctest::Approx(M_E - 1.0).epsilon(1e-12));
  double full = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 2.0 * M_PI);
  CHECK(std::fabs(full) < 1e-12);
}

TEST_CASE("sharp peak resolved when listed as a breakpoint") {
  double alpha = 100.0 * M_PI, c = 0.25;
  auto f = [=](double x) {
    double t = alpha * (x - c);
    double d = 1.0 + t * t;
    return 2.0 * alpha * alpha * alpha * (x - c) / (d * d);
  };
  // antiderivative is -alpha / (1 + alpha^2 (x-c)^2)
  auto F = [=](double x) {
    double t = alpha * (x - c);
    return -alpha / (1.0 + t * t);
  };
  double exact = F(1.0) - F(-1.0);
  double got = integrate_adaptive(f, -1.0, 1.0, 1e-11, {c});
  CHECK(got == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("discontinuity hits the depth cap") {
  auto step = [](double x) { return x > 0.3333333 ? 1.0 : 0.0; };
  CHECK_THROWS_AS(integrate_adaptive(step, 0.0, 1.0, 1e-13, {}, 10), QuadratureError);
  // with the jump listed as a breakpoint it is exact
  CHECK(integrate_adaptive(step, 0.0, 1.0, 1e-12, {0.3333333}) ==
        doctest::Approx(1.0 - 0.3333333).epsilon(1e-12));
}

TEST_CASE("triangle rule on polynomials") {
  Triangle ref{0.0, 0.0, 1.0, 0.0, 0.0, 1.0};
  auto one = [](double, double) { return 1.0; };
  CHECK(integrate_triangle_adaptive(one, ref) == doctest::Approx(0.5).epsilon(1e-13));
  auto fx = [](double x, double) { return x; };
  CHECK(integrate_triangle_adaptive(fx, ref) == doctest::Approx(1.0 / 6).epsilon(1e-13));
  auto f22 = [](double x, double y) { return x * x * y * y; };
  CHECK(integrate_triangle_adaptive(f22, ref) == doctest::Approx(1.0 / 180).epsilon(1e-12));
  auto f6 = [](double x, double y) { return std::pow(x, 6) + std::pow(y, 6); };
  CHECK(integrate_triangle_adaptive(f6, ref) == doctest::Approx(1.0 / 28).epsilon(1e-10));
}

TEST_CASE("triangle orientation and degeneracy") {
  auto fx = [](double x, double) { return x; };
  Triangle flipped{0.0, 0.0, 0.0, 1.0, 1.0, 0.0};
  CHECK(integrate_triangle_adaptive(fx, flipped) == doctest::Approx(1.0 / 6).epsilon(1e-12));
  Triangle line{0.0, 0.0, 1.0, 1.0, 2.0, 2.0};
  CHECK(integrate_triangle_adaptive(fx, line) == 0.0);
  Triangle shifted{2.0, 3.0, 3.0, 3.0, 2.0, 4.0};
  CHECK(integrate_triangle_adaptive(fx, shifted) == doctest::Approx(0.5 * (2.0 + 1.0 / 3)).epsilon(1e-12));
}

TEST_CASE("smooth bump over a triangle matches a refined reference") {
  auto bump = [](double x, double y) { return std::exp(-4.0 * (x * x + y * y)); };
  Triangle t{-1.0, -1.0, 2.0, -0.5, 0.0, 1.5};
  double coarse = integrate_triangle_adaptive(bump, t, 1e-10);
  double fine = integrate_triangle_adaptive(bump, t, 1e-12);
  CHECK(coarse == doctest::Approx(fine).epsilon(1e-9));
}
