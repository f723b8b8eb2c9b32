#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irbp/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace irbp;

namespace {

std::vector<double> rand_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 31, 100, 1000, 4097};

} // namespace

TEST_CASE("scalar reference values") {
  const kernels::Backend& s = kernels::scalar_backend();
  std::vector<double> x{1.0, -2.0, 3.0};
  std::vector<double> y{4.0, 5.0, -6.0};
  CHECK(s.dot(x.data(), y.data(), 3) == doctest::Approx(-24.0));
  CHECK(s.nrm2sq(x.data(), 3) == doctest::Approx(14.0));
  CHECK(s.asum(x.data(), 3) == doctest::Approx(6.0));
  CHECK(s.amax(x.data(), 3) == 2);
  s.axpy(2.0, x.data(), y.data(), 3);
  CHECK(y[0] == doctest::Approx(6.0));
  CHECK(y[1] == doctest::Approx(1.0));
  CHECK(y[2] == doctest::Approx(0.0));
  s.scale(-1.0, y.data(), 3);
  CHECK(y[0] == doctest::Approx(-6.0));
  CHECK(s.dot(x.data(), y.data(), 0) == 0.0);
}

TEST_CASE("active backend matches scalar reference") {
  const kernels::Backend& a = kernels::active_backend();
  const kernels::Backend& s = kernels::scalar_backend();
  INFO("active backend: ", a.name);
  unsigned seed = 1;
  for (std::size_t n : sizes) {
    auto x = rand_vec(n, seed++);
    auto y = rand_vec(n, seed++);
    // FMA and lane-wise accumulation reorder the sums; allow rounding slack
    // proportional to length.
    double tol = 1e-14 * (double(n) + 1.0);
    double ds = s.dot(x.data(), y.data(), n);
    double da = a.dot(x.data(), y.data(), n);
    CHECK(std::fabs(ds - da) <= tol * (1.0 + std::fabs(ds)));
    double ns = s.nrm2sq(x.data(), n);
    double na = a.nrm2sq(x.data(), n);
    CHECK(std::fabs(ns - na) <= tol * (1.0 + ns));
    double ss = s.asum(x.data(), n);
    double sa = a.asum(x.data(), n);
    CHECK(std::fabs(ss - sa) <= tol * (1.0 + ss));
    if (n > 0) CHECK(a.amax(x.data(), n) == s.amax(x.data(), n));

    auto y1 = y, y2 = y;
    s.axpy(0.7, x.data(), y1.data(), n);
    a.axpy(0.7, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(y1[i] - y2[i]) <= 1e-15 * (1.0 + std::fabs(y1[i])));

    auto x1 = x, x2 = x;
    s.scale(-1.25, x1.data(), n);
    a.scale(-1.25, x2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(x1[i] == x2[i]);
  }
}

TEST_CASE("amax picks the first index on ties") {
  const kernels::Backend& a = kernels::active_backend();
  std::vector<double> v(37, 0.0);
  v[5] = -3.0;
  v[11] = 3.0;
  v[30] = 3.0;
  CHECK(a.amax(v.data(), v.size()) == 5);
  CHECK(kernels::scalar_backend().amax(v.data(), v.size()) == 5);
  std::vector<double> z(8, 0.0);
  CHECK(a.amax(z.data(), z.size()) == 0);
}

TEST_CASE("force_backend pins and restores") {
  kernels::force_backend(&kernels::scalar_backend());
  CHECK(kernels::active_backend().name == "scalar");
  kernels::force_backend(nullptr);
  std::vector<double> x{1.0, 2.0};
  CHECK(kernels::dot(x.data(), x.data(), 2) == doctest::Approx(5.0));
}
